#ifndef RELAXED_RELAXED_PLAN_H
#define RELAXED_RELAXED_PLAN_H

#include "../grounding/ground_task.h"

#include <limits>
#include <vector>

namespace relaxed {

constexpr int kInfinity = std::numeric_limits<int>::max();

/*
  Layered reachability structure built ignoring delete effects. Layers
  are cumulative and represented by first-appearance indices:
  F_i = {f : first_fact_layer[f] <= i}, A_i = {a : first_action_layer[a] <= i}.
  Construction stops when all goals are reached (t = that fact layer) or
  at the fixpoint F_{t+1} = F_t.
*/
struct RelaxedPlanningGraph {
    int num_layers = 0;  // t; fact layers F_0..F_t, action layers A_0..A_{t-1}
    bool goals_reachable = false;
    std::vector<int> first_fact_layer;    // per fact id, -1 if unreached
    std::vector<int> first_action_layer;  // per action id, -1 if unreached

    std::vector<int> fact_layer(int i) const;
    std::vector<int> action_layer(int i) const;
};

struct RelaxedResult {
    int h = 0;                       // kInfinity if goals unreachable
    std::vector<int> relaxed_plan;   // distinct selected action ids, sorted
    std::vector<int> helpful;        // action ids, sorted
    // goal_sets[i] = G_i, ascending fact ids; index 0 holds the goals
    // already true in F_0 (never processed by extraction).
    std::vector<std::vector<int>> goal_sets;

    bool is_dead_end() const {return h == kInfinity;}
};

RelaxedPlanningGraph build_rpg(const grounding::GroundTask &task,
                               const grounding::State &s);

/*
  FF-style backward extraction. Goals are assigned to the goal set of
  their first layer. Layers are processed from G_t down to G_1; each
  still-unsatisfied goal selects the achiever with minimal first action
  layer (ties: lowest action id). Preconditions of a newly selected
  action join the goal set of their first layer; the action's add
  effects satisfy facts at times i and i-1. h counts distinct selected
  actions. Returns an infinite result on a goals-unreachable graph.
*/
RelaxedResult extract_relaxed_plan(const grounding::GroundTask &task,
                                   const RelaxedPlanningGraph &rpg);

// helpful(s) = {a in A_0 | add(a) intersects G_1}.
std::vector<int> helpful_actions(const grounding::GroundTask &task,
                                 const RelaxedResult &result,
                                 const RelaxedPlanningGraph &rpg);

/*
  Production evaluator: one instance per search, holds the fact/action
  indices and scratch buffers. evaluate() returns h, the relaxed plan
  and the helpful set in one call so searches can cache both per node.
*/
class Evaluator {
    const grounding::GroundTask &task;
    std::vector<std::vector<int>> pre_index;  // fact id -> actions with it in pre
    std::vector<std::vector<int>> add_index;  // fact id -> actions adding it
    long num_evaluations_ = 0;

public:
    explicit Evaluator(const grounding::GroundTask &task);

    RelaxedResult evaluate(const grounding::State &s);
    long num_evaluations() const {return num_evaluations_;}

    const std::vector<int> &achievers(int fact_id) const {
        return add_index[fact_id];
    }
};

}

#endif
