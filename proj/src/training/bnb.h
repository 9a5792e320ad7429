#ifndef TRAINING_BNB_H
#define TRAINING_BNB_H

#include "../grounding/ground_task.h"
#include "../relaxed/relaxed_plan.h"

#include <vector>

namespace training {

// One node of the explicit best-first branch-and-bound search tree.
// Repeated states are not pruned, so a node is exactly a path.
struct BnbNode {
    int id;
    int parent;      // -1 at the root
    int action;      // generating action id, -1 at the root
    int g;
    int h;
    grounding::State state;
    std::vector<int> children;  // node ids, ascending action order
    bool on_solution = false;
    bool expanded = false;
};

struct Plan {
    std::vector<int> actions;
    std::vector<int> node_path;  // node ids root..goal, length |actions|+1
};

struct SolutionSet {
    int best_cost = -1;  // -1 when no solution was found
    std::vector<Plan> plans;
    std::vector<BnbNode> tree;
    bool exhausted = false;
    long nodes_generated = 0;
    long nodes_evaluated = 0;

    bool usable() const {return exhausted && best_cost >= 0;}
};

/*
  Best-first branch and bound ordered by f(n) = g(n) + h_FF(n), without
  repeated-state pruning. Nodes with f(n) > incumbent best cost are
  pruned (strict, so equal-cost alternatives survive); a cheaper
  solution drops previously collected costlier plans. On completion all
  nodes of surviving plans carry the on_solution tag and plans are
  sorted lexicographically by action ids. A timeout or the node cap
  leaves exhausted = false and the caller must discard the set.
*/
SolutionSet bfs_bnb_solve_all(const grounding::GroundTask &task,
                              double time_bound_seconds,
                              long max_nodes = 1000000);

}

#endif
