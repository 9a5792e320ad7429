#include "relaxed_plan.h"

#include <algorithm>
#include <cassert>

using namespace std;
using grounding::GroundAction;
using grounding::GroundTask;
using grounding::State;

namespace relaxed {

vector<int> RelaxedPlanningGraph::fact_layer(int i) const {
    vector<int> result;
    for (size_t f = 0; f < first_fact_layer.size(); ++f)
        if (first_fact_layer[f] >= 0 && first_fact_layer[f] <= i)
            result.push_back(static_cast<int>(f));
    return result;
}

vector<int> RelaxedPlanningGraph::action_layer(int i) const {
    vector<int> result;
    for (size_t a = 0; a < first_action_layer.size(); ++a)
        if (first_action_layer[a] >= 0 && first_action_layer[a] <= i)
            result.push_back(static_cast<int>(a));
    return result;
}

namespace {

struct TaskIndex {
    vector<vector<int>> pre_index;
    vector<vector<int>> add_index;

    explicit TaskIndex(const GroundTask &task) {
        pre_index.resize(task.facts.size());
        add_index.resize(task.facts.size());
        for (const GroundAction &action : task.actions) {
            for (int f : action.pre)
                pre_index[f].push_back(action.id);
            for (int f : action.add)
                add_index[f].push_back(action.id);
        }
    }
};

RelaxedPlanningGraph build_rpg_indexed(const GroundTask &task, const State &s,
                                       const vector<vector<int>> &pre_index) {
    RelaxedPlanningGraph rpg;
    int num_facts = task.facts.size();
    int num_actions = static_cast<int>(task.actions.size());
    rpg.first_fact_layer.assign(num_facts, -1);
    rpg.first_action_layer.assign(num_actions, -1);

    int goals_missing = 0;
    vector<char> is_goal(num_facts, 0);
    for (int g : task.goals) {
        if (!is_goal[g]) {
            is_goal[g] = 1;
            ++goals_missing;
        }
    }

    vector<int> unsat_count(num_actions);
    for (const GroundAction &action : task.actions)
        unsat_count[action.id] = static_cast<int>(action.pre.size());

    vector<int> frontier;
    auto reach_fact = [&](int f, int layer, vector<int> &out) {
        if (rpg.first_fact_layer[f] == -1) {
            rpg.first_fact_layer[f] = layer;
            out.push_back(f);
            if (is_goal[f])
                --goals_missing;
        }
    };
    for (int f : s)
        reach_fact(f, 0, frontier);
    for (int f : task.static_facts)
        reach_fact(f, 0, frontier);

    if (goals_missing == 0) {
        rpg.num_layers = 0;
        rpg.goals_reachable = true;
        return rpg;
    }

    vector<int> newly_applicable;
    for (const GroundAction &action : task.actions)
        if (action.pre.empty()) {
            rpg.first_action_layer[action.id] = 0;
            newly_applicable.push_back(action.id);
        }

    int layer = 0;
    while (true) {
        for (int f : frontier) {
            for (int a : pre_index[f]) {
                if (--unsat_count[a] == 0) {
                    rpg.first_action_layer[a] = layer;
                    newly_applicable.push_back(a);
                }
            }
        }
        vector<int> next_frontier;
        for (int a : newly_applicable)
            for (int f : task.actions[a].add)
                reach_fact(f, layer + 1, next_frontier);
        newly_applicable.clear();

        if (goals_missing == 0) {
            rpg.num_layers = layer + 1;
            rpg.goals_reachable = true;
            return rpg;
        }
        if (next_frontier.empty()) {
            // F_{layer+1} = F_layer: fixpoint without the goals.
            rpg.num_layers = layer;
            rpg.goals_reachable = false;
            return rpg;
        }
        frontier = move(next_frontier);
        ++layer;
    }
}

RelaxedResult extract_indexed(const GroundTask &task,
                              const RelaxedPlanningGraph &rpg,
                              const vector<vector<int>> &add_index) {
    RelaxedResult result;
    if (!rpg.goals_reachable) {
        result.h = kInfinity;
        return result;
    }
    int t = rpg.num_layers;
    result.goal_sets.assign(t + 1, {});
    for (int g : task.goals)
        result.goal_sets[rpg.first_fact_layer[g]].push_back(g);

    int num_facts = task.facts.size();
    // marked[time * num_facts + fact]: fact satisfied at that time by a
    // previously selected action.
    vector<char> marked(static_cast<size_t>(t + 1) * num_facts, 0);
    vector<char> selected(task.actions.size(), 0);

    for (int i = t; i >= 1; --i) {
        vector<int> &layer_goals = result.goal_sets[i];
        sort(layer_goals.begin(), layer_goals.end());
        layer_goals.erase(unique(layer_goals.begin(), layer_goals.end()),
                          layer_goals.end());
        for (int g : layer_goals) {
            if (marked[static_cast<size_t>(i) * num_facts + g])
                continue;
            int best_action = -1;
            int best_layer = kInfinity;
            for (int a : add_index[g]) {
                int action_layer = rpg.first_action_layer[a];
                if (action_layer < 0)
                    continue;
                if (action_layer < best_layer) {
                    best_layer = action_layer;
                    best_action = a;
                }
            }
            assert(best_action >= 0 && best_layer <= i - 1);
            if (!selected[best_action]) {
                selected[best_action] = 1;
                for (int p : task.actions[best_action].pre) {
                    int first = rpg.first_fact_layer[p];
                    if (first >= 1)
                        result.goal_sets[first].push_back(p);
                }
            }
            for (int f : task.actions[best_action].add) {
                marked[static_cast<size_t>(i) * num_facts + f] = 1;
                marked[static_cast<size_t>(i - 1) * num_facts + f] = 1;
            }
        }
    }
    sort(result.goal_sets[0].begin(), result.goal_sets[0].end());

    for (size_t a = 0; a < selected.size(); ++a)
        if (selected[a])
            result.relaxed_plan.push_back(static_cast<int>(a));
    result.h = static_cast<int>(result.relaxed_plan.size());
    return result;
}

vector<int> helpful_from(const GroundTask &task, const RelaxedResult &result,
                         const RelaxedPlanningGraph &rpg) {
    vector<int> helpful;
    if (result.is_dead_end() || rpg.num_layers == 0)
        return helpful;
    const vector<int> &g1 = result.goal_sets[1];
    for (const GroundAction &action : task.actions) {
        if (rpg.first_action_layer[action.id] != 0)
            continue;
        for (int f : action.add) {
            if (binary_search(g1.begin(), g1.end(), f)) {
                helpful.push_back(action.id);
                break;
            }
        }
    }
    return helpful;
}

}

RelaxedPlanningGraph build_rpg(const GroundTask &task, const State &s) {
    TaskIndex index(task);
    return build_rpg_indexed(task, s, index.pre_index);
}

RelaxedResult extract_relaxed_plan(const GroundTask &task,
                                   const RelaxedPlanningGraph &rpg) {
    TaskIndex index(task);
    return extract_indexed(task, rpg, index.add_index);
}

vector<int> helpful_actions(const GroundTask &task, const RelaxedResult &result,
                            const RelaxedPlanningGraph &rpg) {
    return helpful_from(task, result, rpg);
}

Evaluator::Evaluator(const GroundTask &task) : task(task) {
    TaskIndex index(task);
    pre_index = move(index.pre_index);
    add_index = move(index.add_index);
}

RelaxedResult Evaluator::evaluate(const State &s) {
    ++num_evaluations_;
    RelaxedPlanningGraph rpg = build_rpg_indexed(task, s, pre_index);
    RelaxedResult result = extract_indexed(task, rpg, add_index);
    if (!result.is_dead_end())
        result.helpful = helpful_from(task, result, rpg);
    return result;
}

}
