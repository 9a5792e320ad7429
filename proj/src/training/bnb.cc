#include "bnb.h"

#include "../util/timer.h"

#include <algorithm>
#include <queue>

using namespace std;
using grounding::GroundTask;
using grounding::State;

namespace training {

namespace {

struct HeapItem {
    long long f;
    int h;
    long seq;
    int node;

    bool operator>(const HeapItem &other) const {
        if (f != other.f)
            return f > other.f;
        if (h != other.h)
            return h > other.h;
        return seq > other.seq;
    }
};

}

SolutionSet bfs_bnb_solve_all(const GroundTask &task, double time_bound_seconds,
                              long max_nodes) {
    SolutionSet result;
    util::CountdownTimer timer(time_bound_seconds);
    relaxed::Evaluator evaluator(task);

    priority_queue<HeapItem, vector<HeapItem>, greater<HeapItem>> open;
    long long incumbent = numeric_limits<long long>::max();
    vector<int> solution_leaves;
    long seq = 0;

    relaxed::RelaxedResult root_eval = evaluator.evaluate(task.init);
    result.nodes_evaluated = 1;
    result.nodes_generated = 1;
    if (!root_eval.is_dead_end()) {
        result.tree.push_back(
            BnbNode{0, -1, -1, 0, root_eval.h, task.init, {}, false, false});
        open.push(HeapItem{root_eval.h, root_eval.h, seq++, 0});
    }

    bool aborted = false;
    while (!open.empty()) {
        if (timer.expired() || result.nodes_generated >= max_nodes) {
            aborted = true;
            break;
        }
        HeapItem item = open.top();
        open.pop();
        if (item.f > incumbent)
            continue;
        int node_id = item.node;

        if (task.satisfies_goals(result.tree[node_id].state)) {
            int g = result.tree[node_id].g;
            if (g < incumbent) {
                incumbent = g;
                solution_leaves.clear();
            }
            solution_leaves.push_back(node_id);
            continue;  // solution nodes are not expanded
        }

        // The tree vector reallocates while children are appended, so
        // work on copies of the parent's fields.
        State parent_state = result.tree[node_id].state;
        int parent_g = result.tree[node_id].g;
        result.tree[node_id].expanded = true;
        for (int action_id : grounding::applicable_actions(task, parent_state)) {
            const grounding::GroundAction &action = task.actions[action_id];
            State child_state = grounding::apply_action(parent_state, action);
            relaxed::RelaxedResult eval = evaluator.evaluate(child_state);
            ++result.nodes_evaluated;
            if (eval.is_dead_end())
                continue;
            long long f = static_cast<long long>(parent_g) + 1 + eval.h;
            if (f > incumbent)
                continue;
            int child_id = static_cast<int>(result.tree.size());
            result.tree.push_back(BnbNode{child_id, node_id, action_id,
                                          parent_g + 1, eval.h,
                                          move(child_state), {}, false, false});
            result.tree[node_id].children.push_back(child_id);
            open.push(HeapItem{f, eval.h, seq++, child_id});
            ++result.nodes_generated;
        }
    }

    result.exhausted = !aborted;
    if (!solution_leaves.empty() && result.exhausted) {
        result.best_cost = static_cast<int>(incumbent);
        for (int leaf : solution_leaves) {
            Plan plan;
            int current = leaf;
            while (current != -1) {
                const BnbNode &node = result.tree[current];
                result.tree[current].on_solution = true;
                plan.node_path.push_back(current);
                if (node.action != -1)
                    plan.actions.push_back(node.action);
                current = node.parent;
            }
            reverse(plan.node_path.begin(), plan.node_path.end());
            reverse(plan.actions.begin(), plan.actions.end());
            result.plans.push_back(move(plan));
        }
        sort(result.plans.begin(), result.plans.end(),
             [](const Plan &a, const Plan &b) {return a.actions < b.actions;});
    }
    return result;
}

}
