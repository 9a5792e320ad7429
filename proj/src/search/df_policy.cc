#include "df_policy.h"

#include "sorters.h"

#include "../policy/context.h"
#include "../util/timer.h"

#include <algorithm>
#include <deque>

using namespace std;
using grounding::State;

namespace search {

namespace {

struct DfNode {
    State state;
    int parent;
    int action;
    int g;
};

vector<int> path_actions(const vector<DfNode> &nodes, int node_id) {
    vector<int> actions;
    for (int current = node_id; nodes[current].parent != -1;
         current = nodes[current].parent)
        actions.push_back(nodes[current].action);
    reverse(actions.begin(), actions.end());
    return actions;
}

}

SearchResult df_hcontext_policy(const grounding::GroundTask &task,
                                const policy::DckBundle *dck,
                                const SearchConfig &cfg,
                                const SolutionCallback &on_solution) {
    SearchResult result;
    util::CountdownTimer timer(cfg.time_bound);
    relaxed::Evaluator evaluator(task);
    StateTable table;
    ActionSorter sorter(task, dck, cfg.dck_source, table, evaluator,
                        result.stats);

    vector<DfNode> nodes;
    deque<int> open;
    vector<int> delayed;  // LIFO
    int incumbent_length = numeric_limits<int>::max();

    nodes.push_back(DfNode{task.init, -1, -1, 0});
    table[task.init].best_g = 0;
    open.push_back(0);

    auto try_insert = [&](const State &state, int parent, int action,
                          int g) -> int {
        if (cfg.anytime && g >= incumbent_length)
            return -1;
        StateRecord &record = table[state];
        if (record.best_g <= g)
            return -1;
        record.best_g = g;
        nodes.push_back(DfNode{state, parent, action, g});
        return static_cast<int>(nodes.size()) - 1;
    };

    while (true) {
        if (open.empty()) {
            if (delayed.empty())
                break;
            open.push_back(delayed.back());
            delayed.pop_back();
            continue;
        }
        if (timer.expired()) {
            result.timeout = true;
            break;
        }
        int node_id = open.front();
        open.pop_front();
        if (cfg.anytime && nodes[node_id].g >= incumbent_length)
            continue;

        const StateRecord &record =
            evaluate_cached(table, evaluator, nodes[node_id].state,
                            result.stats);
        if (record.h == relaxed::kInfinity)
            continue;  // recognized dead-end
        if (record.h == 0) {
            result.solved = true;
            result.plan = path_actions(nodes, node_id);
            result.stats.time = timer.elapsed_seconds();
            if (on_solution)
                on_solution(result);
            if (!cfg.anytime)
                return result;
            incumbent_length = nodes[node_id].g;
            continue;
        }

        // Copies: the node arena and the table may both reallocate while
        // successors are inserted.
        State state = nodes[node_id].state;
        int g = nodes[node_id].g;
        policy::HelpfulContext ctx =
            policy::build_helpful_context(task, state, record.helpful);
        vector<int> applicable = grounding::applicable_actions(task, state);
        vector<int> ordered = sorter.order(state, applicable, ctx);

        ++result.stats.expanded;
        if (cfg.record_expansions)
            result.expansion_trace.push_back(state);
        vector<int> accepted;
        for (int action_id : ordered) {
            State child =
                grounding::apply_action(state, task.actions[action_id]);
            int child_id = try_insert(child, node_id, action_id, g + 1);
            if (child_id >= 0)
                accepted.push_back(child_id);
        }
        // Front of the open list, preserving the AA' order.
        for (auto it = accepted.rbegin(); it != accepted.rend(); ++it)
            open.push_front(*it);

        vector<char> in_ordered(task.actions.size(), 0);
        for (int action_id : ordered)
            in_ordered[action_id] = 1;
        for (int action_id : applicable) {
            if (in_ordered[action_id])
                continue;
            State child =
                grounding::apply_action(state, task.actions[action_id]);
            int child_id = try_insert(child, node_id, action_id, g + 1);
            if (child_id >= 0)
                delayed.push_back(child_id);
        }
    }

    result.stats.time = timer.elapsed_seconds();
    return result;
}

}
