#include "lookahead_bfs.h"

#include "sorters.h"

#include "../policy/context.h"
#include "../util/timer.h"

#include <algorithm>
#include <deque>
#include <queue>

using namespace std;
using grounding::State;

namespace search {

namespace {

struct BfsNode {
    State state;
    int parent;
    int action;
    int g;
};

struct HeapItem {
    long long f;  // weight-scaled: w_num * h + w_den * g
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

struct PendingSuccessor {
    int parent;
    int action;
};

class BfsSearch {
    const grounding::GroundTask &task;
    const policy::DckBundle *dck;
    const SearchConfig &cfg;
    const SolutionCallback &on_solution;

    SearchResult result;
    util::CountdownTimer timer;
    relaxed::Evaluator evaluator;
    StateTable table;
    ActionSorter sorter;

    vector<BfsNode> nodes;
    priority_queue<HeapItem, vector<HeapItem>, greater<HeapItem>> open;
    deque<PendingSuccessor> secondary;
    long seq = 0;
    long long weight_num;
    long long weight_den;
    int incumbent_length = numeric_limits<int>::max();

    long long scaled_f(int h, int g) const {
        return weight_num * h + weight_den * static_cast<long long>(g);
    }
    bool bound_prunes(long long f) const {
        return cfg.anytime && incumbent_length != numeric_limits<int>::max() &&
               f >= weight_den * static_cast<long long>(incumbent_length);
    }

public:
    BfsSearch(const grounding::GroundTask &task, const policy::DckBundle *dck,
              const SearchConfig &cfg, const SolutionCallback &on_solution)
        : task(task), dck(dck), cfg(cfg), on_solution(on_solution),
          timer(cfg.time_bound), evaluator(task),
          sorter(task, dck, cfg.dck_source, table, evaluator, result.stats),
          weight_num(cfg.weight.numerator()),
          weight_den(cfg.weight.denominator()) {}

    // Returns the created node id, or -1 when the state was not added:
    // repeated with no lower g, recognized dead-end, or out of bound.
    int add_to_open(int parent, int action, State state, int g) {
        StateRecord &record = table[state];
        if (record.best_g <= g)
            return -1;
        const StateRecord &eval =
            evaluate_cached(table, evaluator, state, result.stats);
        if (eval.h == relaxed::kInfinity)
            return -1;
        long long f = scaled_f(eval.h, g);
        if (bound_prunes(f))
            return -1;
        table[state].best_g = g;
        nodes.push_back(BfsNode{move(state), parent, action, g});
        int node_id = static_cast<int>(nodes.size()) - 1;
        open.push(HeapItem{f, eval.h, seq++, node_id});
        return node_id;
    }

    vector<int> path_actions(int node_id) const {
        vector<int> actions;
        for (int current = node_id; nodes[current].parent != -1;
             current = nodes[current].parent)
            actions.push_back(nodes[current].action);
        reverse(actions.begin(), actions.end());
        return actions;
    }

    // Records a solution; returns true when the search should stop.
    bool handle_solution(int node_id) {
        result.solved = true;
        result.plan = path_actions(node_id);
        result.stats.time = timer.elapsed_seconds();
        if (on_solution)
            on_solution(result);
        if (!cfg.anytime)
            return true;
        incumbent_length = nodes[node_id].g;
        return false;
    }

    // Fig-13-style lookahead: repeatedly apply the best policy action,
    // adding each reached state to the open list. Returns the deepest
    // node added (node_id itself if none).
    int add_lookahead_successors(int node_id, int horizon) {
        if (horizon == 0)
            return node_id;
        State state = nodes[node_id].state;
        int g = nodes[node_id].g;
        const StateRecord &record = table.at(state);
        policy::HelpfulContext ctx =
            policy::build_helpful_context(task, state, record.helpful);
        vector<int> applicable = grounding::applicable_actions(task, state);
        vector<int> ordered = sorter.order(state, applicable, ctx);
        for (int action_id : ordered) {
            State child =
                grounding::apply_action(state, task.actions[action_id]);
            int child_id = add_to_open(node_id, action_id, move(child), g + 1);
            if (child_id >= 0) {
                ++result.stats.lookahead;
                if (task.satisfies_goals(nodes[child_id].state))
                    return child_id;
                return add_lookahead_successors(child_id, horizon - 1);
            }
        }
        return node_id;
    }

    SearchResult run() {
        bool ha_variant = cfg.algorithm == Algorithm::kLookaheadBfsHa;
        add_to_open(-1, -1, task.init, 0);

        while (true) {
            if (open.empty()) {
                // One node migrates from the secondary list per drought.
                bool admitted = false;
                while (!secondary.empty() && !admitted) {
                    PendingSuccessor pending = secondary.front();
                    secondary.pop_front();
                    State child = grounding::apply_action(
                        nodes[pending.parent].state,
                        task.actions[pending.action]);
                    admitted = add_to_open(pending.parent, pending.action,
                                           move(child),
                                           nodes[pending.parent].g + 1) >= 0;
                }
                if (!admitted)
                    break;
                continue;
            }
            if (timer.expired()) {
                result.timeout = true;
                break;
            }
            HeapItem item = open.top();
            open.pop();
            int node_id = item.node;
            StateRecord &record = table.at(nodes[node_id].state);
            if (nodes[node_id].g > record.best_g)
                continue;  // superseded by a cheaper duplicate
            if (record.expanded_g <= nodes[node_id].g)
                continue;
            if (bound_prunes(item.f))
                continue;

            if (task.satisfies_goals(nodes[node_id].state)) {
                if (handle_solution(node_id))
                    return result;
                continue;
            }
            record.expanded_g = nodes[node_id].g;

            ++result.stats.expanded;
            if (cfg.record_expansions)
                result.expansion_trace.push_back(nodes[node_id].state);

            if (cfg.dck_source != DckSource::kNone && cfg.horizon > 0) {
                int deep = add_lookahead_successors(node_id, cfg.horizon);
                if (deep != node_id &&
                    task.satisfies_goals(nodes[deep].state)) {
                    if (handle_solution(deep))
                        return result;
                }
            }

            State state = nodes[node_id].state;  // arena may reallocate
            int g = nodes[node_id].g;
            vector<char> helpful_mask;
            if (ha_variant) {
                helpful_mask.assign(task.actions.size(), 0);
                for (int action_id : table.at(state).helpful)
                    helpful_mask[action_id] = 1;
            }
            for (int action_id : grounding::applicable_actions(task, state)) {
                if (ha_variant && !helpful_mask[action_id]) {
                    secondary.push_back(PendingSuccessor{node_id, action_id});
                    continue;
                }
                State child =
                    grounding::apply_action(state, task.actions[action_id]);
                add_to_open(node_id, action_id, move(child), g + 1);
            }
        }
        result.stats.time = timer.elapsed_seconds();
        return result;
    }
};

}

SearchResult hcontext_lookahead_bfs(const grounding::GroundTask &task,
                                    const policy::DckBundle *dck,
                                    const SearchConfig &cfg,
                                    const SolutionCallback &on_solution) {
    BfsSearch search(task, dck, cfg, on_solution);
    return search.run();
}

}
