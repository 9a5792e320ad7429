#include "sorters.h"

#include <algorithm>

using namespace std;
using grounding::State;

namespace search {

const StateRecord &evaluate_cached(StateTable &table,
                                   relaxed::Evaluator &evaluator,
                                   const State &s, SearchStats &stats) {
    StateRecord &record = table[s];
    if (!record.evaluated) {
        relaxed::RelaxedResult result = evaluator.evaluate(s);
        record.h = result.h;
        record.helpful = move(result.helpful);
        record.evaluated = true;
        ++stats.evaluated;
    }
    return record;
}

vector<int> ActionSorter::order(const State &s, const vector<int> &applicable,
                                const policy::HelpfulContext &ctx) {
    switch (source) {
    case DckSource::kTrees: {
        static const policy::DckBundle empty_bundle;
        const policy::DckBundle &bundle = dck ? *dck : empty_bundle;
        return policy::dt_filter_sort(task, applicable, ctx, bundle)
            .action_ids();
    }
    case DckSource::kNone:
        return ctx.helpful;
    case DckSource::kFfOrder: {
        vector<pair<int, int>> keyed;  // (successor h, action id)
        for (int action_id : ctx.helpful) {
            State child = grounding::apply_action(s, task.actions[action_id]);
            const StateRecord &record =
                evaluate_cached(table, evaluator, child, stats);
            keyed.emplace_back(record.h, action_id);
        }
        sort(keyed.begin(), keyed.end());
        vector<int> result;
        result.reserve(keyed.size());
        for (const auto &[h, action_id] : keyed)
            result.push_back(action_id);
        return result;
    }
    }
    return {};
}

}
