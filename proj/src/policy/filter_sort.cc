#include "filter_sort.h"

#include <algorithm>

using namespace std;
using util::Rational;

namespace policy {

Rational selection_ratio(long long selected, long long rejected) {
    long long total = selected + rejected;
    if (total == 0)
        return Rational(0);
    return Rational(selected, total);
}

namespace {

const char *kExampleId = "e0";
const char *kProblemId = "p0";

PrioritizedAction score_action(const grounding::GroundTask &task,
                               const DckBundle &dck,
                               const learner::IndexedFacts &facts,
                               int action_id, long long operator_count,
                               bool helpful) {
    PrioritizedAction entry;
    entry.action = action_id;
    entry.helpful = helpful;
    entry.operator_count = operator_count;

    const grounding::GroundAction &action = task.actions[action_id];
    const learner::RelationalTree *binding = dck.binding_tree(action.schema);
    if (binding) {
        vector<string> target_args = {kExampleId, kProblemId};
        target_args.insert(target_args.end(), action.args.begin(),
                           action.args.end());
        const learner::TreeNode &leaf =
            learner::classify(*binding, facts, target_args);
        long long selected = binding->count_for(leaf, "selected");
        long long rejected = binding->count_for(leaf, "rejected");
        entry.ratio = selection_ratio(selected, rejected);
        entry.binding_support = selected + rejected;
    }
    entry.priority = Rational(operator_count) + entry.ratio;
    return entry;
}

}

FilterSortResult dt_filter_sort(const grounding::GroundTask &task,
                                const vector<int> &applicable,
                                const HelpfulContext &ctx,
                                const DckBundle &dck) {
    FilterSortResult result;

    vector<int> ha, non_ha;
    for (int action_id : applicable) {
        if (binary_search(ctx.helpful.begin(), ctx.helpful.end(), action_id))
            ha.push_back(action_id);
        else
            non_ha.push_back(action_id);
    }

    if (dck.empty()) {
        // No trees: no ordering is computed for the helpful actions.
        for (int action_id : ha)
            result.actions.push_back(
                PrioritizedAction{action_id, Rational(1), true, 0, Rational(0),
                                  0});
        return result;
    }

    learner::IndexedFacts facts =
        encode_context(task, ctx, kExampleId, kProblemId);
    const learner::RelationalTree &op_tree = *dck.operator_tree;
    const learner::TreeNode &leaf =
        learner::classify(op_tree, facts, {kExampleId, kProblemId});
    result.operator_leaf = &leaf;

    Rational max_ha_priority(0);
    for (int action_id : ha) {
        long long count =
            op_tree.count_for(leaf, task.actions[action_id].schema);
        if (count <= 0)
            continue;
        PrioritizedAction entry =
            score_action(task, dck, facts, action_id, count, true);
        if (entry.priority > max_ha_priority)
            max_ha_priority = entry.priority;
        result.actions.push_back(move(entry));
    }
    for (int action_id : non_ha) {
        long long count =
            op_tree.count_for(leaf, task.actions[action_id].schema);
        if (Rational(count) > max_ha_priority)
            result.actions.push_back(
                score_action(task, dck, facts, action_id, count, false));
    }

    sort(result.actions.begin(), result.actions.end(),
         [](const PrioritizedAction &a, const PrioritizedAction &b) {
             if (a.priority != b.priority)
                 return b.priority < a.priority;
             if (a.helpful != b.helpful)
                 return a.helpful;
             return a.action < b.action;
         });
    return result;
}

}
