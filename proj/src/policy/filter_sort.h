#ifndef POLICY_FILTER_SORT_H
#define POLICY_FILTER_SORT_H

#include "context.h"
#include "dck.h"

#include "../util/rational.h"

#include <vector>

namespace policy {

// selected / (selected + rejected); zero when the denominator is zero.
util::Rational selection_ratio(long long selected, long long rejected);

struct PrioritizedAction {
    int action;
    util::Rational priority;
    bool helpful;
    long long operator_count = 0;  // operator-leaf count for the action
    util::Rational ratio;          // binding-tree selection ratio
    long long binding_support = 0; // selected + rejected at the binding leaf
};

struct FilterSortResult {
    // Non-increasing priority; ties put helpful actions first, then
    // ascending action id. Every entry has priority > 0.
    std::vector<PrioritizedAction> actions;
    const learner::TreeNode *operator_leaf = nullptr;  // null without trees

    std::vector<int> action_ids() const {
        std::vector<int> ids;
        ids.reserve(actions.size());
        for (const PrioritizedAction &entry : actions)
            ids.push_back(entry.action);
        return ids;
    }
};

/*
  Orders applicable actions with the decision trees: the context is
  classified once against the operator tree; helpful actions keep their
  operator-leaf count (dropped at count 0) plus their binding selection
  ratio; a non-helpful action enters only if its operator count strictly
  exceeds the maximum helpful priority. With an empty bundle the helpful
  actions are returned in generation order with uniform priority.
*/
FilterSortResult dt_filter_sort(const grounding::GroundTask &task,
                                const std::vector<int> &applicable,
                                const HelpfulContext &ctx,
                                const DckBundle &dck);

}

#endif
