#ifndef SEARCH_SORTERS_H
#define SEARCH_SORTERS_H

#include "search_types.h"

#include "../policy/filter_sort.h"
#include "../relaxed/relaxed_plan.h"

namespace search {

// Evaluates through the duplicate table: a state is computed at most
// once per search, repeats reuse the stored (h, helpful).
const StateRecord &evaluate_cached(StateTable &table,
                                   relaxed::Evaluator &evaluator,
                                   const grounding::State &s,
                                   SearchStats &stats);

/*
  Produces AA', the ordered action subset a node's successors are taken
  from. dck_source selects the strategy: trees runs DT-Filter-Sort;
  ff-order sorts the helpful actions by the FF heuristic of their
  successor states (ascending, ties by action id); none keeps the
  helpful actions in generation order.
*/
class ActionSorter {
    const grounding::GroundTask &task;
    const policy::DckBundle *dck;
    DckSource source;
    StateTable &table;
    relaxed::Evaluator &evaluator;
    SearchStats &stats;

public:
    ActionSorter(const grounding::GroundTask &task,
                 const policy::DckBundle *dck, DckSource source,
                 StateTable &table, relaxed::Evaluator &evaluator,
                 SearchStats &stats)
        : task(task), dck(dck), source(source), table(table),
          evaluator(evaluator), stats(stats) {}

    std::vector<int> order(const grounding::State &s,
                           const std::vector<int> &applicable,
                           const policy::HelpfulContext &ctx);
};

}

#endif
