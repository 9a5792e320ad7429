#ifndef SEARCH_DF_POLICY_H
#define SEARCH_DF_POLICY_H

#include "search_types.h"

#include "../policy/dck.h"

namespace search {

/*
  Depth-first search over the policy ordering: nodes are evaluated upon
  extraction; dead-ends (h = infinity) are discarded; h = 0 returns the
  path. Successors of the ordered subset AA' go to the front of the open
  list preserving their order, everything else to the delayed list (a
  stack), from which exactly one node migrates whenever the open list
  runs empty. A candidate is inserted only if its state is new or
  reached with strictly lower g.

  dck_source mapping: trees is the policy configuration, none is the
  DF-HA baseline, ff-order the GR-HA baseline (helpful successors sorted
  ascending by their FF h).

  With cfg.anytime, every solution is reported through the callback and
  the search continues, pruning nodes whose g reaches the incumbent plan
  length; the returned result is the last (best) solution.
*/
SearchResult df_hcontext_policy(const grounding::GroundTask &task,
                                const policy::DckBundle *dck,
                                const SearchConfig &cfg,
                                const SolutionCallback &on_solution = {});

}

#endif
