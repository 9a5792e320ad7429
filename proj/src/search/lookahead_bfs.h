#ifndef SEARCH_LOOKAHEAD_BFS_H
#define SEARCH_LOOKAHEAD_BFS_H

#include "search_types.h"

#include "../policy/dck.h"

namespace search {

/*
  Weighted best-first search ordered by f(n) = w*h(n) + g(n) (ties:
  lower h, then FIFO), extended with policy lookahead states: before the
  standard successors of an expanded node are added, the policy ordering
  is applied repeatedly (up to cfg.horizon steps) and each reached state
  joins the open list. States are evaluated when added; repeats reuse
  the stored evaluation and are pruned unless strictly cheaper.

  Algorithm::kLookaheadBfsHa admits only helpful-action successors into
  the open list; the rest wait in a secondary FIFO from which one node
  is admitted whenever the open list runs empty.

  dck_source: trees uses DT-Filter-Sort for the lookahead ordering,
  ff-order replaces it with the FF-heuristic ordering (LH-BFS baseline),
  none disables lookahead entirely (plain weighted BFS / BFS-HA).

  With cfg.anytime the search continues after each solution, pruning
  nodes with f >= incumbent plan length.
*/
SearchResult hcontext_lookahead_bfs(const grounding::GroundTask &task,
                                    const policy::DckBundle *dck,
                                    const SearchConfig &cfg,
                                    const SolutionCallback &on_solution = {});

}

#endif
