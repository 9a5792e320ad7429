#ifndef SEARCH_RUN_H
#define SEARCH_RUN_H

#include "df_policy.h"
#include "lookahead_bfs.h"

namespace search {

// Dispatches on cfg.algorithm.
SearchResult run_search(const grounding::GroundTask &task,
                        const policy::DckBundle *dck, const SearchConfig &cfg,
                        const SolutionCallback &on_solution = {});

// Runs the configured search in anytime mode and returns the stream of
// strictly improving solutions, in discovery order (the paper's
// upper-bound pruning: after a solution of length L, nodes reaching
// that length are pruned).
std::vector<SearchResult> run_anytime(const grounding::GroundTask &task,
                                      const policy::DckBundle *dck,
                                      SearchConfig cfg);

// Replays the plan from the initial state; true iff every action is
// applicable in sequence and the final state satisfies the goals.
bool validate_plan(const grounding::GroundTask &task,
                   const std::vector<int> &plan);

}

#endif
