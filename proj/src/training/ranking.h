#ifndef TRAINING_RANKING_H
#define TRAINING_RANKING_H

#include "bnb.h"

#include "../util/rational.h"

#include <vector>

namespace training {

// Number of on_solution-tagged successors of the tree node reached by
// the plan's i-th action (1-based). The goal node has no children, so
// the last action scores 0.
int phi_commitment(const SolutionSet &sols, const Plan &plan, int i);

// Per-fact supporter counts |{a in A : l in add(a)}| over the full
// ground action set.
std::vector<int> supporter_counts(const grounding::GroundTask &task);

// 1 / min over add effects of the supporter count; 0 for an action with
// an empty add list.
util::Rational phi_difficulty(const grounding::GroundTask &task,
                              const grounding::GroundAction &action,
                              const std::vector<int> &supporters);

struct RankedSolutions {
    std::vector<util::Rational> rank_commitment;  // per plan
    std::vector<util::Rational> rank_difficulty;
    std::vector<int> top;  // plan indices, ascending
};

/*
  ranking(plan, phi) = sum over i of ((n - i) / n) * phi(a_{i+1}),
  computed in exact rational arithmetic. Plans are ranked by the
  commitment preference; ties are broken with the difficulty preference
  and the surviving maximal set is `top`.
*/
RankedSolutions rank_solutions(const grounding::GroundTask &task,
                               const SolutionSet &sols);

}

#endif
