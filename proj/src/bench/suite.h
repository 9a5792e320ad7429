#ifndef BENCH_SUITE_H
#define BENCH_SUITE_H

#include "score.h"

#include "../grounding/ground_task.h"
#include "../policy/dck.h"
#include "../search/search_types.h"

#include <string>
#include <vector>

namespace bench {

struct SuiteConfig {
    std::string id;
    search::SearchConfig search;
    const policy::DckBundle *dck = nullptr;
};

struct SuiteProblem {
    std::string id;
    const grounding::GroundTask *task = nullptr;
};

/*
  Runs every (config, problem) pair under the per-run time bound on a
  bounded worker pool. Every returned plan is replay-validated before it
  counts; an invalid plan marks the run failed and is reported loudly on
  stderr as a soundness bug.
*/
std::vector<RunRecord> run_suite(const std::vector<SuiteConfig> &configs,
                                 const std::vector<SuiteProblem> &problems,
                                 int jobs = 1);

}

#endif
