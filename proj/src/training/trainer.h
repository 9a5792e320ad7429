#ifndef TRAINING_TRAINER_H
#define TRAINING_TRAINER_H

#include "examples.h"

#include "../learner/induce.h"
#include "../policy/dck.h"

#include <string>
#include <utility>
#include <vector>

namespace training {

struct TrainOptions {
    double time_bound = 60.0;  // per problem
    long max_nodes = 1000000;
    bool all_solutions = false;  // skip the ranking filter
};

struct TrainReport {
    int problems_used = 0;
    int problems_discarded = 0;  // not exhaustively explored in the bound
    int operator_examples = 0;
};

/*
  The training pipeline: solve each problem exhaustively with BFS-BnB,
  discard problems whose search did not finish inside the bound, rank
  the best-cost solutions, extract operator and binding examples from
  the top-ranked subset, and write the kb and bias files under
  prefix (<prefix>-ops.kb, <prefix>-<op>.kb, matching .bias files).
*/
TrainReport train_domain(
    const pddl::DomainModel &domain,
    const std::vector<std::pair<std::string, pddl::ProblemModel>> &problems,
    const std::string &prefix, const TrainOptions &options = {});

// In-memory form used by tests and the end-to-end pipeline.
struct TrainingData {
    learner::KnowledgeBase operator_kb;
    std::map<std::string, learner::KnowledgeBase> binding_kbs;
    TrainReport report;
};

TrainingData collect_training_data(
    const pddl::DomainModel &domain,
    const std::vector<std::pair<std::string, pddl::ProblemModel>> &problems,
    const TrainOptions &options = {});

// Induces the operator tree and every binding tree with data, writing
// <prefix>-*.tree files next to the kb/bias files.
void learn_trees(const pddl::DomainModel &domain, const std::string &prefix,
                 const learner::InduceOptions &options = {});

// In-memory induction from collected data.
policy::DckBundle induce_bundle(const pddl::DomainModel &domain,
                                const TrainingData &data,
                                const learner::InduceOptions &options = {});

}

#endif
