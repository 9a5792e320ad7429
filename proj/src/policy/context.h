#ifndef POLICY_CONTEXT_H
#define POLICY_CONTEXT_H

#include "../grounding/ground_task.h"
#include "../learner/kb.h"

#include <string>
#include <vector>

namespace policy {

/*
  H(s): the helpful actions of the state, the goals not yet achieved,
  and the static facts of the task. Statics are per-task, not per-state,
  so the context borrows them from the GroundTask.
*/
struct HelpfulContext {
    std::vector<int> helpful;  // action ids, ascending
    std::vector<int> target;   // unachieved goal fact ids, ascending
    const grounding::GroundTask *task = nullptr;
};

HelpfulContext build_helpful_context(const grounding::GroundTask &task,
                                     const grounding::State &s,
                                     const std::vector<int> &helpful_ids);

// kb-vocabulary predicate names shared by training-example emission and
// search-time classification.
std::string helpful_predicate(const std::string &operator_name);
std::string target_goal_predicate(const std::string &predicate);
std::string static_fact_predicate(const std::string &predicate);

// helpful_*/target_goal_* facts of the context, tagged with the given
// identifiers.
std::vector<learner::Fact> encode_context_facts(
    const grounding::GroundTask &task, const HelpfulContext &ctx,
    const std::string &example_id, const std::string &problem_id);

// static_fact_* atoms of the task, tagged with the problem identifier.
std::vector<learner::Fact> encode_static_facts(
    const grounding::GroundTask &task, const std::string &problem_id);

// Everything the query engine needs to classify the context.
learner::IndexedFacts encode_context(const grounding::GroundTask &task,
                                     const HelpfulContext &ctx,
                                     const std::string &example_id,
                                     const std::string &problem_id);

}

#endif
