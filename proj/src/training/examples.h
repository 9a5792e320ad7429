#ifndef TRAINING_EXAMPLES_H
#define TRAINING_EXAMPLES_H

#include "bnb.h"
#include "ranking.h"

#include "../learner/bias.h"
#include "../learner/kb.h"
#include "../pddl/model.h"

#include <map>
#include <string>

namespace training {

/*
  Example extraction walks the top-ranked plans of an exhausted solution
  set. Every pair (s_i, a_{i+1}) of every top plan is one decision: the
  operator task gets one example labelled with the operator of a_{i+1};
  the binding task of that operator gets one example enumerating all
  applicable instantiations of the operator in s_i, labelled selected
  when the corresponding search-tree child lies on any best-cost plan
  (not only top-ranked ones) and rejected otherwise. Example ids are
  <problem>_e<k> with k counting pairs, so the operator and binding
  files share ids.
*/
learner::KnowledgeBase extract_operator_examples(const SolutionSet &sols,
                                                 const RankedSolutions &ranked,
                                                 const grounding::GroundTask &task,
                                                 const std::string &problem_id);

learner::KnowledgeBase extract_binding_examples(const SolutionSet &sols,
                                                const RankedSolutions &ranked,
                                                const grounding::GroundTask &task,
                                                const std::string &problem_id,
                                                const std::string &operator_name);

// Operator task bias: the arity-3 "selected" target with one class per
// operator, plus helpful_*/target_goal_*/static_fact_* modes derived
// from the domain.
learner::LanguageBias operator_bias(const pddl::DomainModel &domain);

// Binding task bias for one operator: target selected_<op> with the
// operator's typed arguments and classes {selected, rejected}; context
// modes as in the operator bias.
learner::LanguageBias binding_bias(const pddl::DomainModel &domain,
                                   const std::string &operator_name);

// Writes <prefix>-ops.bias and <prefix>-<op>.bias for every operator.
void emit_language_bias(const pddl::DomainModel &domain,
                        const std::string &prefix);

// Merges per-problem knowledge bases in problem order.
void merge_kb(learner::KnowledgeBase &into, const learner::KnowledgeBase &from);

}

#endif
