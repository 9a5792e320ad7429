#ifndef LEARNER_INDUCE_H
#define LEARNER_INDUCE_H

#include "bias.h"
#include "tree.h"

#include <string>
#include <vector>

namespace learner {

struct InduceOptions {
    // A node is split only if the best candidate's information gain
    // reaches gain_epsilon; nodes with fewer than min_leaf instances
    // become leaves.
    double gain_epsilon = 1e-6;
    int min_leaf = 2;
};

struct TypedVar {
    int var;
    std::string type;
};

/*
  All query literals the bias admits given the variables currently in
  scope: for every mode, each object position ranges over the
  type-compatible bound variables plus a fresh variable; identifier
  positions are always bound to the example/problem identifier variables
  (never fresh). Fresh variables are numbered from next_fresh_var.
  Candidates come out in (mode declaration order, lexicographic argument
  pattern) order, which is also the split tie-break order.
*/
std::vector<QueryLiteral> generate_candidate_queries(
    const LanguageBias &bias, const std::vector<TypedVar> &bound_object_vars,
    int example_id_var, int problem_id_var, int next_fresh_var);

/*
  Relational TDIDT: recursively selects the candidate query with maximal
  information gain over the yes/no split of the node's instances; stops
  at pure nodes, when no candidate reaches gain_epsilon, or below
  min_leaf. Leaves record full class counts. Throws on an empty kb.
*/
RelationalTree induce_tree(const KnowledgeBase &kb, const LanguageBias &bias,
                           const InduceOptions &options = {});

// Training accuracy of majority-class routing, for diagnostics/tests.
double training_accuracy(const RelationalTree &tree, const KnowledgeBase &kb);

}

#endif
