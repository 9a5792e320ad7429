#ifndef LEARNER_BIAS_H
#define LEARNER_BIAS_H

#include <string>
#include <vector>

namespace learner {

/*
  Language bias for tree induction: the target declaration plus one
  query mode per context predicate, with argument types. Identifier
  arguments (index/idex/idprob) are input-only: candidate queries always
  bind them to the example/problem identifier variables and never
  introduce them as new variables. Object arguments may bind to a
  type-compatible variable already in scope or introduce a fresh one.
*/
struct BiasMode {
    std::string predicate;
    std::vector<std::string> arg_types;
};

struct LanguageBias {
    std::string target_predicate;
    std::vector<std::string> target_arg_types;  // last entry is "class"
    std::vector<std::string> classes;
    std::vector<BiasMode> modes;  // declaration order
};

bool is_identifier_type(const std::string &type);
bool is_example_id_type(const std::string &type);

std::string emit_bias(const LanguageBias &bias);
LanguageBias parse_bias(const std::string &text);
LanguageBias load_bias_file(const std::string &path);

}

#endif
