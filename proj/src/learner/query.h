#ifndef LEARNER_QUERY_H
#define LEARNER_QUERY_H

#include "kb.h"

#include <string>
#include <vector>

namespace learner {

/*
  One query literal of a relational tree node. Arguments either
  reference a variable bound above (yes-path or target atom), introduce
  a fresh variable, or name a constant. Variables are integer ids into a
  per-tree table.
*/
struct QueryArg {
    enum Kind {kBound, kFresh, kConstant};
    Kind kind;
    int var = -1;
    std::string constant;

    static QueryArg bound(int var) {return {kBound, var, {}};}
    static QueryArg fresh(int var) {return {kFresh, var, {}};}
    static QueryArg constant_arg(std::string value) {
        return {kConstant, -1, std::move(value)};
    }
};

struct QueryLiteral {
    std::string predicate;
    std::vector<QueryArg> args;
};

// Partial map variable id -> constant; "" means unbound.
class Bindings {
    std::vector<std::string> values;

public:
    Bindings() = default;
    explicit Bindings(int num_vars) : values(num_vars) {}

    void ensure_size(int num_vars) {
        if (static_cast<int>(values.size()) < num_vars)
            values.resize(num_vars);
    }
    bool is_bound(int var) const {return !values[var].empty();}
    const std::string &value(int var) const {return values[var];}
    void bind(int var, const std::string &value) {values[var] = value;}
    void unbind(int var) {values[var].clear();}
    int size() const {return static_cast<int>(values.size());}
};

/*
  Existential test: true iff the conjunction's variables can be
  assigned constants such that every literal is a fact of the example.
  Backtracking unification over the ground facts; `initial` carries the
  pre-bound target-atom arguments and is left untouched, so every test
  of a grown conjunction re-quantifies all query variables. On success
  the witness assignment is copied to *witness if given.
*/
bool query_succeeds(const IndexedFacts &facts,
                    const std::vector<const QueryLiteral *> &conjunction,
                    const Bindings &initial, Bindings *witness = nullptr);

}

#endif
