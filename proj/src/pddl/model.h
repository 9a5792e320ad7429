#ifndef PDDL_MODEL_H
#define PDDL_MODEL_H

#include <map>
#include <set>
#include <string>
#include <vector>

namespace pddl {

/*
  Validated in-memory form of a typed-STRIPS domain/problem pair.
  All symbols are lowercased at parse time; equality is structural on
  those interned strings. Models are immutable after construction and
  safe to share across concurrent searches.
*/

class TypeHierarchy {
    // Single inheritance, rooted at "object". parent["object"] is absent.
    std::map<std::string, std::string> parent_of;

public:
    TypeHierarchy();

    void add_type(const std::string &name, const std::string &parent);
    bool contains(const std::string &name) const;
    // True iff sub == sup or sup is an ancestor of sub.
    bool is_subtype(const std::string &sub, const std::string &sup) const;
    std::vector<std::string> names_in_order() const;
    const std::string &parent(const std::string &name) const;
    bool operator==(const TypeHierarchy &other) const {
        return parent_of == other.parent_of;
    }
};

struct TypedName {
    std::string name;
    std::string type;

    bool operator==(const TypedName &other) const {
        return name == other.name && type == other.type;
    }
};

struct PredicateDecl {
    std::string name;
    std::vector<std::string> arg_types;

    bool operator==(const PredicateDecl &other) const {
        return name == other.name && arg_types == other.arg_types;
    }
};

// Atom over parameters (args keep their '?' prefix) and constants.
// Ground atoms carry constant args only.
struct Atom {
    std::string predicate;
    std::vector<std::string> args;

    bool operator==(const Atom &other) const {
        return predicate == other.predicate && args == other.args;
    }
    bool operator<(const Atom &other) const {
        if (predicate != other.predicate)
            return predicate < other.predicate;
        return args < other.args;
    }
    std::string to_string() const;
};

struct OperatorSchema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<Atom> pre;
    std::vector<Atom> add;
    std::vector<Atom> del;

    bool operator==(const OperatorSchema &other) const {
        return name == other.name && params == other.params &&
               pre == other.pre && add == other.add && del == other.del;
    }
};

struct DomainModel {
    std::string name;
    TypeHierarchy types;
    std::vector<TypedName> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<OperatorSchema> operators;

    const PredicateDecl *find_predicate(const std::string &name) const;
    const OperatorSchema *find_operator(const std::string &name) const;

    bool operator==(const DomainModel &other) const {
        return name == other.name && types == other.types &&
               constants == other.constants && predicates == other.predicates &&
               operators == other.operators;
    }
};

struct ProblemModel {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<Atom> init;
    std::vector<Atom> goals;

    bool operator==(const ProblemModel &other) const {
        return name == other.name && domain_name == other.domain_name &&
               objects == other.objects && init == other.init &&
               goals == other.goals;
    }
};

// Predicate names that appear in no operator's add or del list.
std::set<std::string> detect_static_predicates(const DomainModel &domain);

// Pretty-printers; parsing a printed model yields a structurally
// identical model.
std::string print_domain(const DomainModel &domain);
std::string print_problem(const ProblemModel &problem);

}

#endif
