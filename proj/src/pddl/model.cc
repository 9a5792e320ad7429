#include "model.h"

#include <algorithm>
#include <sstream>

using namespace std;

namespace pddl {

TypeHierarchy::TypeHierarchy() {
    parent_of["object"] = "";
}

void TypeHierarchy::add_type(const string &name, const string &parent) {
    if (name == "object")
        return;
    parent_of[name] = parent;
}

bool TypeHierarchy::contains(const string &name) const {
    return parent_of.count(name) > 0;
}

bool TypeHierarchy::is_subtype(const string &sub, const string &sup) const {
    string current = sub;
    while (true) {
        if (current == sup)
            return true;
        auto it = parent_of.find(current);
        if (it == parent_of.end() || it->second.empty())
            return false;
        current = it->second;
    }
}

vector<string> TypeHierarchy::names_in_order() const {
    vector<string> result;
    for (const auto &[name, parent] : parent_of)
        result.push_back(name);
    return result;
}

const string &TypeHierarchy::parent(const string &name) const {
    static const string empty;
    auto it = parent_of.find(name);
    return it == parent_of.end() ? empty : it->second;
}

string Atom::to_string() const {
    string result = "(" + predicate;
    for (const string &arg : args)
        result += " " + arg;
    result += ")";
    return result;
}

const PredicateDecl *DomainModel::find_predicate(const string &name) const {
    for (const PredicateDecl &pred : predicates)
        if (pred.name == name)
            return &pred;
    return nullptr;
}

const OperatorSchema *DomainModel::find_operator(const string &name) const {
    for (const OperatorSchema &op : operators)
        if (op.name == name)
            return &op;
    return nullptr;
}

set<string> detect_static_predicates(const DomainModel &domain) {
    set<string> effect_predicates;
    for (const OperatorSchema &op : domain.operators) {
        for (const Atom &atom : op.add)
            effect_predicates.insert(atom.predicate);
        for (const Atom &atom : op.del)
            effect_predicates.insert(atom.predicate);
    }
    set<string> result;
    for (const PredicateDecl &pred : domain.predicates)
        if (!effect_predicates.count(pred.name))
            result.insert(pred.name);
    return result;
}

namespace {

void print_typed_names(ostream &os, const vector<TypedName> &names) {
    for (size_t i = 0; i < names.size(); ++i) {
        if (i > 0)
            os << " ";
        os << names[i].name << " - " << names[i].type;
    }
}

void print_atom_list(ostream &os, const string &indent,
                     const vector<Atom> &atoms) {
    for (const Atom &atom : atoms)
        os << indent << atom.to_string() << "\n";
}

}

string print_domain(const DomainModel &domain) {
    ostringstream os;
    os << "(define (domain " << domain.name << ")\n";
    os << "  (:requirements :strips :typing)\n";

    // Emit types bottom-up by name; "object" itself is implicit.
    vector<string> type_names = domain.types.names_in_order();
    bool any_type = false;
    for (const string &name : type_names)
        if (name != "object")
            any_type = true;
    if (any_type) {
        os << "  (:types";
        for (const string &name : type_names) {
            if (name == "object")
                continue;
            os << " " << name << " - " << domain.types.parent(name);
        }
        os << ")\n";
    }

    if (!domain.constants.empty()) {
        os << "  (:constants ";
        print_typed_names(os, domain.constants);
        os << ")\n";
    }

    os << "  (:predicates\n";
    for (const PredicateDecl &pred : domain.predicates) {
        os << "    (" << pred.name;
        for (size_t i = 0; i < pred.arg_types.size(); ++i)
            os << " ?x" << i << " - " << pred.arg_types[i];
        os << ")\n";
    }
    os << "  )\n";

    for (const OperatorSchema &op : domain.operators) {
        os << "  (:action " << op.name << "\n";
        os << "    :parameters (";
        for (size_t i = 0; i < op.params.size(); ++i) {
            if (i > 0)
                os << " ";
            os << op.params[i].name << " - " << op.params[i].type;
        }
        os << ")\n";
        os << "    :precondition (and\n";
        print_atom_list(os, "      ", op.pre);
        os << "    )\n";
        os << "    :effect (and\n";
        print_atom_list(os, "      ", op.add);
        for (const Atom &atom : op.del)
            os << "      (not " << atom.to_string() << ")\n";
        os << "    )\n";
        os << "  )\n";
    }
    os << ")\n";
    return os.str();
}

string print_problem(const ProblemModel &problem) {
    ostringstream os;
    os << "(define (problem " << problem.name << ")\n";
    os << "  (:domain " << problem.domain_name << ")\n";
    if (!problem.objects.empty()) {
        os << "  (:objects ";
        print_typed_names(os, problem.objects);
        os << ")\n";
    }
    os << "  (:init\n";
    print_atom_list(os, "    ", problem.init);
    os << "  )\n";
    os << "  (:goal (and\n";
    print_atom_list(os, "    ", problem.goals);
    os << "  ))\n";
    os << ")\n";
    return os.str();
}

}
