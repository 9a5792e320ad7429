#ifndef POLICY_DCK_H
#define POLICY_DCK_H

#include "../learner/tree.h"
#include "../pddl/model.h"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace policy {

// The learned control knowledge: one operator tree plus a binding tree
// per operator (possibly absent). Immutable after loading; safe to share
// across concurrent searches.
struct DckBundle {
    std::optional<learner::RelationalTree> operator_tree;
    std::map<std::string, learner::RelationalTree> binding_trees;

    bool empty() const {return !operator_tree.has_value();}

    const learner::RelationalTree *binding_tree(const std::string &op) const {
        auto it = binding_trees.find(op);
        return it == binding_trees.end() ? nullptr : &it->second;
    }
};

// Loads <prefix>-ops.tree plus <prefix>-<op>.tree for every domain
// operator; missing binding trees are simply absent.
DckBundle load_dck(const std::string &prefix, const pddl::DomainModel &domain);

}

#endif
