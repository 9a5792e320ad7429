#include "dck.h"

#include <filesystem>

using namespace std;

namespace policy {

DckBundle load_dck(const string &prefix, const pddl::DomainModel &domain) {
    DckBundle bundle;
    string ops_path = prefix + "-ops.tree";
    if (filesystem::exists(ops_path))
        bundle.operator_tree = learner::load_tree_file(ops_path);
    for (const pddl::OperatorSchema &op : domain.operators) {
        string path = prefix + "-" + op.name + ".tree";
        if (filesystem::exists(path))
            bundle.binding_trees.emplace(op.name, learner::load_tree_file(path));
    }
    return bundle;
}

}
