#ifndef LEARNER_TREE_H
#define LEARNER_TREE_H

#include "query.h"

#include <string>
#include <vector>

namespace learner {

/*
  First-order decision tree: internal nodes hold logic queries sharing
  variables with the nodes above, leaves hold full class-count
  distributions. Variable ids 0..num_target_args-1 belong to the target
  atom (the last one is the class position, by convention); fresh query
  variables follow in yes-first pre-order.
*/
struct TreeNode {
    bool is_leaf = false;
    QueryLiteral query;  // internal nodes only
    int yes_child = -1;
    int no_child = -1;
    std::vector<long long> class_counts;  // aligned with tree.classes
    int majority = -1;                    // index into tree.classes
};

struct RelationalTree {
    std::string target_predicate;
    int num_target_args = 0;
    std::vector<std::string> classes;
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    int num_variables = 0;
    std::vector<std::string> var_names;  // id -> printed name

    const TreeNode &root() const {return nodes.at(0);}
    long long count_for(const TreeNode &leaf, const std::string &cls) const;
    long long leaf_total(const TreeNode &leaf) const;
};

/*
  Walks from the root, testing each node's query together with the
  accumulated yes-path conjunction; no-branches add no bindings.
  target_args pre-binds the target atom's argument variables (all but
  the class position); for operator trees these are just the synthetic
  identifiers, for binding trees they include the candidate action's
  arguments.
*/
const TreeNode &classify(const RelationalTree &tree, const IndexedFacts &facts,
                         const std::vector<std::string> &target_args);

/*
  Line-oriented text format, the trainer-to-planner contract: a target
  atom line, query lines ending in '?', '+--yes:'/'+--no:' branch lines,
  leaf lines with the majority class and the bracketed class-count
  distribution. print_tree(parse_tree(text)) is the identity on
  print_tree output; parse_tree also accepts wrapped leaf lines.
*/
std::string print_tree(const RelationalTree &tree);
RelationalTree parse_tree(const std::string &text);
RelationalTree load_tree_file(const std::string &path);

// Checks that every bound reference resolves to a variable introduced
// on its yes-ancestor path or in the target atom; throws on violation.
void validate_tree_scoping(const RelationalTree &tree);

}

#endif
