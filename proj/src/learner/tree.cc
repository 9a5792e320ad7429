#include "tree.h"

#include "term.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace learner {

long long RelationalTree::count_for(const TreeNode &leaf,
                                    const string &cls) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == cls)
            return leaf.class_counts[i];
    return 0;
}

long long RelationalTree::leaf_total(const TreeNode &leaf) const {
    long long total = 0;
    for (long long count : leaf.class_counts)
        total += count;
    return total;
}

const TreeNode &classify(const RelationalTree &tree, const IndexedFacts &facts,
                         const vector<string> &target_args) {
    Bindings bindings(tree.num_variables);
    for (size_t i = 0; i < target_args.size(); ++i)
        bindings.bind(static_cast<int>(i), target_args[i]);

    vector<const QueryLiteral *> conjunction;
    int current = 0;
    while (!tree.nodes[current].is_leaf) {
        const TreeNode &node = tree.nodes[current];
        conjunction.push_back(&node.query);
        if (query_succeeds(facts, conjunction, bindings)) {
            current = node.yes_child;
        } else {
            conjunction.pop_back();
            current = node.no_child;
        }
    }
    return tree.nodes[current];
}

namespace {

string format_count(long long count) {
    return to_string(count) + ".0";
}

string query_to_string(const RelationalTree &tree, const QueryLiteral &query) {
    string result = query.predicate + "(";
    for (size_t i = 0; i < query.args.size(); ++i) {
        if (i > 0)
            result += ", ";
        const QueryArg &arg = query.args[i];
        switch (arg.kind) {
        case QueryArg::kBound:
            result += tree.var_names[arg.var];
            break;
        case QueryArg::kFresh:
            result += "-" + tree.var_names[arg.var];
            break;
        case QueryArg::kConstant:
            result += arg.constant;
            break;
        }
    }
    result += ")";
    return result;
}

string leaf_to_string(const RelationalTree &tree, const TreeNode &leaf) {
    string result = "[" + tree.classes[leaf.majority] + "] " +
                    format_count(tree.leaf_total(leaf)) + " [[";
    for (size_t i = 0; i < tree.classes.size(); ++i) {
        if (i > 0)
            result += ", ";
        result += tree.classes[i] + ":" + format_count(leaf.class_counts[i]);
    }
    result += "]]";
    return result;
}

void print_children(const RelationalTree &tree, int node_index,
                    const string &prefix, ostream &os) {
    const TreeNode &node = tree.nodes[node_index];
    const TreeNode &yes = tree.nodes[node.yes_child];
    const TreeNode &no = tree.nodes[node.no_child];

    os << prefix << "+--yes: "
       << (yes.is_leaf ? leaf_to_string(tree, yes)
                       : query_to_string(tree, yes.query) + " ?")
       << "\n";
    if (!yes.is_leaf)
        print_children(tree, node.yes_child, prefix + "|  ", os);
    os << prefix << "+--no:  "
       << (no.is_leaf ? leaf_to_string(tree, no)
                      : query_to_string(tree, no.query) + " ?")
       << "\n";
    if (!no.is_leaf)
        print_children(tree, node.no_child, prefix + "|  ", os);
}

bool is_variable_token(const string &token) {
    return !token.empty() && isupper(static_cast<unsigned char>(token[0]));
}

}

string print_tree(const RelationalTree &tree) {
    ostringstream os;
    os << tree.target_predicate << "(";
    for (int i = 0; i < tree.num_target_args; ++i) {
        if (i > 0)
            os << ", ";
        os << "-" << tree.var_names[i];
    }
    os << ")\n";
    const TreeNode &root = tree.root();
    if (root.is_leaf) {
        os << leaf_to_string(tree, root) << "\n";
    } else {
        os << query_to_string(tree, root.query) << " ?\n";
        print_children(tree, 0, "", os);
    }
    return os.str();
}

namespace {

struct TreeParser {
    RelationalTree tree;
    map<string, int> var_ids;
    vector<string> lines;
    size_t cursor = 0;

    int var_id(const string &name, bool introduce) {
        auto it = var_ids.find(name);
        if (it != var_ids.end())
            return it->second;
        if (!introduce)
            throw runtime_error("tree file: reference to unknown variable '" +
                                name + "'");
        int id = tree.num_variables++;
        var_ids[name] = id;
        tree.var_names.push_back(name);
        return id;
    }

    // Joins physically wrapped lines: a logical line is incomplete while
    // it has more '[' than ']'.
    void build_logical_lines(const string &text) {
        istringstream in(text);
        string raw;
        auto open_minus_close = [](const string &s) {
            long balance = 0;
            for (char c : s) {
                if (c == '[')
                    ++balance;
                else if (c == ']')
                    --balance;
            }
            return balance;
        };
        long pending = 0;
        while (getline(in, raw)) {
            string core = raw;
            size_t start = core.find_first_not_of("| \t\r");
            core = (start == string::npos) ? "" : core.substr(start);
            while (!core.empty() &&
                   (core.back() == '\r' || core.back() == ' '))
                core.pop_back();
            if (core.empty())
                continue;
            if (pending > 0) {
                lines.back() += " " + core;
                pending = open_minus_close(lines.back());
            } else {
                lines.push_back(core);
                pending = open_minus_close(core);
            }
        }
        if (pending != 0)
            throw runtime_error("tree file: unbalanced brackets");
    }

    QueryLiteral parse_query(const string &text) {
        Term term;
        if (!parse_term(text, term))
            throw runtime_error("tree file: malformed query: " + text);
        QueryLiteral query;
        query.predicate = term.functor;
        for (const string &raw_arg : term.args) {
            string arg = trim(raw_arg);
            if (!arg.empty() && arg[0] == '-') {
                string name = arg.substr(1);
                if (!is_variable_token(name))
                    throw runtime_error(
                        "tree file: bad fresh variable '" + arg + "'");
                query.args.push_back(QueryArg::fresh(var_id(name, true)));
            } else if (is_variable_token(arg)) {
                query.args.push_back(QueryArg::bound(var_id(arg, false)));
            } else {
                query.args.push_back(QueryArg::constant_arg(arg));
            }
        }
        return query;
    }

    int parse_leaf(const string &text) {
        // [majority] total [[class:count, class:count, ...]]
        size_t maj_end = text.find(']');
        if (text.empty() || text[0] != '[' || maj_end == string::npos)
            throw runtime_error("tree file: malformed leaf: " + text);
        string majority = trim(text.substr(1, maj_end - 1));
        size_t dist_begin = text.find("[[");
        size_t dist_end = text.rfind("]]");
        if (dist_begin == string::npos || dist_end == string::npos)
            throw runtime_error("tree file: leaf without distribution: " +
                                text);
        string dist = text.substr(dist_begin + 2, dist_end - dist_begin - 2);

        TreeNode leaf;
        leaf.is_leaf = true;
        map<string, long long> counts;
        vector<string> class_order;
        for (const string &entry : split_top_level(dist)) {
            size_t colon = entry.find(':');
            if (colon == string::npos)
                throw runtime_error("tree file: malformed distribution entry '" +
                                    entry + "'");
            string cls = trim(entry.substr(0, colon));
            double value = stod(trim(entry.substr(colon + 1)));
            counts[cls] = static_cast<long long>(value + 0.5);
            class_order.push_back(cls);
        }
        if (tree.classes.empty())
            tree.classes = class_order;
        leaf.class_counts.assign(tree.classes.size(), 0);
        for (size_t i = 0; i < tree.classes.size(); ++i) {
            auto it = counts.find(tree.classes[i]);
            if (it != counts.end())
                leaf.class_counts[i] = it->second;
        }
        leaf.majority = -1;
        for (size_t i = 0; i < tree.classes.size(); ++i)
            if (tree.classes[i] == majority)
                leaf.majority = static_cast<int>(i);
        if (leaf.majority < 0)
            throw runtime_error("tree file: majority class '" + majority +
                                "' missing from distribution");
        tree.nodes.push_back(move(leaf));
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    // Parses the content after a branch marker (or the root content):
    // either a leaf or a query whose children follow on later lines.
    int parse_content(const string &content) {
        string text = trim(content);
        if (!text.empty() && text[0] == '[')
            return parse_leaf(text);
        if (text.size() < 2 || text.back() != '?')
            throw runtime_error("tree file: expected query or leaf, got: " +
                                text);
        TreeNode node;
        node.query = parse_query(trim(text.substr(0, text.size() - 1)));
        tree.nodes.push_back(move(node));
        int index = static_cast<int>(tree.nodes.size()) - 1;
        int yes = parse_branch("+--yes:");
        int no = parse_branch("+--no:");
        tree.nodes[index].yes_child = yes;
        tree.nodes[index].no_child = no;
        return index;
    }

    int parse_branch(const string &marker) {
        if (cursor >= lines.size())
            throw runtime_error("tree file: missing branch '" + marker + "'");
        const string &line = lines[cursor];
        if (line.rfind(marker, 0) != 0)
            throw runtime_error("tree file: expected '" + marker + "', got: " +
                                line);
        ++cursor;
        return parse_content(line.substr(marker.size()));
    }

    RelationalTree parse(const string &text) {
        build_logical_lines(text);
        if (lines.empty())
            throw runtime_error("tree file: empty");
        Term target;
        if (!parse_term(lines[0], target))
            throw runtime_error("tree file: malformed target atom: " +
                                lines[0]);
        tree.target_predicate = target.functor;
        tree.num_target_args = static_cast<int>(target.args.size());
        for (const string &raw_arg : target.args) {
            string arg = trim(raw_arg);
            if (arg.empty() || arg[0] != '-')
                throw runtime_error("tree file: target arguments must be "
                                    "fresh variables: " + lines[0]);
            var_id(arg.substr(1), true);
        }
        if (lines.size() < 2)
            throw runtime_error("tree file: missing tree body");
        // The root appears without a branch marker.
        string root_content = lines[1];
        cursor = 2;
        parse_content(root_content);
        if (cursor != lines.size())
            throw runtime_error("tree file: trailing content: " +
                                lines[cursor]);
        validate_tree_scoping(tree);
        return move(tree);
    }
};

}

RelationalTree parse_tree(const string &text) {
    TreeParser parser;
    return parser.parse(text);
}

RelationalTree load_tree_file(const string &path) {
    return parse_tree(read_text_file(path));
}

namespace {

void check_scoping(const RelationalTree &tree, int node_index,
                   set<int> &visible) {
    const TreeNode &node = tree.nodes[node_index];
    if (node.is_leaf)
        return;
    vector<int> introduced;
    for (const QueryArg &arg : node.query.args) {
        if (arg.kind == QueryArg::kBound) {
            if (!visible.count(arg.var))
                throw runtime_error(
                    "tree scoping violation: variable '" +
                    tree.var_names[arg.var] +
                    "' is not bound on the yes-path above");
        } else if (arg.kind == QueryArg::kFresh) {
            if (visible.count(arg.var))
                throw runtime_error("tree scoping violation: variable '" +
                                    tree.var_names[arg.var] +
                                    "' introduced twice");
            visible.insert(arg.var);
            introduced.push_back(arg.var);
        }
    }
    check_scoping(tree, node.yes_child, visible);
    for (int var : introduced)
        visible.erase(var);
    check_scoping(tree, node.no_child, visible);
}

}

void validate_tree_scoping(const RelationalTree &tree) {
    set<int> visible;
    for (int i = 0; i < tree.num_target_args; ++i)
        visible.insert(i);
    check_scoping(tree, 0, visible);
}

}
