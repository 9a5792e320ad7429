#include "induce.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

using namespace std;

namespace learner {

namespace {

string canonical_var_name(int id) {
    string name(1, static_cast<char>('A' + id % 26));
    if (id >= 26)
        name += to_string(id / 26);
    return name;
}

void enumerate_mode(const BiasMode &mode,
                    const vector<TypedVar> &bound_object_vars,
                    int example_id_var, int problem_id_var, int next_fresh_var,
                    size_t position, QueryLiteral &partial, int fresh_used,
                    vector<QueryLiteral> &out) {
    if (position == mode.arg_types.size()) {
        out.push_back(partial);
        return;
    }
    const string &type = mode.arg_types[position];
    if (is_example_id_type(type)) {
        partial.args.push_back(QueryArg::bound(example_id_var));
        enumerate_mode(mode, bound_object_vars, example_id_var, problem_id_var,
                       next_fresh_var, position + 1, partial, fresh_used, out);
        partial.args.pop_back();
        return;
    }
    if (type == "idprob") {
        partial.args.push_back(QueryArg::bound(problem_id_var));
        enumerate_mode(mode, bound_object_vars, example_id_var, problem_id_var,
                       next_fresh_var, position + 1, partial, fresh_used, out);
        partial.args.pop_back();
        return;
    }
    // Object position: every compatible bound variable (ascending id),
    // then a fresh variable.
    for (const TypedVar &var : bound_object_vars) {
        if (var.type != type)
            continue;
        partial.args.push_back(QueryArg::bound(var.var));
        enumerate_mode(mode, bound_object_vars, example_id_var, problem_id_var,
                       next_fresh_var, position + 1, partial, fresh_used, out);
        partial.args.pop_back();
    }
    partial.args.push_back(QueryArg::fresh(next_fresh_var + fresh_used));
    enumerate_mode(mode, bound_object_vars, example_id_var, problem_id_var,
                   next_fresh_var, position + 1, partial, fresh_used + 1, out);
    partial.args.pop_back();
}

double entropy(const vector<long long> &counts, long long total) {
    if (total == 0)
        return 0.0;
    double h = 0.0;
    for (long long count : counts) {
        if (count == 0)
            continue;
        double p = static_cast<double>(count) / static_cast<double>(total);
        h -= p * log2(p);
    }
    return h;
}

struct Instance {
    const IndexedFacts *facts;
    vector<string> target_args;  // identifiers + object args, no class
    int label;                   // index into classes
};

struct Inducer {
    const LanguageBias &bias;
    const InduceOptions &options;
    RelationalTree tree;
    vector<const QueryLiteral *> path;
    int example_id_var = 0;
    int problem_id_var = 1;

    Inducer(const LanguageBias &bias, const InduceOptions &options)
        : bias(bias), options(options) {}

    bool instance_matches(const Instance &instance,
                          const QueryLiteral &candidate) {
        Bindings bindings(tree.num_variables + 8);
        int max_var = tree.num_variables;
        for (const QueryArg &arg : candidate.args)
            if (arg.kind != QueryArg::kConstant)
                max_var = max(max_var, arg.var + 1);
        bindings.ensure_size(max_var);
        for (size_t i = 0; i < instance.target_args.size(); ++i)
            bindings.bind(static_cast<int>(i), instance.target_args[i]);
        path.push_back(&candidate);
        bool result = query_succeeds(*instance.facts, path, bindings);
        path.pop_back();
        return result;
    }

    int build(const vector<Instance> &all, const vector<int> &instance_ids,
              vector<TypedVar> &bound_object_vars) {
        vector<long long> counts(bias.classes.size(), 0);
        for (int id : instance_ids)
            ++counts[all[id].label];
        long long total = static_cast<long long>(instance_ids.size());

        bool pure = false;
        for (long long count : counts)
            if (count == total)
                pure = true;

        int best_index = -1;
        vector<QueryLiteral> candidates;
        vector<char> best_partition;
        if (!pure && total >= options.min_leaf) {
            candidates = generate_candidate_queries(
                bias, bound_object_vars, example_id_var, problem_id_var,
                tree.num_variables);
            double node_entropy = entropy(counts, total);
            double best_gain = -1.0;
            vector<char> partition(instance_ids.size());
            for (size_t c = 0; c < candidates.size(); ++c) {
                vector<long long> yes_counts(bias.classes.size(), 0);
                long long yes_total = 0;
                for (size_t k = 0; k < instance_ids.size(); ++k) {
                    const Instance &instance = all[instance_ids[k]];
                    bool match = instance_matches(instance, candidates[c]);
                    partition[k] = match;
                    if (match) {
                        ++yes_counts[instance.label];
                        ++yes_total;
                    }
                }
                if (yes_total == 0 || yes_total == total)
                    continue;
                vector<long long> no_counts(bias.classes.size(), 0);
                for (size_t i = 0; i < counts.size(); ++i)
                    no_counts[i] = counts[i] - yes_counts[i];
                long long no_total = total - yes_total;
                double split_entropy =
                    (static_cast<double>(yes_total) / total) *
                        entropy(yes_counts, yes_total) +
                    (static_cast<double>(no_total) / total) *
                        entropy(no_counts, no_total);
                double gain = node_entropy - split_entropy;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best_index = static_cast<int>(c);
                    best_partition = partition;
                }
            }
            if (best_gain < options.gain_epsilon)
                best_index = -1;
        }

        if (best_index < 0) {
            TreeNode leaf;
            leaf.is_leaf = true;
            leaf.class_counts = counts;
            leaf.majority = 0;
            for (size_t i = 1; i < counts.size(); ++i)
                if (counts[i] > counts[leaf.majority])
                    leaf.majority = static_cast<int>(i);
            tree.nodes.push_back(move(leaf));
            return static_cast<int>(tree.nodes.size()) - 1;
        }

        QueryLiteral chosen = candidates[best_index];
        const BiasMode *mode = nullptr;
        for (const BiasMode &m : bias.modes)
            if (m.predicate == chosen.predicate)
                mode = &m;
        assert(mode);

        // Commit the candidate's fresh variables.
        vector<TypedVar> introduced;
        for (size_t i = 0; i < chosen.args.size(); ++i) {
            if (chosen.args[i].kind == QueryArg::kFresh) {
                int id = chosen.args[i].var;
                assert(id == tree.num_variables);
                ++tree.num_variables;
                tree.var_names.push_back(canonical_var_name(id));
                introduced.push_back(TypedVar{id, mode->arg_types[i]});
            }
        }

        tree.nodes.push_back(TreeNode{});
        int index = static_cast<int>(tree.nodes.size()) - 1;
        tree.nodes[index].query = chosen;

        vector<int> yes_ids, no_ids;
        for (size_t k = 0; k < instance_ids.size(); ++k)
            (best_partition[k] ? yes_ids : no_ids).push_back(instance_ids[k]);

        // `chosen` outlives both recursive calls; the node vector may
        // reallocate, so the path must not point into it.
        path.push_back(&chosen);
        size_t old_size = bound_object_vars.size();
        bound_object_vars.insert(bound_object_vars.end(), introduced.begin(),
                                 introduced.end());
        int yes_child = build(all, yes_ids, bound_object_vars);
        bound_object_vars.resize(old_size);
        path.pop_back();
        int no_child = build(all, no_ids, bound_object_vars);

        tree.nodes[index].yes_child = yes_child;
        tree.nodes[index].no_child = no_child;
        return index;
    }
};

IndexedFacts combined_facts(const KbExample &example,
                            const KnowledgeBase &kb) {
    IndexedFacts facts;
    for (const Fact &fact : example.facts)
        facts.add(fact);
    auto it = kb.statics.find(example.problem_id);
    if (it != kb.statics.end())
        for (const Fact &fact : it->second)
            facts.add(fact);
    return facts;
}

}

vector<QueryLiteral> generate_candidate_queries(
    const LanguageBias &bias, const vector<TypedVar> &bound_object_vars,
    int example_id_var, int problem_id_var, int next_fresh_var) {
    vector<QueryLiteral> out;
    for (const BiasMode &mode : bias.modes) {
        QueryLiteral partial;
        partial.predicate = mode.predicate;
        enumerate_mode(mode, bound_object_vars, example_id_var, problem_id_var,
                       next_fresh_var, 0, partial, 0, out);
    }
    return out;
}

RelationalTree induce_tree(const KnowledgeBase &kb, const LanguageBias &bias,
                           const InduceOptions &options) {
    if (kb.empty())
        throw runtime_error("induce_tree: empty knowledge base");
    if (kb.target_predicate != bias.target_predicate)
        throw runtime_error("induce_tree: kb target '" + kb.target_predicate +
                            "' does not match bias target '" +
                            bias.target_predicate + "'");

    Inducer inducer(bias, options);
    RelationalTree &tree = inducer.tree;
    tree.target_predicate = bias.target_predicate;
    tree.num_target_args = static_cast<int>(bias.target_arg_types.size());
    tree.classes = bias.classes;
    for (int i = 0; i < tree.num_target_args; ++i) {
        tree.var_names.push_back(canonical_var_name(i));
        ++tree.num_variables;
    }

    map<string, int> class_index;
    for (size_t i = 0; i < bias.classes.size(); ++i)
        class_index[bias.classes[i]] = static_cast<int>(i);

    vector<IndexedFacts> fact_sets;
    fact_sets.reserve(kb.examples.size());
    for (const KbExample &example : kb.examples)
        fact_sets.push_back(combined_facts(example, kb));

    vector<Instance> instances;
    for (size_t e = 0; e < kb.examples.size(); ++e) {
        const KbExample &example = kb.examples[e];
        for (const TargetInstance &target : example.instances) {
            auto it = class_index.find(target.label);
            if (it == class_index.end())
                throw runtime_error("induce_tree: label '" + target.label +
                                    "' is not a declared class");
            Instance instance;
            instance.facts = &fact_sets[e];
            instance.target_args = {example.example_id, example.problem_id};
            instance.target_args.insert(instance.target_args.end(),
                                        target.args.begin(),
                                        target.args.end());
            instance.label = it->second;
            instances.push_back(move(instance));
        }
    }

    // Object-typed target arguments (binding trees) are in scope from
    // the root; identifiers and the class position are not.
    vector<TypedVar> bound_object_vars;
    for (int i = 0; i < tree.num_target_args - 1; ++i) {
        const string &type = bias.target_arg_types[i];
        if (!is_identifier_type(type))
            bound_object_vars.push_back(TypedVar{i, type});
    }

    vector<int> all_ids(instances.size());
    for (size_t i = 0; i < instances.size(); ++i)
        all_ids[i] = static_cast<int>(i);
    int root = inducer.build(instances, all_ids, bound_object_vars);
    assert(root == 0);
    (void)root;
    return move(tree);
}

double training_accuracy(const RelationalTree &tree, const KnowledgeBase &kb) {
    long long correct = 0;
    long long total = 0;
    for (const KbExample &example : kb.examples) {
        IndexedFacts facts = combined_facts(example, kb);
        for (const TargetInstance &target : example.instances) {
            vector<string> target_args = {example.example_id,
                                          example.problem_id};
            target_args.insert(target_args.end(), target.args.begin(),
                               target.args.end());
            const TreeNode &leaf = classify(tree, facts, target_args);
            if (tree.classes[leaf.majority] == target.label)
                ++correct;
            ++total;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(correct) / total;
}

}
