#include "trainer.h"

#include <filesystem>
#include <iostream>

using namespace std;

namespace training {

TrainingData collect_training_data(
    const pddl::DomainModel &domain,
    const vector<pair<string, pddl::ProblemModel>> &problems,
    const TrainOptions &options) {
    TrainingData data;
    data.operator_kb.target_predicate = "selected";

    for (const auto &[problem_id, problem] : problems) {
        grounding::GroundTask task = grounding::ground_task(domain, problem);
        SolutionSet sols =
            bfs_bnb_solve_all(task, options.time_bound, options.max_nodes);
        if (!sols.usable()) {
            ++data.report.problems_discarded;
            continue;
        }
        RankedSolutions ranked = rank_solutions(task, sols);
        if (options.all_solutions) {
            ranked.top.clear();
            for (size_t p = 0; p < sols.plans.size(); ++p)
                ranked.top.push_back(static_cast<int>(p));
        }

        merge_kb(data.operator_kb,
                 extract_operator_examples(sols, ranked, task, problem_id));
        for (const pddl::OperatorSchema &op : domain.operators) {
            learner::KnowledgeBase kb = extract_binding_examples(
                sols, ranked, task, problem_id, op.name);
            if (!kb.examples.empty()) {
                learner::KnowledgeBase &into = data.binding_kbs[op.name];
                if (into.target_predicate.empty())
                    into.target_predicate = kb.target_predicate;
                merge_kb(into, kb);
            }
        }
        ++data.report.problems_used;
    }
    data.report.operator_examples = data.operator_kb.num_instances();
    return data;
}

TrainReport train_domain(
    const pddl::DomainModel &domain,
    const vector<pair<string, pddl::ProblemModel>> &problems,
    const string &prefix, const TrainOptions &options) {
    TrainingData data = collect_training_data(domain, problems, options);
    emit_language_bias(domain, prefix);
    learner::write_file(prefix + "-ops.kb", learner::emit_kb(data.operator_kb));
    for (const auto &[op, kb] : data.binding_kbs)
        learner::write_file(prefix + "-" + op + ".kb", learner::emit_kb(kb));
    return data.report;
}

void learn_trees(const pddl::DomainModel &domain, const string &prefix,
                 const learner::InduceOptions &options) {
    learner::KnowledgeBase ops_kb = learner::load_kb_file(prefix + "-ops.kb");
    learner::LanguageBias ops_bias =
        learner::load_bias_file(prefix + "-ops.bias");
    learner::RelationalTree ops_tree =
        learner::induce_tree(ops_kb, ops_bias, options);
    learner::write_file(prefix + "-ops.tree", learner::print_tree(ops_tree));

    for (const pddl::OperatorSchema &op : domain.operators) {
        string kb_path = prefix + "-" + op.name + ".kb";
        if (!filesystem::exists(kb_path))
            continue;
        learner::KnowledgeBase kb = learner::load_kb_file(kb_path);
        if (kb.empty())
            continue;
        learner::LanguageBias bias =
            learner::load_bias_file(prefix + "-" + op.name + ".bias");
        learner::RelationalTree tree = learner::induce_tree(kb, bias, options);
        learner::write_file(prefix + "-" + op.name + ".tree",
                            learner::print_tree(tree));
    }
}

policy::DckBundle induce_bundle(const pddl::DomainModel &domain,
                                const TrainingData &data,
                                const learner::InduceOptions &options) {
    policy::DckBundle bundle;
    if (!data.operator_kb.empty())
        bundle.operator_tree =
            learner::induce_tree(data.operator_kb, operator_bias(domain),
                                 options);
    for (const auto &[op, kb] : data.binding_kbs)
        if (!kb.empty())
            bundle.binding_trees.emplace(
                op, learner::induce_tree(kb, binding_bias(domain, op),
                                         options));
    return bundle;
}

}
