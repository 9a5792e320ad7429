#include "examples.h"

#include "../policy/context.h"
#include "../relaxed/relaxed_plan.h"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace std;
using grounding::GroundTask;

namespace training {

namespace {

struct Pair {
    const Plan *plan;
    int position;  // i: decision taken at state s_i
    string example_id;
};

// The decisions of all top plans in ranked order, with their shared
// example-id numbering.
vector<Pair> decision_pairs(const SolutionSet &sols,
                            const RankedSolutions &ranked,
                            const string &problem_id) {
    vector<Pair> pairs;
    int counter = 0;
    for (int plan_index : ranked.top) {
        const Plan &plan = sols.plans[plan_index];
        for (int i = 0; i < static_cast<int>(plan.actions.size()); ++i) {
            ++counter;
            pairs.push_back(
                Pair{&plan, i, problem_id + "_e" + to_string(counter)});
        }
    }
    return pairs;
}

vector<learner::Fact> context_facts_for(const GroundTask &task,
                                        relaxed::Evaluator &evaluator,
                                        const grounding::State &state,
                                        const string &example_id,
                                        const string &problem_id) {
    relaxed::RelaxedResult eval = evaluator.evaluate(state);
    policy::HelpfulContext ctx =
        policy::build_helpful_context(task, state, eval.helpful);
    return policy::encode_context_facts(task, ctx, example_id, problem_id);
}

}

learner::KnowledgeBase extract_operator_examples(const SolutionSet &sols,
                                                 const RankedSolutions &ranked,
                                                 const GroundTask &task,
                                                 const string &problem_id) {
    learner::KnowledgeBase kb;
    kb.target_predicate = "selected";
    relaxed::Evaluator evaluator(task);

    for (const Pair &pair : decision_pairs(sols, ranked, problem_id)) {
        const BnbNode &node = sols.tree[pair.plan->node_path[pair.position]];
        int action_id = pair.plan->actions[pair.position];

        learner::KbExample example;
        example.example_id = pair.example_id;
        example.problem_id = problem_id;
        example.instances.push_back(
            learner::TargetInstance{{}, task.actions[action_id].schema});
        example.facts = context_facts_for(task, evaluator, node.state,
                                          pair.example_id, problem_id);
        kb.examples.push_back(move(example));
    }
    if (!kb.examples.empty())
        kb.statics[problem_id] = policy::encode_static_facts(task, problem_id);
    return kb;
}

learner::KnowledgeBase extract_binding_examples(const SolutionSet &sols,
                                                const RankedSolutions &ranked,
                                                const GroundTask &task,
                                                const string &problem_id,
                                                const string &operator_name) {
    learner::KnowledgeBase kb;
    kb.target_predicate = "selected_" + operator_name;
    relaxed::Evaluator evaluator(task);

    for (const Pair &pair : decision_pairs(sols, ranked, problem_id)) {
        int action_id = pair.plan->actions[pair.position];
        if (task.actions[action_id].schema != operator_name)
            continue;
        const BnbNode &node = sols.tree[pair.plan->node_path[pair.position]];

        learner::KbExample example;
        example.example_id = pair.example_id;
        example.problem_id = problem_id;

        // All applicable instantiations of the operator, classed by the
        // on_solution tag of the corresponding tree child.
        for (int candidate : grounding::applicable_actions(task, node.state)) {
            const grounding::GroundAction &action = task.actions[candidate];
            if (action.schema != operator_name)
                continue;
            bool selected = false;
            for (int child : node.children)
                if (sols.tree[child].action == candidate &&
                    sols.tree[child].on_solution)
                    selected = true;
            example.instances.push_back(learner::TargetInstance{
                action.args, selected ? "selected" : "rejected"});
        }
        example.facts = context_facts_for(task, evaluator, node.state,
                                          pair.example_id, problem_id);
        kb.examples.push_back(move(example));
    }
    if (!kb.examples.empty())
        kb.statics[problem_id] = policy::encode_static_facts(task, problem_id);
    return kb;
}

namespace {

vector<learner::BiasMode> context_modes(const pddl::DomainModel &domain) {
    vector<learner::BiasMode> modes;
    set<string> statics = pddl::detect_static_predicates(domain);
    // Goal modes are declared before helpful modes: a goal query and a
    // helpful query often induce the same split (an applicable action is
    // helpful exactly when its effect is still pending), and at equal
    // gain the goal query must win the declaration-order tie-break so
    // that its object variables become available for join queries below.
    for (const pddl::PredicateDecl &pred : domain.predicates) {
        if (statics.count(pred.name))
            continue;
        learner::BiasMode mode;
        mode.predicate = policy::target_goal_predicate(pred.name);
        mode.arg_types = {"index", "idprob"};
        mode.arg_types.insert(mode.arg_types.end(), pred.arg_types.begin(),
                              pred.arg_types.end());
        modes.push_back(move(mode));
    }
    for (const pddl::OperatorSchema &op : domain.operators) {
        learner::BiasMode mode;
        mode.predicate = policy::helpful_predicate(op.name);
        mode.arg_types = {"index", "idprob"};
        for (const pddl::TypedName &param : op.params)
            mode.arg_types.push_back(param.type);
        modes.push_back(move(mode));
    }
    for (const pddl::PredicateDecl &pred : domain.predicates) {
        if (!statics.count(pred.name))
            continue;
        learner::BiasMode mode;
        mode.predicate = policy::static_fact_predicate(pred.name);
        mode.arg_types = {"idprob"};
        mode.arg_types.insert(mode.arg_types.end(), pred.arg_types.begin(),
                              pred.arg_types.end());
        modes.push_back(move(mode));
    }
    return modes;
}

}

learner::LanguageBias operator_bias(const pddl::DomainModel &domain) {
    learner::LanguageBias bias;
    bias.target_predicate = "selected";
    bias.target_arg_types = {"index", "idprob", "class"};
    for (const pddl::OperatorSchema &op : domain.operators)
        bias.classes.push_back(op.name);
    bias.modes = context_modes(domain);
    return bias;
}

learner::LanguageBias binding_bias(const pddl::DomainModel &domain,
                                   const string &operator_name) {
    const pddl::OperatorSchema *op = domain.find_operator(operator_name);
    if (!op)
        throw runtime_error("unknown operator: " + operator_name);
    learner::LanguageBias bias;
    bias.target_predicate = "selected_" + operator_name;
    bias.target_arg_types = {"idex", "idprob"};
    for (const pddl::TypedName &param : op->params)
        bias.target_arg_types.push_back(param.type);
    bias.target_arg_types.push_back("class");
    bias.classes = {"selected", "rejected"};
    bias.modes = context_modes(domain);
    return bias;
}

void emit_language_bias(const pddl::DomainModel &domain, const string &prefix) {
    learner::write_file(prefix + "-ops.bias",
                        learner::emit_bias(operator_bias(domain)));
    for (const pddl::OperatorSchema &op : domain.operators)
        learner::write_file(prefix + "-" + op.name + ".bias",
                            learner::emit_bias(binding_bias(domain, op.name)));
}

void merge_kb(learner::KnowledgeBase &into, const learner::KnowledgeBase &from) {
    if (into.target_predicate.empty())
        into.target_predicate = from.target_predicate;
    into.examples.insert(into.examples.end(), from.examples.begin(),
                         from.examples.end());
    for (const auto &[problem, facts] : from.statics)
        into.statics[problem] = facts;
}

}
