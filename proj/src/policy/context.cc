#include "context.h"

#include <algorithm>

using namespace std;
using grounding::GroundTask;
using grounding::State;

namespace policy {

HelpfulContext build_helpful_context(const GroundTask &task, const State &s,
                                     const vector<int> &helpful_ids) {
    HelpfulContext ctx;
    ctx.task = &task;
    ctx.helpful = helpful_ids;
    sort(ctx.helpful.begin(), ctx.helpful.end());
    for (int g : task.goals) {
        if (grounding::contains(s, g))
            continue;
        if (task.is_static_fact(g) && grounding::contains(task.static_facts, g))
            continue;
        ctx.target.push_back(g);
    }
    return ctx;
}

string helpful_predicate(const string &operator_name) {
    return "helpful_" + operator_name;
}

string target_goal_predicate(const string &predicate) {
    return "target_goal_" + predicate;
}

string static_fact_predicate(const string &predicate) {
    return "static_fact_" + predicate;
}

vector<learner::Fact> encode_context_facts(const GroundTask &task,
                                           const HelpfulContext &ctx,
                                           const string &example_id,
                                           const string &problem_id) {
    vector<learner::Fact> facts;
    for (int action_id : ctx.helpful) {
        const grounding::GroundAction &action = task.actions[action_id];
        learner::Fact fact;
        fact.predicate = helpful_predicate(action.schema);
        fact.args = {example_id, problem_id};
        fact.args.insert(fact.args.end(), action.args.begin(),
                         action.args.end());
        facts.push_back(move(fact));
    }
    for (int goal : ctx.target) {
        const pddl::Atom &atom = task.facts.atom(goal);
        learner::Fact fact;
        fact.predicate = target_goal_predicate(atom.predicate);
        fact.args = {example_id, problem_id};
        fact.args.insert(fact.args.end(), atom.args.begin(), atom.args.end());
        facts.push_back(move(fact));
    }
    return facts;
}

vector<learner::Fact> encode_static_facts(const GroundTask &task,
                                          const string &problem_id) {
    vector<learner::Fact> facts;
    for (int fact_id : task.static_facts) {
        const pddl::Atom &atom = task.facts.atom(fact_id);
        learner::Fact fact;
        fact.predicate = static_fact_predicate(atom.predicate);
        fact.args = {problem_id};
        fact.args.insert(fact.args.end(), atom.args.begin(), atom.args.end());
        facts.push_back(move(fact));
    }
    return facts;
}

learner::IndexedFacts encode_context(const GroundTask &task,
                                     const HelpfulContext &ctx,
                                     const string &example_id,
                                     const string &problem_id) {
    learner::IndexedFacts indexed;
    for (learner::Fact &fact :
         encode_context_facts(task, ctx, example_id, problem_id))
        indexed.add(move(fact));
    for (learner::Fact &fact : encode_static_facts(task, problem_id))
        indexed.add(move(fact));
    return indexed;
}

}
