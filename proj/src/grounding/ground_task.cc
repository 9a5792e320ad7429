#include "ground_task.h"

#include <algorithm>
#include <cassert>

using namespace std;

namespace grounding {

string GroundAction::name() const {
    string result = "(" + schema;
    for (const string &arg : args)
        result += " " + arg;
    result += ")";
    return result;
}

bool contains(const vector<int> &sorted, int value) {
    return binary_search(sorted.begin(), sorted.end(), value);
}

bool contains_all(const vector<int> &superset, const vector<int> &subset) {
    return includes(superset.begin(), superset.end(), subset.begin(),
                    subset.end());
}

bool GroundTask::is_static_fact(int fact_id) const {
    return static_predicates.count(facts.atom(fact_id).predicate) > 0;
}

bool GroundTask::satisfies_goals(const State &s) const {
    return static_goals_hold && contains_all(s, dynamic_goals);
}

namespace {

pddl::Atom substitute(const pddl::Atom &schema_atom,
                      const map<string, string> &binding) {
    pddl::Atom ground;
    ground.predicate = schema_atom.predicate;
    ground.args.reserve(schema_atom.args.size());
    for (const string &arg : schema_atom.args) {
        if (!arg.empty() && arg[0] == '?')
            ground.args.push_back(binding.at(arg));
        else
            ground.args.push_back(arg);
    }
    return ground;
}

vector<int> sorted_unique(vector<int> v) {
    sort(v.begin(), v.end());
    v.erase(unique(v.begin(), v.end()), v.end());
    return v;
}

}

GroundTask ground_task(const pddl::DomainModel &domain,
                       const pddl::ProblemModel &problem) {
    GroundTask task;
    task.domain = &domain;
    task.static_predicates = pddl::detect_static_predicates(domain);

    // Fact ids are assigned in first-seen order: init atoms, goal atoms,
    // then action atoms in instantiation order. Every downstream tie
    // breaks by ascending id, so this order pins search traces.
    set<pddl::Atom> static_init;
    for (const pddl::Atom &atom : problem.init) {
        int id = task.facts.intern(atom);
        if (task.static_predicates.count(atom.predicate))
            static_init.insert(atom);
        else
            task.init.push_back(id);
    }
    for (const pddl::Atom &atom : problem.goals) {
        int id = task.facts.intern(atom);
        task.goals.push_back(id);
        if (task.static_predicates.count(atom.predicate)) {
            if (!static_init.count(atom))
                task.static_goals_hold = false;
        } else {
            task.dynamic_goals.push_back(id);
        }
    }
    task.init = sorted_unique(move(task.init));
    task.goals = sorted_unique(move(task.goals));
    task.dynamic_goals = sorted_unique(move(task.dynamic_goals));

    // Candidate objects per operator parameter, in declaration order
    // (domain constants first).
    vector<pddl::TypedName> pool = domain.constants;
    pool.insert(pool.end(), problem.objects.begin(), problem.objects.end());

    for (const pddl::OperatorSchema &op : domain.operators) {
        vector<vector<const pddl::TypedName *>> candidates(op.params.size());
        bool instantiable = true;
        for (size_t i = 0; i < op.params.size(); ++i) {
            for (const pddl::TypedName &obj : pool)
                if (domain.types.is_subtype(obj.type, op.params[i].type))
                    candidates[i].push_back(&obj);
            if (candidates[i].empty())
                instantiable = false;
        }
        if (!instantiable)
            continue;

        vector<size_t> index(op.params.size(), 0);
        while (true) {
            map<string, string> binding;
            for (size_t i = 0; i < op.params.size(); ++i)
                binding[op.params[i].name] = candidates[i][index[i]]->name;

            bool statics_ok = true;
            vector<pddl::Atom> ground_pre, ground_add, ground_del;
            for (const pddl::Atom &atom : op.pre) {
                pddl::Atom ground = substitute(atom, binding);
                if (task.static_predicates.count(ground.predicate) &&
                    !static_init.count(ground)) {
                    statics_ok = false;
                    break;
                }
                ground_pre.push_back(move(ground));
            }
            if (statics_ok) {
                for (const pddl::Atom &atom : op.add)
                    ground_add.push_back(substitute(atom, binding));
                for (const pddl::Atom &atom : op.del)
                    ground_del.push_back(substitute(atom, binding));
                // Effect consistency: a binding that adds and deletes the
                // same fact (e.g. a self-move) is not a well-formed STRIPS
                // action and is not created.
                set<pddl::Atom> add_set(ground_add.begin(), ground_add.end());
                bool consistent = true;
                for (const pddl::Atom &atom : ground_del)
                    if (add_set.count(atom)) {
                        consistent = false;
                        break;
                    }
                if (consistent) {
                    GroundAction action;
                    action.id = static_cast<int>(task.actions.size());
                    action.schema = op.name;
                    for (size_t i = 0; i < op.params.size(); ++i)
                        action.args.push_back(candidates[i][index[i]]->name);
                    for (const pddl::Atom &atom : ground_pre) {
                        int id = task.facts.intern(atom);
                        action.pre.push_back(id);
                        if (!task.static_predicates.count(atom.predicate))
                            action.dyn_pre.push_back(id);
                    }
                    for (const pddl::Atom &atom : ground_add)
                        action.add.push_back(task.facts.intern(atom));
                    for (const pddl::Atom &atom : ground_del)
                        action.del.push_back(task.facts.intern(atom));
                    action.pre = sorted_unique(move(action.pre));
                    action.dyn_pre = sorted_unique(move(action.dyn_pre));
                    action.add = sorted_unique(move(action.add));
                    action.del = sorted_unique(move(action.del));
                    task.actions.push_back(move(action));
                }
            }

            // Odometer step.
            size_t pos = 0;
            for (; pos < index.size(); ++pos) {
                if (++index[pos] < candidates[pos].size())
                    break;
                index[pos] = 0;
            }
            if (pos == index.size())
                break;
        }
    }

    for (const pddl::Atom &atom : static_init)
        task.static_facts.push_back(task.facts.lookup(atom));
    task.static_facts = sorted_unique(move(task.static_facts));
    return task;
}

bool is_applicable(const GroundTask &task, const GroundAction &action,
                   const State &s) {
    (void)task;
    return contains_all(s, action.dyn_pre);
}

vector<int> applicable_actions(const GroundTask &task, const State &s) {
    vector<int> result;
    for (const GroundAction &action : task.actions)
        if (contains_all(s, action.dyn_pre))
            result.push_back(action.id);
    return result;
}

State apply_action(const State &s, const GroundAction &action) {
    assert(contains_all(s, action.dyn_pre));
    State result;
    result.reserve(s.size() + action.add.size());
    set_difference(s.begin(), s.end(), action.del.begin(), action.del.end(),
                   back_inserter(result));
    State merged;
    merged.reserve(result.size() + action.add.size());
    set_union(result.begin(), result.end(), action.add.begin(),
              action.add.end(), back_inserter(merged));
    return merged;
}

}
