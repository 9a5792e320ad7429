#ifndef GROUNDING_GROUND_TASK_H
#define GROUNDING_GROUND_TASK_H

#include "../pddl/model.h"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace grounding {

// A state is the sorted set of fact ids of non-static facts; static
// facts are stored once in the GroundTask. Closed world: absent means
// false.
using State = std::vector<int>;

// Bijective ground-atom <-> dense-integer map, stable for the lifetime
// of a task.
class FactTable {
    std::map<pddl::Atom, int> ids;
    std::vector<pddl::Atom> atoms;

public:
    int intern(const pddl::Atom &atom) {
        auto [it, inserted] = ids.emplace(atom, static_cast<int>(atoms.size()));
        if (inserted)
            atoms.push_back(atom);
        return it->second;
    }
    int lookup(const pddl::Atom &atom) const {
        auto it = ids.find(atom);
        return it == ids.end() ? -1 : it->second;
    }
    const pddl::Atom &atom(int id) const {return atoms.at(id);}
    int size() const {return static_cast<int>(atoms.size());}
};

struct GroundAction {
    int id;
    std::string schema;             // operator name
    std::vector<std::string> args;  // ordered object names
    std::vector<int> pre;           // all precondition fact ids, sorted
    std::vector<int> dyn_pre;       // pre minus statically-true facts
    std::vector<int> add;           // sorted, non-static by construction
    std::vector<int> del;

    std::string name() const;
};

struct GroundTask {
    const pddl::DomainModel *domain = nullptr;
    FactTable facts;
    std::vector<GroundAction> actions;
    State init;                     // non-static init facts
    std::vector<int> goals;         // all goal fact ids (may include statics)
    std::vector<int> dynamic_goals; // goals over non-static predicates
    std::vector<int> static_facts;  // static facts true in s0, sorted
    bool static_goals_hold = true;  // all static goal atoms hold in s0
    std::set<std::string> static_predicates;

    bool is_static_fact(int fact_id) const;
    bool satisfies_goals(const State &s) const;
};

// Instantiates every type-consistent binding of every operator whose
// static preconditions hold in s0 and whose ground add/del sets do not
// overlap. No reachability pruning beyond statics: the no-repeated-state
// training search needs the full action set.
GroundTask ground_task(const pddl::DomainModel &domain,
                       const pddl::ProblemModel &problem);

// Exactly the action ids with pre subset of s + static facts, ascending.
std::vector<int> applicable_actions(const GroundTask &task, const State &s);

bool is_applicable(const GroundTask &task, const GroundAction &action,
                   const State &s);

// (s \ del(a)) u add(a); a must be applicable in s.
State apply_action(const State &s, const GroundAction &action);

// Sorted-vector set helpers shared by the search code.
bool contains_all(const std::vector<int> &superset,
                  const std::vector<int> &subset);
bool contains(const std::vector<int> &sorted, int value);

}

#endif
