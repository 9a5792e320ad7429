#ifndef TESTS_ORACLES_H
#define TESTS_ORACLES_H

#include "grounding/ground_task.h"
#include "pddl/model.h"
#include "search/search_types.h"
#include "util/rational.h"

#include <optional>
#include <set>
#include <string>
#include <vector>

/*
  Independent reference implementations used only by tests. They are
  deliberately naive (explicit sets, full scans, no indices or shared
  code with the production path) so that agreement is meaningful.
*/
namespace oracles {

// ---- grounding oracle -------------------------------------------------

struct OracleAction {
    std::string name;  // "(op a b)"
    std::set<pddl::Atom> pre, add, del;

    bool operator<(const OracleAction &other) const {
        return name < other.name;
    }
    bool operator==(const OracleAction &other) const {
        return name == other.name && pre == other.pre && add == other.add &&
               del == other.del;
    }
};

// Cross-product instantiation filtered by static preconditions and
// add/del consistency.
std::vector<OracleAction> naive_ground(const pddl::DomainModel &domain,
                                       const pddl::ProblemModel &problem);

// ---- relaxed-plan oracle ----------------------------------------------

struct OracleRpg {
    std::vector<std::set<int>> fact_layers;    // F_0..F_t
    std::vector<std::set<int>> action_layers;  // A_0..A_{t-1}
    bool goals_reachable = false;
};

OracleRpg naive_rpg(const grounding::GroundTask &task,
                    const grounding::State &s);

struct OracleExtraction {
    bool reachable = false;
    std::set<int> relaxed_plan;
    std::set<int> helpful;
    std::vector<std::set<int>> goal_sets;
};

OracleExtraction naive_extract(const grounding::GroundTask &task,
                               const OracleRpg &rpg);

// ---- exhaustive best-plan enumeration ----------------------------------

struct EnumNode {
    grounding::State state;
    int parent;
    int action;
    int g;
    std::vector<int> children;
    bool on_solution = false;
};

struct EnumResult {
    int best_cost = -1;
    std::vector<std::vector<int>> plans;  // sorted action-id sequences
    std::vector<EnumNode> tree;
    std::vector<int> goal_leaves;
    long nodes = 0;
};

// Breadth-first complete enumeration without a heuristic: explores the
// unpruned search tree level by level until the first level containing
// goal states, which yields exactly the set of best-cost plans.
std::optional<EnumResult> enumerate_best_plans(const grounding::GroundTask &task,
                                               long max_nodes);

// Brute-force solution ranking over an EnumResult, with its own little
// fraction arithmetic. Returns the indices of top plans.
std::vector<int> oracle_top_plans(const grounding::GroundTask &task,
                                  const EnumResult &enumeration);

// ---- reference weighted best-first search -------------------------------

struct ReferenceBfsResult {
    bool solved = false;
    std::vector<int> plan;
    std::vector<grounding::State> expansion_trace;
};

// Plain weighted BFS with the documented tie-breaks (scaled f, then h,
// then FIFO), duplicate handling (insert only on strictly lower g,
// evaluate on insertion, skip superseded pops) and no lookahead.
ReferenceBfsResult reference_weighted_bfs(const grounding::GroundTask &task,
                                          const util::Rational &weight,
                                          long max_expansions = 1000000);

// Uniform-cost optimum (plan length) via breadth-first search over
// states; -1 if unsolvable.
int optimal_plan_length(const grounding::GroundTask &task);

}

#endif
