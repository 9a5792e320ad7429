#include "doctest.h"

#include "helpers.h"
#include "oracles.h"

#include <algorithm>
#include <set>

using namespace std;
using grounding::GroundTask;
using grounding::State;

namespace {

// Production actions re-expressed in the oracle's vocabulary.
vector<oracles::OracleAction> production_actions(const GroundTask &task) {
    vector<oracles::OracleAction> result;
    for (const grounding::GroundAction &action : task.actions) {
        oracles::OracleAction out;
        out.name = action.name();
        for (int f : action.pre)
            out.pre.insert(task.facts.atom(f));
        for (int f : action.add)
            out.add.insert(task.facts.atom(f));
        for (int f : action.del)
            out.del.insert(task.facts.atom(f));
        result.push_back(move(out));
    }
    sort(result.begin(), result.end());
    return result;
}

const char *two_block_problem =
    "(define (problem two) (:domain blocksworld)"
    " (:objects a b - block)"
    " (:init (ontable a) (ontable b) (clear a) (clear b) (handempty))"
    " (:goal (on a b)))";

}

TEST_CASE("grounding matches the naive cross-product oracle") {
    auto check_against_oracle = [](const helpers::Task &t) {
        vector<oracles::OracleAction> expected =
            oracles::naive_ground(t.domain, t.problem);
        vector<oracles::OracleAction> actual = production_actions(t.task);
        REQUIRE(actual.size() == expected.size());
        for (size_t i = 0; i < actual.size(); ++i)
            CHECK(actual[i] == expected[i]);
    };

    check_against_oracle(
        helpers::make_task(bench::blocksworld_domain(), two_block_problem));
    check_against_oracle(helpers::make_task(bench::satellite_domain(),
                                            bench::satellite_tr01_problem()));
    for (unsigned int seed = 1; seed <= 5; ++seed) {
        check_against_oracle(helpers::blocksworld_task(4, seed));
        check_against_oracle(helpers::satellite_task({2, 2, 3, 2}, seed));
    }
}

TEST_CASE("2-block blocksworld grounds to the expected action set") {
    helpers::Task t =
        helpers::make_task(bench::blocksworld_domain(), two_block_problem);
    // pick-up/put-down per block, stack/unstack over ordered distinct
    // pairs (self-pairs add and delete the same fact and are dropped).
    CHECK(t.task.actions.size() == 2 + 2 + 2 + 2);
    set<string> names;
    for (const grounding::GroundAction &a : t.task.actions)
        names.insert(a.name());
    CHECK(names.count("(pick-up a)"));
    CHECK(names.count("(stack a b)"));
    CHECK(names.count("(unstack b a)"));
    CHECK(!names.count("(stack a a)"));
}

TEST_CASE("zero objects of a parameter type yields zero instances") {
    const char *domain_text =
        "(define (domain d) (:requirements :strips :typing)"
        " (:types widget gadget)"
        " (:predicates (pw ?x - widget) (pg ?x - gadget))"
        " (:action use :parameters (?x - gadget) :precondition (pg ?x)"
        "  :effect (pg ?x)))";
    const char *problem_text =
        "(define (problem p) (:domain d)"
        " (:objects w1 - widget) (:init (pw w1)) (:goal (pw w1)))";
    helpers::Task t = helpers::make_task(domain_text, problem_text);
    CHECK(t.task.actions.empty());
}

TEST_CASE("satellite tr01 contains switch_on(instrument0, satellite0)") {
    helpers::Task t = helpers::make_task(bench::satellite_domain(),
                                         bench::satellite_tr01_problem());
    bool found = false;
    for (const grounding::GroundAction &a : t.task.actions)
        if (a.name() == "(switch_on instrument0 satellite0)")
            found = true;
    CHECK(found);
}

TEST_CASE("applicable_actions agrees with a brute-force subset check") {
    mt19937 rng(7);
    for (unsigned int seed = 1; seed <= 4; ++seed) {
        helpers::Task t = helpers::blocksworld_task(4, seed);
        for (int trial = 0; trial < 10; ++trial) {
            State s = helpers::random_walk(t.task, 6, rng);
            vector<int> fast = grounding::applicable_actions(t.task, s);
            vector<int> slow;
            for (const grounding::GroundAction &a : t.task.actions) {
                bool ok = true;
                for (int p : a.pre)
                    if (!grounding::contains(s, p) &&
                        !grounding::contains(t.task.static_facts, p))
                        ok = false;
                if (ok)
                    slow.push_back(a.id);
            }
            CHECK(fast == slow);
            CHECK(is_sorted(fast.begin(), fast.end()));
        }
    }
}

TEST_CASE("two-block state with both on table has exactly the pick-ups") {
    helpers::Task t =
        helpers::make_task(bench::blocksworld_domain(), two_block_problem);
    vector<int> applicable =
        grounding::applicable_actions(t.task, t.task.init);
    set<string> names;
    for (int id : applicable)
        names.insert(t.task.actions[id].name());
    CHECK(names == set<string>{"(pick-up a)", "(pick-up b)"});
}

TEST_CASE("goal-complete dead state with no applicable action") {
    const char *domain_text =
        "(define (domain d) (:predicates (p) (q))"
        " (:action go :parameters () :precondition (p) :effect (and (q) (not (p)))))";
    const char *problem_text =
        "(define (problem p) (:domain d) (:objects)"
        " (:init (p)) (:goal (q)))";
    helpers::Task t = helpers::make_task(domain_text, problem_text);
    State goal_state =
        grounding::apply_action(t.task.init, t.task.actions[0]);
    CHECK(t.task.satisfies_goals(goal_state));
    CHECK(grounding::applicable_actions(t.task, goal_state).empty());
    // The empty state has no applicable action either.
    CHECK(grounding::applicable_actions(t.task, {}).empty());
}

TEST_CASE("apply_action follows STRIPS semantics on pick-up") {
    helpers::Task t =
        helpers::make_task(bench::blocksworld_domain(), two_block_problem);
    const grounding::GroundAction *pick_a = nullptr;
    for (const grounding::GroundAction &a : t.task.actions)
        if (a.name() == "(pick-up a)")
            pick_a = &a;
    REQUIRE(pick_a);
    State s = grounding::apply_action(t.task.init, *pick_a);

    auto holds = [&](const pddl::Atom &atom) {
        int id = t.task.facts.lookup(atom);
        return id >= 0 && grounding::contains(s, id);
    };
    CHECK(holds({"holding", {"a"}}));
    CHECK(!holds({"ontable", {"a"}}));
    CHECK(!holds({"handempty", {}}));
    CHECK(holds({"ontable", {"b"}}));
}

TEST_CASE("applying an exact inverse action restores the state") {
    helpers::Task t =
        helpers::make_task(bench::blocksworld_domain(), two_block_problem);
    const grounding::GroundAction *pick = nullptr;
    const grounding::GroundAction *put = nullptr;
    for (const grounding::GroundAction &a : t.task.actions) {
        if (a.name() == "(pick-up a)")
            pick = &a;
        if (a.name() == "(put-down a)")
            put = &a;
    }
    REQUIRE((pick && put));
    State s = grounding::apply_action(t.task.init, *pick);
    State back = grounding::apply_action(s, *put);
    CHECK(back == t.task.init);
}

TEST_CASE("action with empty add and del leaves the state unchanged") {
    const char *domain_text =
        "(define (domain d) (:predicates (p))"
        " (:action noop :parameters () :precondition (p) :effect (and)))";
    const char *problem_text =
        "(define (problem p) (:domain d) (:init (p)) (:goal (p)))";
    helpers::Task t = helpers::make_task(domain_text, problem_text);
    REQUIRE(t.task.actions.size() == 1);
    CHECK(grounding::apply_action(t.task.init, t.task.actions[0]) ==
          t.task.init);
}

TEST_CASE("apply_action never introduces static facts into a state") {
    mt19937 rng(11);
    helpers::Task t = helpers::satellite_task({2, 2, 4, 2}, 3);
    State s = t.task.init;
    for (int step = 0; step < 30; ++step) {
        vector<int> applicable = grounding::applicable_actions(t.task, s);
        if (applicable.empty())
            break;
        int pick = uniform_int_distribution<int>(
            0, static_cast<int>(applicable.size()) - 1)(rng);
        s = grounding::apply_action(s, t.task.actions[applicable[pick]]);
        for (int f : s)
            CHECK(!t.task.is_static_fact(f));
    }
}

TEST_CASE("grounding is deterministic across runs") {
    helpers::Task a = helpers::blocksworld_task(5, 42);
    helpers::Task b = helpers::blocksworld_task(5, 42);
    REQUIRE(a.task.actions.size() == b.task.actions.size());
    for (size_t i = 0; i < a.task.actions.size(); ++i) {
        CHECK(a.task.actions[i].name() == b.task.actions[i].name());
        CHECK(a.task.actions[i].pre == b.task.actions[i].pre);
    }
    CHECK(a.task.init == b.task.init);
    CHECK(a.task.facts.size() == b.task.facts.size());
}
