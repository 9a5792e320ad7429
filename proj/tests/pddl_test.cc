#include "doctest.h"

#include "bench/fixtures.h"
#include "pddl/model.h"
#include "pddl/parser.h"

#include <set>

using namespace std;

TEST_CASE("satellite domain parses with the five operators") {
    pddl::DomainModel domain = pddl::parse_domain(bench::satellite_domain());
    REQUIRE(domain.operators.size() == 5);
    CHECK(domain.operators[0].name == "turn_to");
    CHECK(domain.operators[1].name == "switch_on");
    CHECK(domain.operators[2].name == "switch_off");
    CHECK(domain.operators[3].name == "calibrate");
    CHECK(domain.operators[4].name == "take_image");
}

TEST_CASE("domain with zero operators is valid") {
    pddl::DomainModel domain = pddl::parse_domain(
        "(define (domain empty) (:requirements :strips :typing)"
        " (:types thing) (:predicates (p ?x - thing)))");
    CHECK(domain.operators.empty());
    // Every predicate is trivially static.
    CHECK(pddl::detect_static_predicates(domain) == set<string>{"p"});
}

TEST_CASE("operator using an undeclared predicate is a semantic error") {
    const char *text =
        "(define (domain bad) (:requirements :strips)"
        " (:predicates (p ?x))"
        " (:action a :parameters (?x) :precondition (q ?x) :effect (p ?x)))";
    CHECK_THROWS_AS(pddl::parse_domain(text), pddl::ParseError);
}

TEST_CASE("unsupported features are rejected with a named diagnostic") {
    pddl::DomainModel satellite =
        pddl::parse_domain(bench::satellite_domain());
    (void)satellite;

    const char *negative_pre =
        "(define (domain bad) (:predicates (p ?x))"
        " (:action a :parameters (?x) :precondition (not (p ?x))"
        " :effect (p ?x)))";
    CHECK_THROWS_WITH_AS(pddl::parse_domain(negative_pre),
                         doctest::Contains("negative preconditions"),
                         pddl::ParseError);

    const char *conditional =
        "(define (domain bad) (:predicates (p ?x) (q ?x))"
        " (:action a :parameters (?x) :precondition (p ?x)"
        " :effect (when (p ?x) (q ?x))))";
    CHECK_THROWS_WITH_AS(pddl::parse_domain(conditional),
                         doctest::Contains("conditional"), pddl::ParseError);

    const char *quantified =
        "(define (domain bad) (:predicates (p ?x))"
        " (:action a :parameters (?x) :precondition (forall (?y) (p ?y))"
        " :effect (p ?x)))";
    CHECK_THROWS_AS(pddl::parse_domain(quantified), pddl::ParseError);

    const char *numeric =
        "(define (domain bad) (:requirements :strips :fluents)"
        " (:predicates (p ?x)))";
    CHECK_THROWS_WITH_AS(pddl::parse_domain(numeric),
                         doctest::Contains(":fluents"), pddl::ParseError);

    const char *either =
        "(define (domain bad) (:types a b)"
        " (:constants c - (either a b)) (:predicates (p)))";
    CHECK_THROWS_AS(pddl::parse_domain(either), pddl::ParseError);
}

TEST_CASE("problem tr01 parses and carries the goal atoms") {
    pddl::DomainModel domain = pddl::parse_domain(bench::satellite_domain());
    pddl::ProblemModel problem =
        pddl::parse_problem(bench::satellite_tr01_problem(), domain);
    pddl::Atom goal{"have_image", {"phenomenon3", "infrared2"}};
    bool found = false;
    for (const pddl::Atom &atom : problem.goals)
        if (atom == goal)
            found = true;
    CHECK(found);
    CHECK(problem.goals.size() == 3);
}

TEST_CASE("problem with goals contained in init is valid") {
    pddl::DomainModel domain = pddl::parse_domain(bench::blocksworld_domain());
    const char *text =
        "(define (problem trivial) (:domain blocksworld)"
        " (:objects a b - block)"
        " (:init (ontable a) (ontable b) (clear a) (clear b) (handempty)"
        "        (on a b))"
        " (:goal (on a b)))";
    pddl::ProblemModel problem = pddl::parse_problem(text, domain);
    CHECK(problem.goals.size() == 1);
}

TEST_CASE("goal referencing an unknown object is an error") {
    pddl::DomainModel domain = pddl::parse_domain(bench::blocksworld_domain());
    const char *text =
        "(define (problem bad) (:domain blocksworld)"
        " (:objects a - block)"
        " (:init (ontable a) (clear a) (handempty))"
        " (:goal (on a zz)))";
    CHECK_THROWS_WITH_AS(pddl::parse_problem(text, domain),
                         doctest::Contains("zz"), pddl::ParseError);
}

TEST_CASE("static predicates are the complement of effect predicates") {
    pddl::DomainModel satellite =
        pddl::parse_domain(bench::satellite_domain());
    set<string> expected = {"calibration_target", "supports", "on_board"};
    CHECK(pddl::detect_static_predicates(satellite) == expected);

    // Direct set computation as an independent check.
    set<string> effects;
    for (const pddl::OperatorSchema &op : satellite.operators) {
        for (const pddl::Atom &a : op.add)
            effects.insert(a.predicate);
        for (const pddl::Atom &a : op.del)
            effects.insert(a.predicate);
    }
    for (const pddl::PredicateDecl &pred : satellite.predicates)
        CHECK(pddl::detect_static_predicates(satellite).count(pred.name) ==
              (effects.count(pred.name) ? 0u : 1u));

    // Blocksworld has no static predicate.
    pddl::DomainModel bw = pddl::parse_domain(bench::blocksworld_domain());
    CHECK(pddl::detect_static_predicates(bw).empty());
}

TEST_CASE("every operator's atoms only use declared parameters") {
    const char *loose =
        "(define (domain bad) (:predicates (p ?x))"
        " (:action a :parameters (?x) :precondition (p ?x)"
        " :effect (p ?y)))";
    CHECK_THROWS_AS(pddl::parse_domain(loose), pddl::ParseError);
}

TEST_CASE("pretty-printing round-trips to a structurally identical model") {
    pddl::DomainModel satellite =
        pddl::parse_domain(bench::satellite_domain());
    pddl::DomainModel reparsed =
        pddl::parse_domain(pddl::print_domain(satellite));
    CHECK(satellite == reparsed);

    pddl::ProblemModel tr01 =
        pddl::parse_problem(bench::satellite_tr01_problem(), satellite);
    pddl::ProblemModel tr01_reparsed =
        pddl::parse_problem(pddl::print_problem(tr01), satellite);
    CHECK(tr01 == tr01_reparsed);

    pddl::DomainModel bw = pddl::parse_domain(bench::blocksworld_domain());
    CHECK(bw == pddl::parse_domain(pddl::print_domain(bw)));
}

TEST_CASE("parse errors carry line and column information") {
    try {
        pddl::parse_domain("(define (domain x)\n  (:predicates (p ?x)\n");
        FAIL("expected a parse error");
    } catch (const pddl::ParseError &error) {
        CHECK(error.line >= 1);
        CHECK(error.format("f.pddl").find("f.pddl:") == 0);
    }
}

TEST_CASE("symbols are case-insensitive") {
    pddl::DomainModel domain = pddl::parse_domain(
        "(define (domain CaseTest) (:predicates (P ?x))"
        " (:action Act :parameters (?X) :precondition (p ?x)"
        " :effect (P ?X)))");
    CHECK(domain.name == "casetest");
    CHECK(domain.operators[0].name == "act");
    CHECK(domain.operators[0].pre[0].predicate == "p");
}
