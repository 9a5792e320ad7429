#include "doctest.h"

#include "learner/bias.h"
#include "learner/induce.h"
#include "learner/kb.h"
#include "learner/query.h"
#include "learner/tree.h"

#include <map>
#include <random>
#include <set>

using namespace std;
using namespace learner;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

namespace {

Fact fact(const string &pred, vector<string> args) {
    return Fact{pred, move(args)};
}

IndexedFacts indexed(vector<Fact> facts) {
    IndexedFacts result;
    for (Fact &f : facts)
        result.add(move(f));
    return result;
}

// Operator-task bias over two context predicates, used by the
// synthetic induction suites.
LanguageBias toy_bias(vector<string> classes) {
    LanguageBias bias;
    bias.target_predicate = "selected";
    bias.target_arg_types = {"index", "idprob", "class"};
    bias.classes = move(classes);
    bias.modes.push_back(
        BiasMode{"helpful_switch_on", {"index", "idprob", "instrument",
                 "satellite"}});
    bias.modes.push_back(
        BiasMode{"target_goal_have_image", {"index", "idprob", "direction",
                 "mode"}});
    bias.modes.push_back(
        BiasMode{"static_fact_supports", {"idprob", "instrument", "mode"}});
    return bias;
}

KbExample example_with(const string &id, const string &label,
                       vector<Fact> facts) {
    KbExample example;
    example.example_id = id;
    example.problem_id = "p1";
    example.facts = move(facts);
    example.instances.push_back(TargetInstance{{}, label});
    return example;
}

}

TEST_CASE("query_succeeds: basics and variable sharing") {
    IndexedFacts facts = indexed({
        fact("helpful_switch_on", {"e1", "p1", "ins0", "sat0"}),
        fact("target_goal_have_image", {"e1", "p1", "d2", "m1"}),
        fact("static_fact_supports", {"p1", "ins0", "m1"}),
    });

    QueryLiteral match{"helpful_switch_on",
                       {QueryArg::bound(0), QueryArg::bound(1),
                        QueryArg::fresh(3), QueryArg::fresh(4)}};
    Bindings bindings(5);
    bindings.bind(0, "e1");
    bindings.bind(1, "p1");
    vector<const QueryLiteral *> conj = {&match};
    CHECK(query_succeeds(facts, conj, bindings));

    // Absent predicate fails.
    QueryLiteral absent{"helpful_calibrate",
                        {QueryArg::bound(0), QueryArg::bound(1),
                         QueryArg::fresh(3), QueryArg::fresh(4),
                         QueryArg::fresh(5)}};
    Bindings bindings2(6);
    bindings2.bind(0, "e1");
    bindings2.bind(1, "p1");
    vector<const QueryLiteral *> conj2 = {&absent};
    CHECK(!query_succeeds(facts, conj2, bindings2));

    // Shared variable: the goal's mode must be supported by the same
    // instrument that is helpful to switch on.
    QueryLiteral goal{"target_goal_have_image",
                      {QueryArg::bound(0), QueryArg::bound(1),
                       QueryArg::fresh(3), QueryArg::fresh(4)}};
    QueryLiteral support{"static_fact_supports",
                         {QueryArg::bound(1), QueryArg::fresh(5),
                          QueryArg::bound(4)}};
    Bindings bindings3(6);
    bindings3.bind(0, "e1");
    bindings3.bind(1, "p1");
    vector<const QueryLiteral *> conj3 = {&goal, &support};
    Bindings witness;
    CHECK(query_succeeds(facts, conj3, bindings3, &witness));
    CHECK(witness.value(4) == "m1");
    CHECK(witness.value(5) == "ins0");

    // Empty conjunction is trivially true.
    vector<const QueryLiteral *> empty;
    Bindings bindings4(1);
    CHECK(query_succeeds(facts, empty, bindings4));
}

TEST_CASE("candidate generation: identifiers stay bound, objects branch") {
    LanguageBias bias = toy_bias({"a", "b"});

    // Only identifiers bound: each object slot can only be fresh.
    vector<QueryLiteral> root = generate_candidate_queries(bias, {}, 0, 1, 3);
    REQUIRE(root.size() == 3);
    for (const QueryLiteral &q : root) {
        CHECK((q.args[0].kind == QueryArg::kBound));
        for (size_t i = q.predicate.rfind("static_", 0) == 0 ? 1 : 2;
             i < q.args.size(); ++i)
            CHECK(q.args[i].kind == QueryArg::kFresh);
    }

    // One bound instrument variable: the closed-form count is the
    // product of (compatible bound vars + 1) per object slot.
    vector<TypedVar> bound = {{5, "instrument"}};
    vector<QueryLiteral> candidates =
        generate_candidate_queries(bias, bound, 0, 1, 6);
    // helpful_switch_on: instrument slot {5, fresh} x satellite {fresh} = 2
    // target_goal_have_image: direction x mode = 1
    // static_fact_supports: instrument {5,fresh} x mode {fresh} = 2
    CHECK(candidates.size() == 2 + 1 + 2);
}

TEST_CASE("induction: all same class yields a single leaf") {
    KnowledgeBase kb;
    kb.target_predicate = "selected";
    for (int i = 0; i < 5; ++i)
        kb.examples.push_back(example_with(
            "e" + to_string(i), "a",
            {fact("helpful_switch_on", {"e" + to_string(i), "p1", "ins0",
                                        "sat0"})}));
    RelationalTree tree = induce_tree(kb, toy_bias({"a", "b"}));
    REQUIRE(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].is_leaf);
    CHECK(tree.classes[tree.nodes[0].majority] == "a");
    CHECK(tree.leaf_total(tree.nodes[0]) == 5);
}

TEST_CASE("induction: single-literal rule reaches a pure split") {
    KnowledgeBase kb;
    kb.target_predicate = "selected";
    for (int i = 0; i < 10; ++i) {
        string id = "e" + to_string(i);
        if (i % 2 == 0)
            kb.examples.push_back(example_with(
                id, "switch_on",
                {fact("helpful_switch_on", {id, "p1", "ins0", "sat0"})}));
        else
            kb.examples.push_back(example_with(
                id, "turn_to",
                {fact("target_goal_have_image", {id, "p1", "d1", "m1"})}));
    }
    RelationalTree tree = induce_tree(kb, toy_bias({"switch_on", "turn_to"}));
    REQUIRE(tree.nodes.size() == 3);
    CHECK(!tree.nodes[0].is_leaf);
    CHECK(training_accuracy(tree, kb) == 1.0);

    long long total = 0;
    for (const TreeNode &node : tree.nodes)
        if (node.is_leaf)
            total += tree.leaf_total(node);
    CHECK(total == kb.num_instances());
}

TEST_CASE("induction throws on an empty knowledge base") {
    KnowledgeBase kb;
    kb.target_predicate = "selected";
    CHECK_THROWS(induce_tree(kb, toy_bias({"a"})));
}

TEST_CASE("induction is deterministic byte-for-byte") {
    KnowledgeBase kb;
    kb.target_predicate = "selected";
    mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        string id = "e" + to_string(i);
        vector<Fact> facts;
        if (rng() % 2)
            facts.push_back(
                fact("helpful_switch_on", {id, "p1", "ins0", "sat0"}));
        if (rng() % 2)
            facts.push_back(
                fact("target_goal_have_image", {id, "p1", "d1", "m1"}));
        kb.examples.push_back(example_with(
            id, (rng() % 3) ? "a" : "b", move(facts)));
    }
    LanguageBias bias = toy_bias({"a", "b"});
    string first = print_tree(induce_tree(kb, bias));
    string second = print_tree(induce_tree(kb, bias));
    CHECK(first == second);
    CHECK(first == print_tree(parse_tree(first)));
}

TEST_CASE("leaf counts are consistent with routing every example") {
    KnowledgeBase kb;
    kb.target_predicate = "selected";
    mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        string id = "e" + to_string(i);
        vector<Fact> facts;
        if (rng() % 3)
            facts.push_back(fact("helpful_switch_on",
                                 {id, "p1", "ins" + to_string(rng() % 2),
                                  "sat0"}));
        if (rng() % 3)
            facts.push_back(fact("target_goal_have_image",
                                 {id, "p1", "d" + to_string(rng() % 2),
                                  "m1"}));
        kb.examples.push_back(
            example_with(id, (rng() % 2) ? "a" : "b", move(facts)));
    }
    LanguageBias bias = toy_bias({"a", "b"});
    RelationalTree tree = induce_tree(kb, bias);

    map<const TreeNode *, vector<long long>> routed;
    for (const KbExample &example : kb.examples) {
        IndexedFacts facts;
        for (const Fact &f : example.facts)
            facts.add(f);
        const TreeNode &leaf = classify(
            tree, facts, {example.example_id, example.problem_id});
        auto &counts = routed[&leaf];
        counts.resize(tree.classes.size(), 0);
        for (size_t c = 0; c < tree.classes.size(); ++c)
            if (tree.classes[c] == example.instances[0].label)
                ++counts[c];
    }
    long long total = 0;
    for (const TreeNode &node : tree.nodes) {
        if (!node.is_leaf)
            continue;
        total += tree.leaf_total(node);
        auto it = routed.find(&node);
        if (it != routed.end())
            CHECK(node.class_counts == it->second);
        else
            CHECK(tree.leaf_total(node) == 0);
    }
    CHECK(total == kb.num_instances());
}

TEST_CASE("figure operator tree loads verbatim and classifies as printed") {
    RelationalTree tree =
        load_tree_file(string(FIXTURE_DIR) + "/satellite-ops.tree");
    CHECK(tree.target_predicate == "selected");
    CHECK(tree.classes == vector<string>{"turn_to", "switch_on", "switch_off",
                                         "calibrate", "take_image"});

    // A context with a helpful calibrate action.
    IndexedFacts with_calibrate = indexed({
        fact("helpful_calibrate", {"e0", "p0", "sat0", "ins0", "d0"}),
        fact("helpful_turn_to", {"e0", "p0", "sat0", "d1", "d0"}),
    });
    const TreeNode &leaf1 = classify(tree, with_calibrate, {"e0", "p0"});
    CHECK(tree.classes[leaf1.majority] == "calibrate");
    CHECK(tree.count_for(leaf1, "calibrate") == 44);
    CHECK(tree.leaf_total(leaf1) == 44);

    // No helpful calibrate/take_image/switch_on at all.
    IndexedFacts only_turns = indexed({
        fact("helpful_turn_to", {"e0", "p0", "sat0", "d1", "d0"}),
        fact("target_goal_have_image", {"e0", "p0", "d1", "m0"}),
    });
    const TreeNode &leaf2 = classify(tree, only_turns, {"e0", "p0"});
    CHECK(tree.classes[leaf2.majority] == "turn_to");
    CHECK(tree.count_for(leaf2, "turn_to") == 149);

    // switch_on branch: counts 44 switch_on vs 15 turn_to.
    IndexedFacts with_switch = indexed({
        fact("helpful_switch_on", {"e0", "p0", "ins0", "sat0"}),
    });
    const TreeNode &leaf3 = classify(tree, with_switch, {"e0", "p0"});
    CHECK(tree.classes[leaf3.majority] == "switch_on");
    CHECK(tree.count_for(leaf3, "switch_on") == 44);
    CHECK(tree.count_for(leaf3, "turn_to") == 15);
    CHECK(tree.leaf_total(leaf3) == 59);

    // Round-trip stability of the canonical printer.
    CHECK(print_tree(tree) == print_tree(parse_tree(print_tree(tree))));
    validate_tree_scoping(tree);
}

TEST_CASE("figure binding tree reuses the target arguments") {
    RelationalTree tree =
        load_tree_file(string(FIXTURE_DIR) + "/satellite-switch_on.tree");
    CHECK(tree.target_predicate == "selected_switch_on");
    CHECK(tree.num_target_args == 5);

    IndexedFacts facts = indexed({
        fact("helpful_switch_on", {"e0", "p0", "ins1", "sat0"}),
    });
    // The candidate that IS helpful reaches the yes leaf.
    const TreeNode &yes =
        classify(tree, facts, {"e0", "p0", "ins1", "sat0"});
    CHECK(tree.count_for(yes, "selected") == 213);
    CHECK(tree.count_for(yes, "rejected") == 36);

    // A different binding falls to the no leaf.
    const TreeNode &no = classify(tree, facts, {"e0", "p0", "ins0", "sat0"});
    CHECK(tree.count_for(no, "selected") == 2);
    CHECK(tree.count_for(no, "rejected") == 61);
}

TEST_CASE("classify re-quantifies shared variables at every node") {
    // The first witness for the root query (b8) fails the child query;
    // the walk must still find the joint witness (b10) instead of
    // committing to the first one.
    const char *tree_text =
        "selected(-A, -B, -C)\n"
        "helpful_unstack(A, B, -D, -E) ?\n"
        "+--yes: target_goal_ontable(A, B, D) ?\n"
        "|  +--yes: [unstack] 3.0 [[pick-up:0.0, unstack:3.0]]\n"
        "|  +--no:  [pick-up] 2.0 [[pick-up:2.0, unstack:0.0]]\n"
        "+--no:  [pick-up] 5.0 [[pick-up:5.0, unstack:0.0]]\n";
    RelationalTree tree = parse_tree(tree_text);
    IndexedFacts facts = indexed({
        fact("helpful_unstack", {"e0", "p0", "b8", "b1"}),
        fact("helpful_unstack", {"e0", "p0", "b10", "b13"}),
        fact("target_goal_ontable", {"e0", "p0", "b10"}),
    });
    const TreeNode &leaf = classify(tree, facts, {"e0", "p0"});
    CHECK(tree.classes[leaf.majority] == "unstack");
}

TEST_CASE("tree scoping violations are rejected") {
    const char *bad =
        "selected(-A, -B, -C)\n"
        "helpful_switch_on(A, B, -D, Z) ?\n"
        "+--yes: [a] 1.0 [[a:1.0, b:0.0]]\n"
        "+--no:  [b] 1.0 [[a:0.0, b:1.0]]\n";
    CHECK_THROWS(parse_tree(bad));

    // A no-branch must not see the yes-branch's variables.
    const char *leaked =
        "selected(-A, -B, -C)\n"
        "helpful_switch_on(A, B, -D, -E) ?\n"
        "+--yes: [a] 1.0 [[a:1.0, b:0.0]]\n"
        "+--no:  static_fact_supports(B, D, -F) ?\n"
        "|  +--yes: [a] 1.0 [[a:1.0, b:0.0]]\n"
        "|  +--no:  [b] 1.0 [[a:0.0, b:1.0]]\n";
    CHECK_THROWS(parse_tree(leaked));
}

TEST_CASE("kb files round-trip through emit and parse") {
    KnowledgeBase kb;
    kb.target_predicate = "selected_pick-up";
    KbExample example;
    example.example_id = "tr01_e1";
    example.problem_id = "tr01";
    example.instances.push_back(TargetInstance{{"b1"}, "selected"});
    example.instances.push_back(TargetInstance{{"b2"}, "rejected"});
    example.facts.push_back(
        fact("helpful_pick-up", {"tr01_e1", "tr01", "b1"}));
    example.facts.push_back(
        fact("target_goal_on", {"tr01_e1", "tr01", "b1", "b2"}));
    kb.examples.push_back(example);
    kb.statics["tr01"] = {};

    string text = emit_kb(kb);
    KnowledgeBase parsed = parse_kb(text);
    REQUIRE(parsed.examples.size() == 1);
    CHECK(parsed.target_predicate == "selected_pick-up");
    CHECK(parsed.examples[0].example_id == "tr01_e1");
    CHECK(parsed.examples[0].instances.size() == 2);
    CHECK(parsed.examples[0].instances[0].args == vector<string>{"b1"});
    CHECK(parsed.examples[0].instances[0].label == "selected");
    CHECK(parsed.examples[0].facts == kb.examples[0].facts);
    CHECK(emit_kb(parsed) == text);
}

TEST_CASE("bias files round-trip and keep declaration order") {
    LanguageBias bias = toy_bias({"a", "b"});
    string text = emit_bias(bias);
    LanguageBias parsed = parse_bias(text);
    CHECK(parsed.target_predicate == "selected");
    CHECK(parsed.target_arg_types == bias.target_arg_types);
    CHECK(parsed.classes == bias.classes);
    REQUIRE(parsed.modes.size() == bias.modes.size());
    for (size_t i = 0; i < bias.modes.size(); ++i) {
        CHECK(parsed.modes[i].predicate == bias.modes[i].predicate);
        CHECK(parsed.modes[i].arg_types == bias.modes[i].arg_types);
    }
    CHECK(emit_bias(parsed) == text);
}
