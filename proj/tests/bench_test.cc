#include "doctest.h"

#include "bench/score.h"
#include "bench/suite.h"
#include "helpers.h"

using namespace std;
using bench::RunRecord;
using util::Rational;

namespace {

RunRecord run(const string &config, const string &problem, bool solved,
              const string &time, int length) {
    RunRecord record;
    record.config_id = config;
    record.problem_id = problem;
    record.solved = solved;
    record.time = bench::rational_from_decimal(time);
    record.plan_length = length;
    record.evaluations = 1;
    return record;
}

}

TEST_CASE("time score: halves, winners and unsolved") {
    vector<RunRecord> records = {
        run("fast", "p1", true, "2.0", 10),
        run("slow", "p1", true, "4.0", 10),
        run("dnf", "p1", false, "0.0", 0),
    };
    auto scores = bench::time_score(records);
    CHECK(scores["fast"] == Rational(1));
    CHECK(scores["slow"] == Rational(1, 2));
    CHECK(scores["dnf"] == Rational(0));
}

TEST_CASE("quality score mirrors the time score with lengths") {
    vector<RunRecord> records = {
        run("short", "p1", true, "1.0", 10),
        run("long", "p1", true, "1.0", 20),
        run("tie_a", "p2", true, "1.0", 7),
        run("tie_b", "p2", true, "1.0", 7),
    };
    auto scores = bench::quality_score(records);
    CHECK(scores["short"] == Rational(1));
    CHECK(scores["long"] == Rational(1, 2));
    CHECK(scores["tie_a"] == Rational(1));
    CHECK(scores["tie_b"] == Rational(1));
}

TEST_CASE("3-config by 4-problem table matches the hand computation") {
    // Hand-set times and lengths; unsolved cells score zero.
    vector<RunRecord> records = {
        run("c1", "p1", true, "1.0", 4),  run("c2", "p1", true, "2.0", 8),
        run("c3", "p1", true, "4.0", 4),  run("c1", "p2", true, "3.0", 9),
        run("c2", "p2", true, "1.0", 3),  run("c3", "p2", false, "0.0", 0),
        run("c1", "p3", false, "0.0", 0), run("c2", "p3", true, "5.0", 10),
        run("c3", "p3", true, "5.0", 20), run("c1", "p4", true, "1.0", 6),
        run("c2", "p4", false, "0.0", 0), run("c3", "p4", false, "0.0", 0),
    };
    auto time_scores = bench::time_score(records);
    auto quality_scores = bench::quality_score(records);

    // c1: 1 + 1/3 + 0 + 1; c2: 1/2 + 1 + 1 + 0; c3: 1/4 + 0 + 1 + 0.
    CHECK(time_scores["c1"] == Rational(7, 3));
    CHECK(time_scores["c2"] == Rational(5, 2));
    CHECK(time_scores["c3"] == Rational(5, 4));
    // c1: 1 + 1/3 + 0 + 1; c2: 1/2 + 1 + 1 + 0; c3: 1 + 0 + 1/2 + 0.
    CHECK(quality_scores["c1"] == Rational(7, 3));
    CHECK(quality_scores["c2"] == Rational(5, 2));
    CHECK(quality_scores["c3"] == Rational(3, 2));

    // Scores live in [0, #problems].
    for (const auto &[config, score] : time_scores) {
        CHECK(score >= Rational(0));
        CHECK(score <= Rational(4));
    }

    // Averages only over problems solved by every config with >= 1 solve.
    bench::ScoreReport report = bench::score_runs(records);
    CHECK(report.common_problems == 1);  // only p1 solved by all three
    CHECK(report.avg_time["c1"] == Rational(1));
    CHECK(report.avg_length["c3"] == Rational(4));
}

TEST_CASE("scores are invariant under scaling all times") {
    vector<RunRecord> base = {
        run("a", "p1", true, "1.5", 5),
        run("b", "p1", true, "4.5", 5),
        run("a", "p2", true, "2.0", 5),
        run("b", "p2", true, "3.0", 5),
    };
    vector<RunRecord> scaled = base;
    for (RunRecord &record : scaled)
        record.time = record.time * Rational(7);
    CHECK(bench::time_score(base) == bench::time_score(scaled));
}

TEST_CASE("identical configs get identical scores") {
    vector<RunRecord> records = {
        run("x", "p1", true, "2.5", 6),
        run("y", "p1", true, "2.5", 6),
        run("x", "p2", true, "1.0", 3),
        run("y", "p2", true, "1.0", 3),
    };
    auto time_scores = bench::time_score(records);
    auto quality_scores = bench::quality_score(records);
    CHECK(time_scores["x"] == time_scores["y"]);
    CHECK(quality_scores["x"] == quality_scores["y"]);
    CHECK(time_scores["x"] == Rational(2));
}

TEST_CASE("csv round-trip recomputes the identical report") {
    vector<RunRecord> records = {
        run("c1", "p1", true, "0.125", 4),
        run("c2", "p1", false, "0.0", 0),
        run("c1", "p2", true, "3.5", 9),
        run("c2", "p2", true, "0.25", 7),
    };
    string csv = bench::to_csv(records);
    vector<RunRecord> parsed = bench::parse_csv(csv);
    REQUIRE(parsed.size() == records.size());
    CHECK(bench::to_csv(parsed) == csv);

    bench::ScoreReport a = bench::score_runs(records);
    bench::ScoreReport b = bench::score_runs(parsed);
    CHECK(a.time_scores == b.time_scores);
    CHECK(a.quality_scores == b.quality_scores);
    CHECK(a.solved == b.solved);
    CHECK(bench::format_report(a) == bench::format_report(b));
}

TEST_CASE("run_suite solves a trivial problem with full scores") {
    helpers::Task t = helpers::make_task(
        bench::blocksworld_domain(),
        "(define (problem p) (:domain blocksworld) (:objects a b - block)"
        " (:init (ontable a) (ontable b) (clear a) (clear b) (handempty))"
        " (:goal (on a b)))");
    search::SearchConfig cfg;
    cfg.algorithm = search::Algorithm::kDfPolicy;
    cfg.dck_source = search::DckSource::kNone;
    cfg.time_bound = 10.0;

    vector<bench::SuiteConfig> configs = {
        bench::SuiteConfig{"df-ha", cfg, nullptr},
        bench::SuiteConfig{"df-ha-2", cfg, nullptr},
    };
    vector<bench::SuiteProblem> problems = {
        bench::SuiteProblem{"p", &t.task}};
    vector<RunRecord> records = bench::run_suite(configs, problems, 2);
    REQUIRE(records.size() == 2);
    bench::ScoreReport report = bench::score_runs(records);
    CHECK(report.solved["df-ha"] == 1);
    CHECK(report.quality_scores["df-ha"] == Rational(1));
    CHECK(report.quality_scores["df-ha-2"] == Rational(1));
}
