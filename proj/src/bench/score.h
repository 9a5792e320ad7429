#ifndef BENCH_SCORE_H
#define BENCH_SCORE_H

#include "../util/rational.h"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bench {

struct RunRecord {
    std::string config_id;
    std::string problem_id;
    bool solved = false;
    util::Rational time;  // seconds, exact decimal; meaningful when solved
    int plan_length = 0;
    long evaluations = 0;
};

// IPC-style scores. Per problem the best solver sets the reference time
// (resp. length) and every solver receives reference/own points;
// unsolved receives 0. Per-config scores sum over problems. Averages
// are taken only over problems solved by all configs that solved at
// least one problem; configs without any solved problem get no
// averages.
std::map<std::string, util::Rational> time_score(
    const std::vector<RunRecord> &records);
std::map<std::string, util::Rational> quality_score(
    const std::vector<RunRecord> &records);

struct ScoreReport {
    std::vector<std::string> configs;  // first-appearance order
    std::map<std::string, int> solved;
    std::map<std::string, util::Rational> time_scores;
    std::map<std::string, util::Rational> quality_scores;
    std::map<std::string, util::Rational> avg_time;
    std::map<std::string, util::Rational> avg_length;
    int common_problems = 0;
};

ScoreReport score_runs(const std::vector<RunRecord> &records);
std::string format_report(const ScoreReport &report);

// CSV round-trip: header config,problem,solved,time,length,evaluations.
// Times are written as decimal strings and re-read exactly, so report
// recomputation from CSV is idempotent.
std::string to_csv(const std::vector<RunRecord> &records);
std::vector<RunRecord> parse_csv(const std::string &text);

util::Rational rational_from_decimal(const std::string &text);
std::string decimal_from_rational(const util::Rational &value);
util::Rational rational_from_seconds(double seconds);

}

#endif
