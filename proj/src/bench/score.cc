#include "score.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace std;
using util::Rational;

namespace bench {

Rational rational_from_decimal(const string &text) {
    string s = text;
    size_t dot = s.find('.');
    if (dot == string::npos)
        return Rational(stoll(s));
    string whole = s.substr(0, dot);
    string frac = s.substr(dot + 1);
    if (frac.size() > 9)
        frac = frac.substr(0, 9);
    long long den = 1;
    for (size_t i = 0; i < frac.size(); ++i)
        den *= 10;
    bool negative = !whole.empty() && whole[0] == '-';
    long long whole_value = whole.empty() || whole == "-" ? 0 : stoll(whole);
    long long magnitude = llabs(whole_value) * den +
                          (frac.empty() ? 0 : stoll(frac));
    return Rational(negative ? -magnitude : magnitude, den);
}

string decimal_from_rational(const Rational &value) {
    // Exact only when the denominator divides 10^6, which holds for all
    // times produced by rational_from_seconds and for parsed decimals.
    long long scaled_den = 1000000;
    if (scaled_den % value.denominator() != 0)
        return value.to_string();
    long long scaled = value.numerator() * (scaled_den / value.denominator());
    long long whole = scaled / scaled_den;
    long long frac = llabs(scaled % scaled_den);
    ostringstream os;
    if (scaled < 0 && whole == 0)
        os << "-";
    os << whole << ".";
    string digits = to_string(frac);
    os << string(6 - digits.size(), '0') << digits;
    return os.str();
}

Rational rational_from_seconds(double seconds) {
    long long micros = llround(seconds * 1e6);
    if (micros < 1)
        micros = 1;  // solved times are positive by contract
    return Rational(micros, 1000000);
}

namespace {

vector<string> ordered_unique(const vector<RunRecord> &records,
                              bool problems) {
    vector<string> order;
    for (const RunRecord &record : records) {
        const string &key = problems ? record.problem_id : record.config_id;
        if (find(order.begin(), order.end(), key) == order.end())
            order.push_back(key);
    }
    return order;
}

const RunRecord *find_record(const vector<RunRecord> &records,
                             const string &config, const string &problem) {
    for (const RunRecord &record : records)
        if (record.config_id == config && record.problem_id == problem)
            return &record;
    return nullptr;
}

map<string, Rational> score_by(const vector<RunRecord> &records,
                               bool use_time) {
    map<string, Rational> scores;
    vector<string> configs = ordered_unique(records, false);
    vector<string> problems = ordered_unique(records, true);
    for (const string &config : configs)
        scores[config] = Rational(0);

    for (const string &problem : problems) {
        bool any = false;
        Rational best(0);
        for (const string &config : configs) {
            const RunRecord *record = find_record(records, config, problem);
            if (!record || !record->solved)
                continue;
            Rational value = use_time ? record->time
                                      : Rational(record->plan_length);
            if (!any || value < best) {
                best = value;
                any = true;
            }
        }
        if (!any)
            continue;
        for (const string &config : configs) {
            const RunRecord *record = find_record(records, config, problem);
            if (!record || !record->solved)
                continue;
            Rational value = use_time ? record->time
                                      : Rational(record->plan_length);
            if (value.numerator() == 0 && best.numerator() == 0)
                scores[config] += Rational(1);  // both zero: equal quality
            else
                scores[config] += best / value;
        }
    }
    return scores;
}

}

map<string, Rational> time_score(const vector<RunRecord> &records) {
    return score_by(records, true);
}

map<string, Rational> quality_score(const vector<RunRecord> &records) {
    return score_by(records, false);
}

ScoreReport score_runs(const vector<RunRecord> &records) {
    ScoreReport report;
    report.configs = ordered_unique(records, false);
    vector<string> problems = ordered_unique(records, true);

    for (const string &config : report.configs)
        report.solved[config] = 0;
    for (const RunRecord &record : records)
        if (record.solved)
            ++report.solved[record.config_id];

    report.time_scores = time_score(records);
    report.quality_scores = quality_score(records);

    // Averages over problems solved by every config that solved
    // anything at all.
    vector<string> participants;
    for (const string &config : report.configs)
        if (report.solved[config] > 0)
            participants.push_back(config);
    vector<string> common;
    for (const string &problem : problems) {
        bool all = !participants.empty();
        for (const string &config : participants) {
            const RunRecord *record = find_record(records, config, problem);
            if (!record || !record->solved)
                all = false;
        }
        if (all)
            common.push_back(problem);
    }
    report.common_problems = static_cast<int>(common.size());
    if (!common.empty()) {
        for (const string &config : participants) {
            Rational time_sum(0);
            Rational length_sum(0);
            for (const string &problem : common) {
                const RunRecord *record = find_record(records, config, problem);
                time_sum += record->time;
                length_sum += Rational(record->plan_length);
            }
            Rational n(static_cast<long long>(common.size()));
            report.avg_time[config] = time_sum / n;
            report.avg_length[config] = length_sum / n;
        }
    }
    return report;
}

string format_report(const ScoreReport &report) {
    ostringstream os;
    os << "config solved time_score quality_score avg_time avg_length\n";
    for (const string &config : report.configs) {
        os << config << " " << report.solved.at(config) << " "
           << report.time_scores.at(config).to_double() << " "
           << report.quality_scores.at(config).to_double() << " ";
        if (report.avg_time.count(config))
            os << report.avg_time.at(config).to_double() << " "
               << report.avg_length.at(config).to_double();
        else
            os << "- -";
        os << "\n";
    }
    os << "common_problems " << report.common_problems << "\n";
    return os.str();
}

string to_csv(const vector<RunRecord> &records) {
    ostringstream os;
    os << "config,problem,solved,time,length,evaluations\n";
    for (const RunRecord &record : records) {
        os << record.config_id << "," << record.problem_id << ","
           << (record.solved ? 1 : 0) << ","
           << decimal_from_rational(record.time) << "," << record.plan_length
           << "," << record.evaluations << "\n";
    }
    return os.str();
}

vector<RunRecord> parse_csv(const string &text) {
    vector<RunRecord> records;
    istringstream in(text);
    string line;
    bool first = true;
    while (getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (first) {
            first = false;
            if (line.rfind("config,", 0) == 0)
                continue;
        }
        vector<string> cells;
        istringstream row(line);
        string cell;
        while (getline(row, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 6)
            throw runtime_error("malformed csv row: " + line);
        RunRecord record;
        record.config_id = cells[0];
        record.problem_id = cells[1];
        record.solved = cells[2] == "1";
        record.time = rational_from_decimal(cells[3]);
        record.plan_length = stoi(cells[4]);
        record.evaluations = stol(cells[5]);
        records.push_back(move(record));
    }
    return records;
}

}
