#ifndef SEARCH_SEARCH_TYPES_H
#define SEARCH_SEARCH_TYPES_H

#include "../grounding/ground_task.h"
#include "../util/rational.h"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace search {

enum class Algorithm {kDfPolicy, kLookaheadBfs, kLookaheadBfsHa};
enum class DckSource {kTrees, kFfOrder, kNone};

struct SearchConfig {
    Algorithm algorithm = Algorithm::kDfPolicy;
    DckSource dck_source = DckSource::kTrees;
    int horizon = 100;               // lookahead algorithms only
    util::Rational weight = util::Rational(1);  // omega in f = w*h + g
    double time_bound = 60.0;        // seconds; <= 0 means unbounded
    bool anytime = false;
    bool record_expansions = false;  // trace of expanded states, for tests
};

struct SearchStats {
    long evaluated = 0;   // actual heuristic computations (cache hits excluded)
    long expanded = 0;
    long lookahead = 0;   // lookahead states added to open
    double time = 0.0;
};

struct SearchResult {
    bool solved = false;
    bool timeout = false;
    std::vector<int> plan;  // action ids
    SearchStats stats;
    std::vector<grounding::State> expansion_trace;  // when recorded

    int plan_length() const {return static_cast<int>(plan.size());}
};

// Invoked for each solution as it is found; used by the anytime mode.
using SolutionCallback = std::function<void(const SearchResult &)>;

struct StateHash {
    size_t operator()(const grounding::State &s) const {
        size_t h = 1469598103934665603ull;
        for (int f : s) {
            h ^= static_cast<size_t>(f) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/*
  Global per-search duplicate table, keyed by the state fact set. It
  stores the lowest g of any accepted insertion and the cached (h,
  helpful) evaluation so repeated states are never re-evaluated.
*/
struct StateRecord {
    int best_g = std::numeric_limits<int>::max();
    int expanded_g = std::numeric_limits<int>::max();
    bool evaluated = false;
    int h = 0;
    std::vector<int> helpful;
};

using StateTable =
    std::unordered_map<grounding::State, StateRecord, StateHash>;

std::string format_stats_line(const SearchResult &result);

}

#endif
