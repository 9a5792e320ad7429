#include "search_types.h"

#include <sstream>

using namespace std;

namespace search {

string format_stats_line(const SearchResult &result) {
    ostringstream os;
    os << "evaluated=" << result.stats.evaluated
       << " expanded=" << result.stats.expanded
       << " lookahead=" << result.stats.lookahead
       << " length=" << (result.solved ? result.plan_length() : -1)
       << " time=" << result.stats.time;
    return os.str();
}

}
