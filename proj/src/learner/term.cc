#include "term.h"

#include <cctype>

using namespace std;

namespace learner {

string trim(const string &text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && isspace(static_cast<unsigned char>(text[begin])))
        ++begin;
    while (end > begin && isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    return text.substr(begin, end - begin);
}

vector<string> split_top_level(const string &text) {
    vector<string> parts;
    int depth = 0;
    string current;
    for (char c : text) {
        if (c == '(' || c == '[') {
            ++depth;
            current += c;
        } else if (c == ')' || c == ']') {
            --depth;
            current += c;
        } else if (c == ',' && depth == 0) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    string last = trim(current);
    if (!last.empty() || !parts.empty())
        parts.push_back(last);
    return parts;
}

bool parse_term(const string &raw, Term &out) {
    string text = trim(raw);
    if (text.empty())
        return false;
    size_t open = text.find('(');
    if (open == string::npos) {
        out.functor = text;
        out.args.clear();
        return !out.functor.empty();
    }
    if (text.back() != ')')
        return false;
    out.functor = trim(text.substr(0, open));
    if (out.functor.empty())
        return false;
    string inner = text.substr(open + 1, text.size() - open - 2);
    out.args.clear();
    if (!trim(inner).empty())
        out.args = split_top_level(inner);
    return true;
}

}
