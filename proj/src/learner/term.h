#ifndef LEARNER_TERM_H
#define LEARNER_TERM_H

#include <string>
#include <vector>

namespace learner {

// Minimal prolog-ish term reader shared by the kb, bias and tree file
// parsers. Functors are lowercase symbols (hyphens allowed, as in
// "pick-up"); argument strings are kept verbatim so callers can
// interpret +/- markers or nested terms themselves.
struct Term {
    std::string functor;
    std::vector<std::string> args;
};

// Parses "f(a, b, g(c))" -> {f, ["a", "b", "g(c)"]}; "f" -> {f, []}.
// Returns false on malformed input.
bool parse_term(const std::string &text, Term &out);

// Splits "a, b, g(c, d)" at top-level commas, trimming whitespace.
std::vector<std::string> split_top_level(const std::string &text);

std::string trim(const std::string &text);

}

#endif
