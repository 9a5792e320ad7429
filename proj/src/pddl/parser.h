#ifndef PDDL_PARSER_H
#define PDDL_PARSER_H

#include "model.h"

#include <stdexcept>
#include <string>

namespace pddl {

struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(int line, int column, const std::string &message)
        : std::runtime_error(message), line(line), column(column) {}

    // "file:line:col: message", the shape diagnostics take on stderr.
    std::string format(const std::string &filename) const {
        return filename + ":" + std::to_string(line) + ":" +
               std::to_string(column) + ": " + std::string(what());
    }
};

// Both parsers accept the :strips + :typing subset only. Unsupported
// constructs (negative preconditions, conditional effects, quantifiers,
// numeric fluents, either-types) are rejected with a diagnostic naming
// the construct.
DomainModel parse_domain(const std::string &text);
ProblemModel parse_problem(const std::string &text, const DomainModel &domain);

DomainModel parse_domain_file(const std::string &path);
ProblemModel parse_problem_file(const std::string &path,
                                const DomainModel &domain);

}

#endif
