#ifndef TESTS_HELPERS_H
#define TESTS_HELPERS_H

#include "bench/fixtures.h"
#include "grounding/ground_task.h"
#include "pddl/parser.h"

#include <memory>
#include <random>
#include <string>

namespace helpers {

struct Task {
    pddl::DomainModel domain;
    pddl::ProblemModel problem;
    grounding::GroundTask task;
};

inline Task make_task(const std::string &domain_text,
                      const std::string &problem_text) {
    Task t;
    t.domain = pddl::parse_domain(domain_text);
    t.problem = pddl::parse_problem(problem_text, t.domain);
    t.task = grounding::ground_task(t.domain, t.problem);
    return t;
}

inline Task blocksworld_task(int blocks, unsigned int seed) {
    std::mt19937 rng(seed);
    return make_task(bench::blocksworld_domain(),
                     bench::generate_blocksworld_problem("p", blocks, rng));
}

inline Task satellite_task(const bench::SatelliteShape &shape,
                           unsigned int seed) {
    std::mt19937 rng(seed);
    return make_task(bench::satellite_domain(),
                     bench::generate_satellite_problem("p", shape, rng));
}

// Random state reached by a random walk of up to `steps` actions.
inline grounding::State random_walk(const grounding::GroundTask &task,
                                    int steps, std::mt19937 &rng) {
    grounding::State state = task.init;
    for (int i = 0; i < steps; ++i) {
        std::vector<int> applicable =
            grounding::applicable_actions(task, state);
        if (applicable.empty())
            break;
        int pick = std::uniform_int_distribution<int>(
            0, static_cast<int>(applicable.size()) - 1)(rng);
        state = grounding::apply_action(state, task.actions[applicable[pick]]);
    }
    return state;
}

}

#endif
