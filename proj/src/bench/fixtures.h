#ifndef BENCH_FIXTURES_H
#define BENCH_FIXTURES_H

#include <random>
#include <string>

namespace bench {

// Bundled typed-STRIPS fixture domains.
const std::string &blocksworld_domain();
const std::string &satellite_domain();

// Small named satellite problems used across tests and demos: tr01 (one
// instrument, three image goals), fig8 (calibrated instrument, three
// directions to photograph), fig9 (one image goal requiring a
// calibration detour).
const std::string &satellite_tr01_problem();
const std::string &satellite_fig8_problem();
const std::string &satellite_fig9_problem();

// Random blocksworld problem: random initial and goal tower
// configurations over `blocks` blocks; the goal lists the on-pairs of
// the goal towers.
std::string generate_blocksworld_problem(const std::string &name, int blocks,
                                         std::mt19937 &rng);

struct SatelliteShape {
    int instruments = 1;
    int modes = 2;
    int directions = 4;
    int goals = 2;
};

// Random single-satellite problem, solvable by construction (every goal
// mode is supported by some instrument and every instrument has a
// calibration target).
std::string generate_satellite_problem(const std::string &name,
                                       const SatelliteShape &shape,
                                       std::mt19937 &rng);

}

#endif
