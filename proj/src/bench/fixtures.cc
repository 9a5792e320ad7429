#include "fixtures.h"

#include <algorithm>
#include <sstream>
#include <vector>

using namespace std;

namespace bench {

const string &blocksworld_domain() {
    static const string text = R"((define (domain blocksworld)
  (:requirements :strips :typing)
  (:types block)
  (:predicates (on ?x - block ?y - block)
               (ontable ?x - block)
               (clear ?x - block)
               (handempty)
               (holding ?x - block))
  (:action pick-up
    :parameters (?x - block)
    :precondition (and (clear ?x) (ontable ?x) (handempty))
    :effect (and (not (ontable ?x)) (not (clear ?x)) (not (handempty))
                 (holding ?x)))
  (:action put-down
    :parameters (?x - block)
    :precondition (holding ?x)
    :effect (and (not (holding ?x)) (clear ?x) (handempty) (ontable ?x)))
  (:action stack
    :parameters (?x - block ?y - block)
    :precondition (and (holding ?x) (clear ?y))
    :effect (and (not (holding ?x)) (not (clear ?y)) (clear ?x) (handempty)
                 (on ?x ?y)))
  (:action unstack
    :parameters (?x - block ?y - block)
    :precondition (and (on ?x ?y) (clear ?x) (handempty))
    :effect (and (holding ?x) (clear ?y) (not (clear ?x)) (not (handempty))
                 (not (on ?x ?y)))))
)";
    return text;
}

const string &satellite_domain() {
    static const string text = R"((define (domain satellite)
  (:requirements :strips :typing)
  (:types satellite direction instrument mode)
  (:predicates (on_board ?i - instrument ?s - satellite)
               (supports ?i - instrument ?m - mode)
               (pointing ?s - satellite ?d - direction)
               (power_avail ?s - satellite)
               (power_on ?i - instrument)
               (calibrated ?i - instrument)
               (have_image ?d - direction ?m - mode)
               (calibration_target ?i - instrument ?d - direction))
  (:action turn_to
    :parameters (?s - satellite ?d_new - direction ?d_prev - direction)
    :precondition (pointing ?s ?d_prev)
    :effect (and (pointing ?s ?d_new) (not (pointing ?s ?d_prev))))
  (:action switch_on
    :parameters (?i - instrument ?s - satellite)
    :precondition (and (on_board ?i ?s) (power_avail ?s))
    :effect (and (power_on ?i) (not (calibrated ?i)) (not (power_avail ?s))))
  (:action switch_off
    :parameters (?i - instrument ?s - satellite)
    :precondition (and (on_board ?i ?s) (power_on ?i))
    :effect (and (power_avail ?s) (not (power_on ?i))))
  (:action calibrate
    :parameters (?s - satellite ?i - instrument ?d - direction)
    :precondition (and (on_board ?i ?s) (calibration_target ?i ?d)
                       (pointing ?s ?d) (power_on ?i))
    :effect (calibrated ?i))
  (:action take_image
    :parameters (?s - satellite ?d - direction ?i - instrument ?m - mode)
    :precondition (and (calibrated ?i) (on_board ?i ?s) (supports ?i ?m)
                       (power_on ?i) (pointing ?s ?d))
    :effect (have_image ?d ?m)))
)";
    return text;
}

const string &satellite_tr01_problem() {
    static const string text = R"((define (problem tr01)
  (:domain satellite)
  (:objects satellite0 - satellite
            instrument0 - instrument
            infrared2 spectrograph1 - mode
            groundstation1 star0 phenomenon2 phenomenon3 phenomenon4 - direction)
  (:init (pointing satellite0 star0)
         (power_avail satellite0)
         (calibration_target instrument0 groundstation1)
         (supports instrument0 spectrograph1)
         (supports instrument0 infrared2)
         (on_board instrument0 satellite0))
  (:goal (and (have_image phenomenon3 infrared2)
              (have_image phenomenon4 infrared2)
              (have_image phenomenon2 spectrograph1))))
)";
    return text;
}

const string &satellite_fig8_problem() {
    static const string text = R"((define (problem fig8)
  (:domain satellite)
  (:objects sat - satellite
            cam - instrument
            thermo - mode
            d0 d1 d2 d3 - direction)
  (:init (pointing sat d0)
         (power_on cam)
         (calibrated cam)
         (calibration_target cam d0)
         (supports cam thermo)
         (on_board cam sat))
  (:goal (and (have_image d1 thermo)
              (have_image d2 thermo)
              (have_image d3 thermo))))
)";
    return text;
}

const string &satellite_fig9_problem() {
    static const string text = R"((define (problem fig9)
  (:domain satellite)
  (:objects sat - satellite
            cam - instrument
            thermo - mode
            d1 d2 d3 - direction)
  (:init (pointing sat d2)
         (power_avail sat)
         (calibration_target cam d1)
         (supports cam thermo)
         (on_board cam sat))
  (:goal (have_image d2 thermo)))
)";
    return text;
}

namespace {

// Random tower configuration: a permutation split into towers.
vector<vector<int>> random_towers(int blocks, mt19937 &rng) {
    vector<int> order(blocks);
    for (int i = 0; i < blocks; ++i)
        order[i] = i;
    shuffle(order.begin(), order.end(), rng);
    vector<vector<int>> towers;
    uniform_real_distribution<double> coin(0.0, 1.0);
    for (int block : order) {
        if (towers.empty() || coin(rng) < 0.4)
            towers.push_back({block});
        else
            towers.back().push_back(block);
    }
    return towers;
}

bool has_stacked_pair(const vector<vector<int>> &towers) {
    for (const auto &tower : towers)
        if (tower.size() > 1)
            return true;
    return false;
}

}

string generate_blocksworld_problem(const string &name, int blocks,
                                    mt19937 &rng) {
    vector<vector<int>> init = random_towers(blocks, rng);
    vector<vector<int>> goal = random_towers(blocks, rng);
    while (blocks >= 2 && !has_stacked_pair(goal))
        goal = random_towers(blocks, rng);

    auto block_name = [](int i) {return "b" + to_string(i + 1);};
    ostringstream os;
    os << "(define (problem " << name << ")\n";
    os << "  (:domain blocksworld)\n";
    os << "  (:objects";
    for (int i = 0; i < blocks; ++i)
        os << " " << block_name(i);
    os << " - block)\n";
    os << "  (:init (handempty)\n";
    for (const auto &tower : init) {
        os << "         (ontable " << block_name(tower[0]) << ")";
        for (size_t i = 1; i < tower.size(); ++i)
            os << " (on " << block_name(tower[i]) << " "
               << block_name(tower[i - 1]) << ")";
        os << " (clear " << block_name(tower.back()) << ")\n";
    }
    os << "  )\n";
    // Goal towers are described completely (base included) so that a
    // misplaced base is visible as a pending goal.
    os << "  (:goal (and\n";
    for (const auto &tower : goal) {
        os << "    (ontable " << block_name(tower[0]) << ")\n";
        for (size_t i = 1; i < tower.size(); ++i)
            os << "    (on " << block_name(tower[i]) << " "
               << block_name(tower[i - 1]) << ")\n";
    }
    os << "  )))\n";
    return os.str();
}

string generate_satellite_problem(const string &name,
                                  const SatelliteShape &shape, mt19937 &rng) {
    auto pick = [&rng](int n) {
        return uniform_int_distribution<int>(0, n - 1)(rng);
    };
    ostringstream os;
    os << "(define (problem " << name << ")\n";
    os << "  (:domain satellite)\n";
    os << "  (:objects sat0 - satellite\n";
    os << "            ";
    for (int i = 0; i < shape.instruments; ++i)
        os << "ins" << i << " ";
    os << "- instrument\n";
    os << "            ";
    for (int m = 0; m < shape.modes; ++m)
        os << "mode" << m << " ";
    os << "- mode\n";
    os << "            ";
    for (int d = 0; d < shape.directions; ++d)
        os << "dir" << d << " ";
    os << "- direction)\n";

    vector<vector<int>> supports(shape.instruments);
    os << "  (:init (power_avail sat0)\n";
    os << "         (pointing sat0 dir" << pick(shape.directions) << ")\n";
    for (int i = 0; i < shape.instruments; ++i) {
        os << "         (on_board ins" << i << " sat0)\n";
        os << "         (calibration_target ins" << i << " dir"
           << pick(shape.directions) << ")\n";
        for (int m = 0; m < shape.modes; ++m)
            if (pick(2) == 0)
                supports[i].push_back(m);
        if (supports[i].empty())
            supports[i].push_back(pick(shape.modes));
        for (int m : supports[i])
            os << "         (supports ins" << i << " mode" << m << ")\n";
    }
    os << "  )\n";

    vector<int> supported_modes;
    for (const auto &modes : supports)
        for (int m : modes)
            supported_modes.push_back(m);
    sort(supported_modes.begin(), supported_modes.end());
    supported_modes.erase(
        unique(supported_modes.begin(), supported_modes.end()),
        supported_modes.end());

    os << "  (:goal (and\n";
    vector<pair<int, int>> chosen;
    int guard = 0;
    while (static_cast<int>(chosen.size()) < shape.goals && guard++ < 1000) {
        pair<int, int> goal = {
            pick(shape.directions),
            supported_modes[pick(static_cast<int>(supported_modes.size()))]};
        if (find(chosen.begin(), chosen.end(), goal) == chosen.end())
            chosen.push_back(goal);
    }
    for (const auto &[d, m] : chosen)
        os << "    (have_image dir" << d << " mode" << m << ")\n";
    os << "  )))\n";
    return os.str();
}

}
