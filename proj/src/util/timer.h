#ifndef UTIL_TIMER_H
#define UTIL_TIMER_H

#include <chrono>

namespace util {

class Timer {
    std::chrono::steady_clock::time_point start;

public:
    Timer() : start(std::chrono::steady_clock::now()) {}

    double elapsed_seconds() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start).count();
    }
};

// Counts down from a wall-clock bound; a bound <= 0 means "no limit".
class CountdownTimer {
    Timer timer;
    double bound;

public:
    explicit CountdownTimer(double bound_seconds) : bound(bound_seconds) {}

    bool expired() const {
        return bound > 0 && timer.elapsed_seconds() >= bound;
    }
    double elapsed_seconds() const {return timer.elapsed_seconds();}
};

}

#endif
