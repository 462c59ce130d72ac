#pragma once

#include <chrono>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

// Wall-clock budget for the exponential searches. Default-constructed it
// never expires. Cheap to copy, so it is passed by value down recursions.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline never() { return Deadline{}; }

    static Deadline after(std::chrono::duration<double> d) {
        Deadline dl;
        dl.at_ = clock::now() + std::chrono::duration_cast<clock::duration>(d);
        dl.armed_ = true;
        return dl;
    }

    bool armed() const { return armed_; }

    bool expired() const { return armed_ && clock::now() >= at_; }

    void check(const char* what) const {
        if (expired()) throw deadline_exceeded(std::string(what) + ": deadline exceeded");
    }

private:
    clock::time_point at_{};
    bool armed_ = false;
};

}  // namespace kempe
