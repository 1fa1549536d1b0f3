#pragma once

#include <stdexcept>
#include <string>

namespace mwx {

/// Invalid physical input: non-positive mass or frequency, zero charge, etc.
class physics_error : public std::domain_error {
public:
    explicit physics_error(const std::string& what) : std::domain_error(what) {}
};

/// The n -> 1 pole, where plane-wave field amplitudes diverge.
class singularity_error : public physics_error {
public:
    explicit singularity_error(const std::string& what) : physics_error(what) {}
};

/// Non-finite field values detected during time stepping.
class blowup_error : public std::runtime_error {
public:
    blowup_error(const std::string& what, long step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

    long step() const { return step_; }

private:
    long step_;
};

}  // namespace mwx
