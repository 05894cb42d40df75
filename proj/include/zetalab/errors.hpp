#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadGrowthBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergentTail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WrongWeightPower : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Underdetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CacheCorrupt : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zetalab
