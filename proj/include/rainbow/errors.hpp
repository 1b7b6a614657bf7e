#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// graph construction / validation
struct InvalidEdge : Error {
    using Error::Error;
};
struct DisconnectedGraph : Error {
    using Error::Error;
};
struct EmptyOrFullSet : Error {
    using Error::Error;
};

// generators
struct InvalidSpec : Error {
    using Error::Error;
};

// spectral
struct ConvergenceFailure : Error {
    using Error::Error;
};

// enumeration
struct TooLarge : Error {
    using Error::Error;
};

// capacity
struct InvalidBipartition : Error {
    using Error::Error;
};

// flow network construction
struct NonIntegerWeights : Error {
    using Error::Error;
};
struct BadPartition : Error {
    using Error::Error;
};

// trace replay
struct CapacityViolation : Error {
    using Error::Error;
};
struct SwapError : Error {
    using Error::Error;
};

// hierarchy closed forms
struct OddBaseUnsupported : Error {
    using Error::Error;
};

// serialization
struct ParseError : Error {
    using Error::Error;
};

}  // namespace rainbow
