// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cabletau {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input complex is not a knot complex (vertical homology rank != 1).
struct NotAKnotComplex : Error {
    explicit NotAKnotComplex(const std::string& what) : Error(what) {}
};

// Alternating simplification passes failed to produce a basis that is
// simultaneously vertically and horizontally simplified.
struct NoSimultaneousBasis : Error {
    explicit NoSimultaneousBasis(const std::string& what) : Error(what) {}
};

struct MissingMaslov : Error {
    explicit MissingMaslov(const std::string& what) : Error(what) {}
};

// Box tensor termination guard failed.
struct UnboundedPairing : Error {
    explicit UnboundedPairing(const std::string& what) : Error(what) {}
};

// Relative gradings implied by arrow drops conflict inside a component.
struct InconsistentRelativeGrading : Error {
    explicit InconsistentRelativeGrading(const std::string& what) : Error(what) {}
};

struct NoSymmetricPinning : Error {
    explicit NoSymmetricPinning(const std::string& what) : Error(what) {}
};

// Symmetric pinning left more than one candidate value for tau.
struct AmbiguousPinning : Error {
    AmbiguousPinning(const std::string& what, std::vector<int> cands)
        : Error(what), candidates(std::move(cands)) {}
    std::vector<int> candidates;
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace cabletau
