#pragma once

#include <stdexcept>
#include <string>

namespace bott {

struct BottError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A virtual representation was asked to behave like an honest one.
struct NegativeMultiplicity : BottError {
    using BottError::BottError;
};

// Chosen one-parameter subgroup is not generic enough: some tangent
// character at the named fixpoint specializes to weight zero.
struct ZeroTangentWeight : BottError {
    std::string label;
    explicit ZeroTangentWeight(std::string fixpoint)
        : BottError("zero tangent weight at fixpoint " + fixpoint), label(std::move(fixpoint)) {}
};

// A rep came out with the wrong dimension; indicates corrupted input data.
struct RankMismatch : BottError {
    using BottError::BottError;
};

// A tangent rep kept a trivial character after simplification.
struct TrivialCharacterPresent : BottError {
    using BottError::BottError;
};

// The equivariant sum did not collapse to an integer.
struct NonIntegralResult : BottError {
    std::string value;
    explicit NonIntegralResult(std::string v)
        : BottError("localization sum is not an integer: " + v), value(std::move(v)) {}
};

struct UnsupportedGammaDegree : BottError {
    using BottError::BottError;
};

// Query parameters outside the range where the closed formula is valid.
struct OutOfValidityRange : BottError {
    using BottError::BottError;
};

struct BadQuery : BottError {
    using BottError::BottError;
};

}  // namespace bott
