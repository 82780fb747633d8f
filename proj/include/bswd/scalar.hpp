#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bswd {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator as long as every construction path canonicalizes,
// which parse_scalar and all arithmetic operators do.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when algebra parameters fail a validity gate.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalization). Throws
/// ParseError on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Scalar& value);

/// value^exponent; negative exponents require a nonzero value.
Scalar power(const Scalar& value, long exponent);

/// Sum of the bit lengths of numerator and denominator, used to rank
/// pivot candidates during elimination.
std::size_t size_in_bits(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace bswd
