#pragma once

// Shared exact-arithmetic primitives: arbitrary-precision integers and
// rationals, p/q string I/O, and a small dense linear solver over Q.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Violation of a documented precondition or domain rule. The CLI maps these
// to exit code 1; anything else escaping is a bug.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated power-series computation that cannot be decided at the current
// degree cap. Reported, never guessed.
class cap_exhausted : public domain_error {
 public:
  using domain_error::domain_error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// "p/q" for proper fractions, bare "p" for integers (matches the wire format
// used throughout the JSON schemas).
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

std::string int_to_string(const Int& n);

using QVec = std::vector<Rat>;
using QMatrix = std::vector<std::vector<Rat>>;

// Solves a*x = b for square a by fraction-free-ish Gaussian elimination.
// Returns nullopt when a is singular.
std::optional<QVec> solve_linear(QMatrix a, QVec b);

// Rank of a rational matrix (used by the quotient-ring intersection oracle).
int rank_of(QMatrix a);

}  // namespace qsurf
