#pragma once

// Exact rational scalars. All arithmetic in this library is exact; no
// floating point appears anywhere in the computational path.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace thetaconn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown on malformed or out-of-contract user input.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an internal mathematical invariant fails. Reaching this is a
/// library bug, never a data verdict.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// Rejection sampling ran out of budget; the predicate may be unsatisfiable
/// on the given grading. Distinct from InternalError by contract.
struct SamplingError : std::runtime_error {
  explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Parses "p" or "p/q" with optional sign. Used by the CLI and config files.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("cannot parse rational: '" + s + "'");
  }
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long rat_to_long(const Rat& r) {
  if (!is_integer(r)) throw InternalError("expected integer, got " + rat_to_string(r));
  return static_cast<long>(numerator(r));
}

}  // namespace thetaconn
