#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace okcaps {

/* All scalars in core computations are exact rationals. cpp_rational keeps
 * lowest terms with positive denominator, which is exactly the invariant the
 * serialization below relies on. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
bool is_integer(const Rat& q);

/* Canonical form "p/q", or "p" when q == 1. */
std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

double to_double(const Rat& q);

/* Closed interval with rational endpoints; used wherever a value is only
 * known up to refinement (square roots, irrational chamber endpoints). */
struct RatInterval {
    Rat lo, hi;

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    double approx() const { return to_double(mid()); }
};

/* sqrt(x) for x >= 0 as an isolating interval of width <= eps. */
RatInterval sqrt_interval(const Rat& x, const Rat& eps);

/* Exact square root when x is a perfect square of a rational. */
std::optional<Rat> exact_sqrt(const Rat& x);

} // namespace okcaps
