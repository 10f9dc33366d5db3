#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "arakelov/errors.hpp"

namespace arakelov {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

// Exact conversion: every finite double is a dyadic rational.
Rat rat_from_double(double x);

// Accepts "p/q", integer, or decimal strings ("-3/4", "2", "0.125").
// Decimal strings convert exactly (base-10 expansion).
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& q);

// log of a positive rational, via mantissa/exponent split so huge values stay accurate.
double log_rat(const Rat& q);

inline double log_int(const Int& n) { return log_rat(Rat(n)); }

// log(n!) summed in double; n is small (module ranks).
double log_factorial(int n);

// Volume of the unit euclidean ball in R^n.
double unit_ball_volume(int n);

std::uint64_t fnv1a64(const void* data, std::size_t len);
inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(std::uint64_t v);

}  // namespace arakelov
