#ifndef FFCN_RATIONAL_HPP
#define FFCN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ffcn/errors.hpp"

namespace ffcn {

// All arithmetic in this library is exact.  Int is an arbitrary-precision
// integer and Rat an arbitrary-precision rational kept in lowest terms with
// positive denominator; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Exact conversion of an integral rational; throws if a denominator
// survived (which for the closed-form class-number arithmetic would
// indicate a genuine bug, never a rounding issue).
inline Int to_integer(const Rat& r, const char* what) {
  if (!is_integer(r)) {
    throw domain_error(std::string(what) + ": expected an integer, got " +
                       rat_num(r).str() + "/" + rat_den(r).str());
  }
  return rat_num(r);
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int acc = 1;
  Int b = base;
  while (e != 0) {
    if (e & 1UL) acc *= b;
    b *= b;
    e >>= 1UL;
  }
  return acc;
}

inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace ffcn

#endif  // FFCN_RATIONAL_HPP
