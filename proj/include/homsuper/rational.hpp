#ifndef HOMSUPER_RATIONAL_HPP
#define HOMSUPER_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace homsuper {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; equality is exact.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Formats a scalar canonically: "p/q", or just "p" when q = 1.
inline std::string format_scalar(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q". The result is reduced to lowest terms; a '-' is
/// accepted only on the numerator.
inline Rat parse_scalar(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (p.empty() || q.empty() || q[0] == '-' || q[0] == '+') bad();
    Int den(q);
    if (den == 0) bad();
    return Rat(Int(p), den);  // mpq ctor canonicalizes
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

}  // namespace homsuper

#endif
