#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace exproj {

// Exact arithmetic backbone.  All bound computations run on these types;
// floating point only enters in the metric/simulation layers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division, q = ⌊a/b⌋ for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline BigInt floor_rat(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rat(const Rational& r) { return -floor_rat(-r); }

// ⌊√x⌋ for x ≥ 0; the result v satisfies v² ≤ x < (v+1)².
inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt: negative input");
  return sqrt(x);
}

inline bool is_perfect_square(const BigInt& x) {
  if (x < 0) return false;
  const BigInt r = sqrt(x);
  return r * r == x;
}

// Exact ⌊(K − √D)/2⌋ in integer arithmetic only.  The isqrt candidate
// ⌊(K − ⌊√D⌋)/2⌋ can overshoot by one; the fixup compares (K − 2v)²
// against D, strictly when √D is irrational so that equality never
// silently passes.
inline BigInt floor_half_diff(const BigInt& K, const BigInt& D) {
  if (D < 0) throw std::domain_error("floor_half_diff: D < 0");
  const BigInt root = isqrt(D);
  const bool square = (root * root == D);
  const auto admissible = [&](const BigInt& v) {
    // 2v ≤ K − √D  ⇔  K − 2v ≥ √D
    const BigInt s = K - 2 * v;
    if (s < 0) return false;
    const BigInt s2 = s * s;
    return square ? s2 >= D : s2 > D;
  };
  BigInt v = floor_div(K - root, 2);
  if (!admissible(v)) --v;
  return v;
}

// Rationals travel as "p/q" (or "p" when q = 1) in files and CSV.
inline std::string format_rational(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& text) {
  const auto bad = [&]() {
    return std::invalid_argument("not a rational: '" + text + "' (expected p or p/q)");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    const BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(BigInt(num), d);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace exproj
