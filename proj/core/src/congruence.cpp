#include "revlcg/congruence.hpp"

#include <string>

namespace revlcg {

NotInvertibleError::NotInvertibleError(std::int64_t value, std::int64_t modulus,
                                       std::int64_t gcd)
    : std::domain_error("not invertible: gcd(a,m)=" + std::to_string(gcd)),
      value_(value),
      modulus_(modulus),
      gcd_(gcd) {}

LcgParams::LcgParams(Word a, Word b, Word m) : a_(0), b_(0), m_(m) {
  if (m < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
  }
  if (m > kMaxModulus) {
    throw std::invalid_argument("modulus " + std::to_string(m) + " exceeds the exact-arithmetic bound " +
                                std::to_string(kMaxModulus));
  }
  a_ = a % m;
  b_ = b % m;
}

ExtGcdResult ext_gcd(std::int64_t u, std::int64_t v) {
  if (u < 0 || v < 0) {
    throw std::invalid_argument("ext_gcd: inputs must be non-negative");
  }
  if (u == 0 && v == 0) {
    throw std::invalid_argument("ext_gcd: gcd(0, 0) is undefined");
  }

  // Invariants: old_s*u + old_t*v = old_r and s*u + t*v = r.
  std::int64_t old_r = u, r = v;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

std::int64_t mod_nonneg(std::int64_t v, std::int64_t m) {
  if (m < 1) {
    throw std::invalid_argument("mod_nonneg: modulus must be positive");
  }
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) {
    throw std::invalid_argument("mod_inverse: modulus must be at least 2");
  }
  const std::int64_t reduced = mod_nonneg(a, m);
  if (reduced == 0) {
    throw NotInvertibleError(a, m, m);
  }
  const ExtGcdResult r = ext_gcd(reduced, m);
  if (r.g != 1) {
    throw NotInvertibleError(a, m, r.g);
  }
  return mod_nonneg(r.s, m);
}

bool satisfies_inverse_congruences(const LcgParams& params, const InverseParams& inverse) {
  const Word a = params.a(), b = params.b(), m = params.m();
  const Word c = inverse.c, d = inverse.d;
  if (c >= m || d >= m) {
    return false;
  }
  return (a * c) % m == 1 % m && (c * b + d) % m == 0 && (a * d + b) % m == 0;
}

InverseParams derive_inverse(const LcgParams& params) {
  const auto m = static_cast<std::int64_t>(params.m());
  const std::int64_t c = mod_inverse(static_cast<std::int64_t>(params.a()), m);
  const std::int64_t d = mod_nonneg(-c * static_cast<std::int64_t>(params.b()), m);

  const InverseParams inverse{static_cast<Word>(c), static_cast<Word>(d)};
  // The third congruence follows from the first two; check it anyway.
  if (!satisfies_inverse_congruences(params, inverse)) {
    throw std::logic_error("derive_inverse: derived (c, d) violates the inverse congruences");
  }
  return inverse;
}

}  // namespace revlcg
