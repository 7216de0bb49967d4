#pragma once

// Integer congruence machinery: extended Euclid, modular inverse and the
// parameters of the time-reversed single-word LCG.
//
// All residues are kept in [0, m). Every product formed anywhere in the
// library is bounded by m^3, so the modulus is capped at kMaxModulus to keep
// all arithmetic exact in 64-bit integers.

#include <cstdint>
#include <stdexcept>

namespace revlcg {

using Word = std::uint64_t;

/// Largest modulus accepted by LcgParams. kMaxModulus^3 = 2^60 fits in int64.
inline constexpr Word kMaxModulus = Word{1} << 20;

/// Thrown when a multiplier has no inverse modulo m.
class NotInvertibleError : public std::domain_error {
 public:
  NotInvertibleError(std::int64_t value, std::int64_t modulus, std::int64_t gcd);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::int64_t gcd() const noexcept { return gcd_; }

 private:
  std::int64_t value_;
  std::int64_t modulus_;
  std::int64_t gcd_;
};

/// Forward parameters of x' = a x + b (mod m). a and b are reduced mod m on
/// construction; m must lie in [2, kMaxModulus].
class LcgParams {
 public:
  LcgParams(Word a, Word b, Word m);

  Word a() const noexcept { return a_; }
  Word b() const noexcept { return b_; }
  Word m() const noexcept { return m_; }

  friend bool operator==(const LcgParams&, const LcgParams&) = default;

 private:
  Word a_;
  Word b_;
  Word m_;
};

/// Parameters of the reversed map x = c x' + d (mod m).
///
/// Plain aggregate: derive_inverse() is the checked way to obtain one. Tests
/// build corrupted instances directly as negative controls.
struct InverseParams {
  Word c = 0;
  Word d = 0;

  friend bool operator==(const InverseParams&, const InverseParams&) = default;
};

struct ExtGcdResult {
  std::int64_t g = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
};

/// Extended Euclid. Returns (g, s, t) with s*u + t*v = g = gcd(u, v).
/// Coefficients may be negative. Throws std::invalid_argument if both inputs
/// are zero or either is negative.
ExtGcdResult ext_gcd(std::int64_t u, std::int64_t v);

/// Unique r in [0, m) with r == v (mod m), for any sign of v.
std::int64_t mod_nonneg(std::int64_t v, std::int64_t m);

/// Unique c in [0, m) with a*c == 1 (mod m). Throws NotInvertibleError when
/// gcd(a, m) != 1 and std::invalid_argument when m < 2.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// True when (c, d) satisfies a c = 1, c b + d = 0 and a d + b = 0 (mod m).
bool satisfies_inverse_congruences(const LcgParams& params, const InverseParams& inverse);

/// Derives c = a^-1 and d = -c b (mod m), then checks all three congruences.
InverseParams derive_inverse(const LcgParams& params);

}  // namespace revlcg
