#pragma once

// The 2048-modulus "rund" generator and its reversal, written operation for
// operation after the original Fortran listing (default 32-bit INTEGER).
// Every intermediate stays below 2^31, so int32 arithmetic is exact.

#include <cstdint>
#include <utility>

#include "revlcg/congruence.hpp"
#include "revlcg/coupled_lcg.hpp"

namespace revlcg::rund {

using Int = std::int32_t;

inline constexpr Int kA = 1029;
inline constexpr Int kB = 1731;
inline constexpr Int kM = 2048;
inline constexpr Int kSlope = 1536;
inline constexpr Int kC = 205;
inline constexpr Int kD = 1497;
inline constexpr Int kImax = kM * kM;  // 4194304

// The listing spells the slope as 1029*y + 507*x on top of i = 1029*x + b.
inline constexpr Int kListingXTerm = 507;
static_assert(kA + kListingXTerm == kSlope);
static_assert(kImax == 4194304);

/// Forward parameters as library types.
LcgParams params();
CouplingSpec coupling();
InverseParams inverse();

struct IntPair {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const IntPair&, const IntPair&) = default;
};

/// One iteration of the listing's forward loop.
IntPair forward_step(IntPair state);

/// One iteration of the listing's backward loop.
IntPair backward_step(IntPair state);

/// Backward loop body with the reversal constants as parameters, for
/// negative-control runs. backward_step(s) == backward_step_with(s, kC, kD).
IntPair backward_step_with(IntPair state, Int c, Int d);

/// Remainder of (a x_prev + b - x) mod m inside the backward step; zero
/// whenever x is the forward image of x_prev.
Int backward_carry_remainder(IntPair state);

/// Multiplier of the equivalent single-word LCG on z = x + m y modulo m^2:
/// a + slope * m. Derived here from the constants rather than hardcoded.
constexpr std::uint64_t packed_multiplier() {
  return static_cast<std::uint64_t>(kA) +
         static_cast<std::uint64_t>(kSlope) * static_cast<std::uint64_t>(kM);
}
static_assert(packed_multiplier() == 3146757);

/// z' = (packed_multiplier() z + b) mod m^2 for z in [0, m^2).
std::uint64_t packed_oracle_step(std::uint64_t z);

inline std::uint64_t pack(IntPair s) {
  return static_cast<std::uint64_t>(s.x) + static_cast<std::uint64_t>(kM) * static_cast<std::uint64_t>(s.y);
}
inline IntPair unpack(std::uint64_t z) {
  return {static_cast<Int>(z % kM), static_cast<Int>(z / kM)};
}

inline CoupledState to_state(IntPair s) {
  return {static_cast<Word>(s.x), static_cast<Word>(s.y)};
}
inline IntPair from_state(const CoupledState& s) {
  return {static_cast<Int>(s.x), static_cast<Int>(s.y)};
}

}  // namespace revlcg::rund
