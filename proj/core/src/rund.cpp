#include "revlcg/rund.hpp"

namespace revlcg::rund {

LcgParams params() { return {kA, kB, kM}; }

CouplingSpec coupling() { return {kSlope, true}; }

InverseParams inverse() { return {kC, kD}; }

IntPair forward_step(IntPair state) {
  Int intx = state.x;
  const Int inty = state.y;

  const Int i = kA * intx + kB;
  Int j = i + kA * inty + kListingXTerm * intx - kB;
  intx = i % kM;
  j = j + (i - intx) / kM;
  return {intx, j % kM};
}

IntPair backward_step_with(IntPair state, Int c, Int d) {
  const Int intx = state.x;
  Int inty = state.y;

  const Int oldx = (c * intx + d) % kM;
  inty = inty + kImax - kSlope * oldx - (kA * oldx + kB - intx) / kM;
  inty = (c * inty) % kM;
  return {oldx, inty};
}

IntPair backward_step(IntPair state) { return backward_step_with(state, kC, kD); }

Int backward_carry_remainder(IntPair state) {
  const Int oldx = (kC * state.x + kD) % kM;
  return (kA * oldx + kB - state.x) % kM;
}

std::uint64_t packed_oracle_step(std::uint64_t z) {
  constexpr std::uint64_t modulus = static_cast<std::uint64_t>(kImax);
  return (packed_multiplier() * z + static_cast<std::uint64_t>(kB)) % modulus;
}

}  // namespace revlcg::rund
