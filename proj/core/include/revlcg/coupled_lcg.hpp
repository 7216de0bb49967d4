#pragma once

// Two-word coupled LCG and its exact time reversal.
//
//   x' = a x + b          (mod m)
//   y' = a y + f(x)       (mod m)
//   f(x) = s x + [carry] floor((a x + b) / m)
//
// The reverse recovers x first, then y = c (y' + m^2 - f(x)) (mod m).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "revlcg/congruence.hpp"

namespace revlcg {

struct CoupledState {
  Word x = 0;
  Word y = 0;

  friend bool operator==(const CoupledState&, const CoupledState&) = default;
};

/// f(x) = slope * x, plus the high word of a x + b when carry is enabled.
/// slope must be < m so that f(x) < m^2.
struct CouplingSpec {
  Word slope = 0;
  bool carry = false;

  friend bool operator==(const CouplingSpec&, const CouplingSpec&) = default;
};

/// Throws std::invalid_argument unless coupling.slope < params.m().
void validate_coupling(const LcgParams& params, const CouplingSpec& coupling);

/// Throws std::out_of_range unless both words are in [0, m).
void validate_state(const LcgParams& params, const CoupledState& state);

Word carry_coupling(Word x, const LcgParams& params, const CouplingSpec& coupling);

CoupledState forward_step(const CoupledState& state, const LcgParams& params,
                          const CouplingSpec& coupling);

CoupledState backward_step(const CoupledState& state, const LcgParams& params,
                           const InverseParams& inverse, const CouplingSpec& coupling);

/// z = x + m y, a bijection [0, m)^2 -> [0, m^2).
inline Word pack(const CoupledState& state, Word m) { return state.x + m * state.y; }
inline CoupledState unpack(Word z, Word m) { return {z % m, z / m}; }

/// Exact value z / m^2 of a state.
struct UnitFraction {
  Word numerator = 0;
  Word denominator = 1;

  double to_double() const;
  /// Shortest locale-independent rendering with 17 significant digits.
  std::string to_decimal() const;
  /// "numerator/denominator"
  std::string to_fraction() const;

  friend bool operator==(const UnitFraction&, const UnitFraction&) = default;
};

UnitFraction output_real(const CoupledState& state, Word m);

/// States after 1..n forward steps; the seed itself is not included.
std::vector<CoupledState> generate_sequence(const CoupledState& seed, std::size_t n,
                                            const LcgParams& params, const CouplingSpec& coupling);

/// States after 1..n backward steps; the seed itself is not included.
std::vector<CoupledState> reverse_sequence(const CoupledState& seed, std::size_t n,
                                           const LcgParams& params, const InverseParams& inverse,
                                           const CouplingSpec& coupling);

/// Stateful generator. The inverse parameters are derived at construction, so
/// a generator whose multiplier is not invertible cannot be built.
class CoupledGenerator {
 public:
  CoupledGenerator(const LcgParams& params, const CouplingSpec& coupling, CoupledState seed = {});

  const LcgParams& params() const noexcept { return params_; }
  const CouplingSpec& coupling() const noexcept { return coupling_; }
  const InverseParams& inverse() const noexcept { return inverse_; }
  const CoupledState& state() const noexcept { return state_; }

  void seed(const CoupledState& state);

  /// Advances one step and returns the new state.
  const CoupledState& next();
  /// Steps back once and returns the new state.
  const CoupledState& previous();

  UnitFraction real() const { return output_real(state_, params_.m()); }

 private:
  LcgParams params_;
  CouplingSpec coupling_;
  InverseParams inverse_;
  CoupledState state_;
};

}  // namespace revlcg
