#include "revlcg/coupled_lcg.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace revlcg {

void validate_coupling(const LcgParams& params, const CouplingSpec& coupling) {
  if (coupling.slope >= params.m()) {
    throw std::invalid_argument("coupling slope " + std::to_string(coupling.slope) +
                                " must be smaller than the modulus " + std::to_string(params.m()));
  }
}

void validate_state(const LcgParams& params, const CoupledState& state) {
  if (state.x >= params.m() || state.y >= params.m()) {
    throw std::out_of_range("state (" + std::to_string(state.x) + ", " + std::to_string(state.y) +
                            ") outside [0, " + std::to_string(params.m()) + ")");
  }
}

Word carry_coupling(Word x, const LcgParams& params, const CouplingSpec& coupling) {
  Word f = coupling.slope * x;
  if (coupling.carry) {
    f += (params.a() * x + params.b()) / params.m();
  }
  return f;
}

CoupledState forward_step(const CoupledState& state, const LcgParams& params,
                          const CouplingSpec& coupling) {
  const Word m = params.m();
  // f is evaluated at the pre-step x.
  const Word f = carry_coupling(state.x, params, coupling);
  return {(params.a() * state.x + params.b()) % m, (params.a() * state.y + f) % m};
}

CoupledState backward_step(const CoupledState& state, const LcgParams& params,
                           const InverseParams& inverse, const CouplingSpec& coupling) {
  const Word m = params.m();
  // x must be recovered before f can be evaluated at it.
  const Word x_prev = (inverse.c * state.x + inverse.d) % m;
  const Word f = carry_coupling(x_prev, params, coupling);
  // f < m^2, so the bracket is non-negative; c * bracket < m^3.
  const Word bracket = state.y + m * m - f;
  return {x_prev, (inverse.c * bracket) % m};
}

double UnitFraction::to_double() const {
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string UnitFraction::to_decimal() const {
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), to_double(), std::chars_format::general, 17);
  if (ec != std::errc{}) {
    throw std::runtime_error("UnitFraction::to_decimal: formatting failed");
  }
  return std::string(buf.data(), end);
}

std::string UnitFraction::to_fraction() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

UnitFraction output_real(const CoupledState& state, Word m) {
  return {pack(state, m), m * m};
}

std::vector<CoupledState> generate_sequence(const CoupledState& seed, std::size_t n,
                                            const LcgParams& params, const CouplingSpec& coupling) {
  std::vector<CoupledState> out;
  out.reserve(n);
  CoupledState s = seed;
  for (std::size_t i = 0; i < n; ++i) {
    s = forward_step(s, params, coupling);
    out.push_back(s);
  }
  return out;
}

std::vector<CoupledState> reverse_sequence(const CoupledState& seed, std::size_t n,
                                           const LcgParams& params, const InverseParams& inverse,
                                           const CouplingSpec& coupling) {
  std::vector<CoupledState> out;
  out.reserve(n);
  CoupledState s = seed;
  for (std::size_t i = 0; i < n; ++i) {
    s = backward_step(s, params, inverse, coupling);
    out.push_back(s);
  }
  return out;
}

CoupledGenerator::CoupledGenerator(const LcgParams& params, const CouplingSpec& coupling,
                                   CoupledState seed)
    : params_(params), coupling_(coupling), inverse_(derive_inverse(params)), state_() {
  validate_coupling(params_, coupling_);
  this->seed(seed);
}

void CoupledGenerator::seed(const CoupledState& state) {
  validate_state(params_, state);
  state_ = state;
}

const CoupledState& CoupledGenerator::next() {
  state_ = forward_step(state_, params_, coupling_);
  return state_;
}

const CoupledState& CoupledGenerator::previous() {
  state_ = backward_step(state_, params_, inverse_, coupling_);
  return state_;
}

}  // namespace revlcg
