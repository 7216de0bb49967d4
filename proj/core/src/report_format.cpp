#include "revlcg/report_format.hpp"

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace revlcg {
namespace {

using Field = std::pair<std::string, std::string>;

std::string b(bool v) { return v ? "true" : "false"; }
std::string u(std::uint64_t v) { return std::to_string(v); }
std::string state(const CoupledState& s) { return std::to_string(s.x) + "," + std::to_string(s.y); }

template <typename T, typename F>
std::string opt(const std::optional<T>& v, F render) {
  return v ? render(*v) : std::string("none");
}

std::string join_line(const std::vector<Field>& fields) {
  std::string out;
  for (const auto& [k, v] : fields) {
    if (!out.empty()) {
      out += ' ';
    }
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

std::string join_lines(const std::string& check, bool pass, const std::vector<Field>& fields) {
  std::string out = "check=" + check + "\nstatus=" + (pass ? "pass" : "fail") + "\n";
  for (const auto& [k, v] : fields) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

std::vector<Field> fields(const OrbitReport& r) {
  return {{"period", opt(r.period, u)},
          {"full", b(r.reached_full_period)},
          {"states_visited", u(r.states_visited)},
          {"state_space", u(r.state_space)},
          {"first_repeat", state(r.first_repeat_state)}};
}

std::vector<Field> fields(const EquidistributionReport& r) {
  return {{"equidistributed", b(r.passed)},
          {"state_space", u(r.state_space)},
          {"orbit_length", u(r.orbit_length)},
          {"distinct", u(r.distinct_values)},
          {"gaps", u(r.gaps)},
          {"first_duplicate", opt(r.first_duplicate, u)},
          {"first_gap", opt(r.first_gap, u)}};
}

std::vector<Field> fields(const RoundTripReport& r) {
  return {{"checked", u(r.states_checked)},
          {"mismatches", u(r.mismatches)},
          {"first_mismatch", opt(r.first_mismatch, state)}};
}

std::vector<Field> fields(const HullDobellReport& r) {
  return {{"b_coprime_m", b(r.b_coprime_m)},
          {"a_minus_1_prime_factors", b(r.a_minus_1_divisible_by_prime_factors)},
          {"a_minus_1_mod_4", b(r.a_minus_1_divisible_by_4_when_m_is)},
          {"all_satisfied", b(r.all_satisfied)}};
}

std::vector<Field> fields(const ReproductionReport& r) {
  return {{"comparisons", u(r.comparisons)},
          {"mismatches", u(r.mismatches)},
          {"first_mismatch_n", opt(r.first_mismatch_n, u)}};
}

std::vector<Field> fields(const EquivalenceReport& r) {
  return {{"checked", u(r.states_checked)},
          {"generic_vs_listing", u(r.generic_vs_listing_mismatches)},
          {"oracle_vs_listing", u(r.oracle_vs_listing_mismatches)},
          {"backward", u(r.backward_mismatches)},
          {"inexact_carry", u(r.inexact_carry_divisions)}};
}

}  // namespace

std::string to_text(const OrbitReport& r) { return join_line(fields(r)); }
std::string to_text(const EquidistributionReport& r) { return join_line(fields(r)); }
std::string to_text(const RoundTripReport& r) { return join_line(fields(r)); }
std::string to_text(const HullDobellReport& r) { return join_line(fields(r)); }
std::string to_text(const ReproductionReport& r) { return join_line(fields(r)); }
std::string to_text(const EquivalenceReport& r) { return join_line(fields(r)); }

std::string to_key_values(const OrbitReport& r) {
  return join_lines("period", r.reached_full_period, fields(r));
}
std::string to_key_values(const EquidistributionReport& r) {
  return join_lines("equidist", r.passed, fields(r));
}
std::string to_key_values(const RoundTripReport& r) {
  return join_lines("roundtrip", r.passed(), fields(r));
}
std::string to_key_values(const HullDobellReport& r) {
  return join_lines("hulldobell", r.all_satisfied, fields(r));
}
std::string to_key_values(const ReproductionReport& r) {
  return join_lines("paper", r.passed, fields(r));
}
std::string to_key_values(const EquivalenceReport& r) {
  return join_lines("oracle", r.passed(), fields(r));
}

}  // namespace revlcg
