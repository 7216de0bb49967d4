// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. All checks are exact; the wall-clock bounds are the only
// tolerances.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "revlcg/congruence.hpp"
#include "revlcg/coupled_lcg.hpp"
#include "revlcg/rund.hpp"
#include "revlcg/verification.hpp"

namespace {

using namespace revlcg;

constexpr double kTimeLimitSeconds = 10.0;
constexpr std::uint64_t kStateSpace = 4194304;  // 2048^2

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  bool timed;
  std::function<Outcome()> run;
};

Outcome inverse_parameters() {
  const InverseParams inv = derive_inverse(LcgParams(1029, 1731, 2048));
  return {inv.c == 205 && inv.d == 1497,
          "c=" + std::to_string(inv.c) + " d=" + std::to_string(inv.d) + " (expected c=205 d=1497)"};
}

Outcome maximum_period() {
  const OrbitReport r = orbit_period({0, 0}, rund::params(), rund::coupling());
  const std::uint64_t period = r.period.value_or(0);
  return {r.period.has_value() && period == kStateSpace,
          "period=" + (r.period ? std::to_string(period) : std::string("none")) + " expected=4194304"};
}

Outcome paper_experiment() {
  const ReproductionReport r = paper_reproduction();
  return {r.passed && r.mismatches == 0 && r.comparisons == kStateSpace - 1,
          "comparisons=" + std::to_string(r.comparisons) + " mismatches=" + std::to_string(r.mismatches)};
}

Outcome exhaustive_roundtrip() {
  const RoundTripReport r = roundtrip_sweep(rund::params(), rund::coupling());
  return {r.states_checked == kStateSpace && r.mismatches == 0,
          "checked=" + std::to_string(r.states_checked) + " mismatches=" + std::to_string(r.mismatches)};
}

Outcome oracle_equivalence() {
  // First validate the packed form against the recursion written out by
  // hand on 10^4 random states.
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<std::uint64_t> z_dist(0, kStateSpace - 1);
  std::uint64_t derivation_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t z = z_dist(rng);
    const std::uint64_t x = z % 2048, y = z / 2048;
    const std::uint64_t ax_b = 1029 * x + 1731;
    const std::uint64_t x_next = ax_b % 2048;
    const std::uint64_t y_next = (1029 * y + 1536 * x + ax_b / 2048) % 2048;
    if (rund::packed_oracle_step(z) != x_next + 2048 * y_next) {
      ++derivation_failures;
    }
  }
  if (derivation_failures != 0) {
    return {false, "oracle derivation failed on " + std::to_string(derivation_failures) + " of 10000 samples"};
  }

  std::uint64_t mismatches = 0;
  for (std::uint64_t z = 0; z < kStateSpace; ++z) {
    if (rund::unpack(rund::packed_oracle_step(z)) != rund::forward_step(rund::unpack(z))) {
      ++mismatches;
    }
  }
  return {mismatches == 0, "derivation samples=10000 ok, exhaustive states=4194304 mismatches=" +
                               std::to_string(mismatches) + " multiplier=" +
                               std::to_string(rund::packed_multiplier())};
}

Outcome equidistribution() {
  const EquidistributionReport r = equidistribution_check(rund::params(), rund::coupling(), {0, 0});
  return {r.passed && r.distinct_values == kStateSpace && r.gaps == 0 && !r.first_duplicate,
          "distinct=" + std::to_string(r.distinct_values) + " gaps=" + std::to_string(r.gaps)};
}

Outcome toy_grid_properties() {
  std::uint64_t instances = 0, failures = 0;
  std::string first_failure;
  std::mt19937_64 rng(20130505);
  for (const Word m : {Word{4}, Word{8}, Word{16}, Word{64}}) {
    std::uniform_int_distribution<Word> word(0, m - 1);
    for (Word a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      for (int trial = 0; trial < 8; ++trial) {
        const LcgParams p(a, word(rng), m);
        const CouplingSpec cpl{word(rng), trial % 2 == 0};
        ++instances;

        const bool roundtrip_ok = roundtrip_sweep(p, cpl, 1).mismatches == 0;
        const OrbitReport orbit = orbit_period({0, 0}, p, cpl);
        const bool divides = orbit.period && (m * m) % *orbit.period == 0;

        // Brute-force x-channel period from x = 0.
        std::uint64_t x_period = 0;
        Word x = 0;
        do {
          x = (p.a() * x + p.b()) % m;
          ++x_period;
        } while (x != 0);
        const bool hd_ok = hull_dobell_check(p).all_satisfied == (x_period == m);

        if (!(roundtrip_ok && divides && hd_ok)) {
          if (failures++ == 0) {
            first_failure = " first_failure=(a=" + std::to_string(p.a()) + ",b=" + std::to_string(p.b()) +
                            ",m=" + std::to_string(m) + ",s=" + std::to_string(cpl.slope) + ")";
          }
        }
      }
    }
  }
  return {failures == 0, "instances=" + std::to_string(instances) + " failures=" + std::to_string(failures) +
                             first_failure};
}

Outcome negative_controls() {
  const RoundTripReport bad_d =
      roundtrip_sweep(rund::params(), InverseParams{rund::kC, rund::kD + 1}, rund::coupling());
  ReproductionConfig bad_c;
  bad_c.c = 204;
  const ReproductionReport paper = paper_reproduction(bad_c);
  const bool d_detected = bad_d.mismatches == bad_d.states_checked && bad_d.states_checked == kStateSpace;
  const bool c_detected = !paper.passed;
  return {d_detected && c_detected,
          "d+1 mismatches=" + std::to_string(bad_d.mismatches) + "/" + std::to_string(bad_d.states_checked) +
              " c=204 first_mismatch_n=" +
              (paper.first_mismatch_n ? std::to_string(*paper.first_mismatch_n) : std::string("none"))};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "inverse parameters (c, d) = (205, 1497)", false, inverse_parameters},
      {2, "maximum period of the (0,0) orbit = m^2", true, maximum_period},
      {3, "listing forward/backward comparison", true, paper_experiment},
      {4, "exhaustive round trip on 2^22 states", true, exhaustive_roundtrip},
      {5, "packed 22-bit oracle equivalence", false, oracle_equivalence},
      {6, "equidistribution over one period", false, equidistribution},
      {7, "toy-grid property suite", false, toy_grid_properties},
      {8, "negative controls detected", false, negative_controls},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.timed && seconds >= kTimeLimitSeconds) {
      outcome.pass = false;
      outcome.detail += " (exceeded time limit)";
    }
    std::printf("[%s] AC%d %s: %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                outcome.detail.c_str(), seconds);
    if (!outcome.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
