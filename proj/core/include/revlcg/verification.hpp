#pragma once

// Exhaustive verification of the coupled generator at desk scale: orbit
// period, equidistribution over one period, forward/backward round trips,
// the Hull-Dobell conditions on the x channel, and the forward/backward
// comparison experiment of the reference listing.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "revlcg/congruence.hpp"
#include "revlcg/coupled_lcg.hpp"
#include "revlcg/rund.hpp"

namespace revlcg {

/// Largest modulus for which the state space (m^2 states) is enumerated.
inline constexpr Word kMaxExhaustiveModulus = Word{1} << 12;

/// Thrown by exhaustive checks when m exceeds kMaxExhaustiveModulus.
class ExhaustiveLimitError : public std::invalid_argument {
 public:
  explicit ExhaustiveLimitError(Word m);
};

struct OrbitReport {
  /// Orbit length; empty when the step limit ran out first.
  std::optional<std::uint64_t> period;
  bool reached_full_period = false;
  std::uint64_t states_visited = 0;
  /// The seed when the orbit closed, otherwise the last state reached.
  CoupledState first_repeat_state;
  /// m^2, for reporting.
  std::uint64_t state_space = 0;
};

struct RoundTripReport {
  std::uint64_t states_checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<CoupledState> first_mismatch;

  bool passed() const noexcept { return mismatches == 0; }
};

struct HullDobellReport {
  bool b_coprime_m = false;
  bool a_minus_1_divisible_by_prime_factors = false;
  bool a_minus_1_divisible_by_4_when_m_is = false;
  bool all_satisfied = false;
};

struct EquidistributionReport {
  bool passed = false;
  std::uint64_t state_space = 0;
  /// Steps until the seed recurred (or the m^2 limit was reached).
  std::uint64_t orbit_length = 0;
  /// Packed values hit at least once.
  std::uint64_t distinct_values = 0;
  /// Packed values never hit.
  std::uint64_t gaps = 0;
  std::optional<std::uint64_t> first_duplicate;
  std::optional<std::uint64_t> first_gap;
};

struct ReproductionConfig {
  enum class BackwardSeed {
    /// Start the backward loop at (0, 0) exactly as the listing does. Only
    /// correct because (0, 0) is where the forward loop ends after m^2 steps.
    kListingZero,
    /// Start the backward loop at the final state of the forward loop.
    kForwardEndpoint,
  };

  std::int64_t imax = rund::kImax;
  rund::Int c = rund::kC;
  rund::Int d = rund::kD;
  BackwardSeed backward_seed = BackwardSeed::kListingZero;
};

struct ReproductionReport {
  bool passed = false;
  std::uint64_t comparisons = 0;
  std::uint64_t mismatches = 0;
  /// Smallest 1-based n with back(n) != forw(imax - n).
  std::optional<std::uint64_t> first_mismatch_n;
};

/// Iterates forward_step from seed until the seed recurs or limit steps have
/// been taken. limit = 0 means m^2 + 1.
OrbitReport orbit_period(const CoupledState& seed, const LcgParams& params,
                         const CouplingSpec& coupling, std::uint64_t limit = 0);

/// Marks every packed value on the seed's orbit in a bitset of m^2 bits and
/// checks that each value in [0, m^2) occurs exactly once per period.
EquidistributionReport equidistribution_check(const LcgParams& params,
                                              const CouplingSpec& coupling,
                                              const CoupledState& seed = {});

/// Checks backward(forward(s)) == s on every state. threads = 0 picks
/// std::thread::hardware_concurrency(). Results do not depend on threads.
RoundTripReport roundtrip_sweep(const LcgParams& params, const CouplingSpec& coupling,
                                unsigned threads = 0);

/// Same, with caller-supplied reversal parameters (negative controls).
RoundTripReport roundtrip_sweep(const LcgParams& params, const InverseParams& inverse,
                                const CouplingSpec& coupling, unsigned threads = 0);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

HullDobellReport hull_dobell_check(const LcgParams& params);

/// Period of the x channel alone, x' = a x + b (mod m), starting at x0.
std::uint64_t single_word_period(const LcgParams& params, Word x0 = 0);

/// Runs the listing's forward loop and backward loop imax times each and
/// compares back(n) with forw(imax - n) for n = 1 .. imax - 1.
ReproductionReport paper_reproduction(const ReproductionConfig& config = {});

/// Forward and backward orbits of the listing from (0, 0), packed, imax
/// entries each. Exposed so callers can cross-check the comparison by
/// reversing one list directly.
struct ListingTrajectories {
  std::vector<std::uint32_t> forward;
  std::vector<std::uint32_t> backward;
};
ListingTrajectories listing_trajectories(const ReproductionConfig& config = {});

/// Exhaustive equivalence of the generic coupled step, the listing step and
/// the packed single-word oracle over all 2^22 states.
struct EquivalenceReport {
  std::uint64_t states_checked = 0;
  std::uint64_t generic_vs_listing_mismatches = 0;
  std::uint64_t oracle_vs_listing_mismatches = 0;
  std::uint64_t backward_mismatches = 0;
  std::uint64_t inexact_carry_divisions = 0;

  bool passed() const noexcept {
    return generic_vs_listing_mismatches == 0 && oracle_vs_listing_mismatches == 0 &&
           backward_mismatches == 0 && inexact_carry_divisions == 0;
  }
};
EquivalenceReport rund_equivalence_sweep(unsigned threads = 0);

}  // namespace revlcg
