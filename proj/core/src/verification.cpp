#include "revlcg/verification.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace revlcg {
namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(begin, end, slot) over [0, total) split into contiguous chunks,
// one per thread. Chunk order matches slot order so merged results are
// independent of the thread count.
template <typename Partial, typename Body>
std::vector<Partial> parallel_chunks(std::uint64_t total, unsigned threads, Body body) {
  const std::uint64_t n = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(total, 1));
  std::vector<Partial> partials(n);
  const std::uint64_t chunk = (total + n - 1) / n;
  if (n == 1) {
    body(std::uint64_t{0}, total, partials[0]);
    return partials;
  }
  std::vector<std::jthread> workers;
  workers.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    const std::uint64_t begin = std::min(total, t * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&, begin, end, t] { body(begin, end, partials[t]); });
  }
  return partials;
}

void require_exhaustive(Word m) {
  if (m > kMaxExhaustiveModulus) {
    throw ExhaustiveLimitError(m);
  }
}

}  // namespace

ExhaustiveLimitError::ExhaustiveLimitError(Word m)
    : std::invalid_argument("modulus " + std::to_string(m) + " too large for exhaustive mode (limit " +
                            std::to_string(kMaxExhaustiveModulus) + "); use sampled checks instead") {}

OrbitReport orbit_period(const CoupledState& seed, const LcgParams& params,
                         const CouplingSpec& coupling, std::uint64_t limit) {
  validate_state(params, seed);
  const std::uint64_t space = params.m() * params.m();
  if (limit == 0) {
    limit = space + 1;
  }

  OrbitReport report;
  report.state_space = space;
  CoupledState s = seed;
  std::uint64_t steps = 0;
  while (steps < limit) {
    s = forward_step(s, params, coupling);
    ++steps;
    if (s == seed) {
      report.period = steps;
      break;
    }
  }
  report.states_visited = steps;
  report.first_repeat_state = s;
  report.reached_full_period = report.period.has_value() && *report.period == space;
  return report;
}

EquidistributionReport equidistribution_check(const LcgParams& params,
                                              const CouplingSpec& coupling,
                                              const CoupledState& seed) {
  require_exhaustive(params.m());
  validate_state(params, seed);
  const Word m = params.m();
  const std::uint64_t space = m * m;

  EquidistributionReport report;
  report.state_space = space;
  std::vector<bool> seen(space, false);

  CoupledState s = seed;
  for (std::uint64_t step = 0; step < space; ++step) {
    const Word z = pack(s, m);
    if (seen[z]) {
      report.first_duplicate = z;
      break;
    }
    seen[z] = true;
    ++report.distinct_values;
    ++report.orbit_length;
    s = forward_step(s, params, coupling);
    if (s == seed) {
      break;
    }
  }

  for (std::uint64_t z = 0; z < space; ++z) {
    if (!seen[z]) {
      if (!report.first_gap) {
        report.first_gap = z;
      }
      ++report.gaps;
    }
  }
  report.passed = !report.first_duplicate && report.gaps == 0;
  return report;
}

RoundTripReport roundtrip_sweep(const LcgParams& params, const CouplingSpec& coupling,
                                unsigned threads) {
  return roundtrip_sweep(params, derive_inverse(params), coupling, threads);
}

RoundTripReport roundtrip_sweep(const LcgParams& params, const InverseParams& inverse,
                                const CouplingSpec& coupling, unsigned threads) {
  require_exhaustive(params.m());
  validate_coupling(params, coupling);
  const Word m = params.m();

  const auto partials = parallel_chunks<RoundTripReport>(
      m * m, threads, [&](std::uint64_t begin, std::uint64_t end, RoundTripReport& out) {
        for (std::uint64_t z = begin; z < end; ++z) {
          const CoupledState s = unpack(z, m);
          const CoupledState back = backward_step(forward_step(s, params, coupling), params, inverse, coupling);
          ++out.states_checked;
          if (back != s) {
            if (!out.first_mismatch) {
              out.first_mismatch = s;
            }
            ++out.mismatches;
          }
        }
      });

  RoundTripReport report;
  for (const auto& p : partials) {
    report.states_checked += p.states_checked;
    report.mismatches += p.mismatches;
    if (!report.first_mismatch && p.first_mismatch) {
      report.first_mismatch = p.first_mismatch;
    }
  }
  return report;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    factors.push_back(n);
  }
  return factors;
}

HullDobellReport hull_dobell_check(const LcgParams& params) {
  const Word a = params.a(), b = params.b(), m = params.m();
  // a is reduced mod m, so a - 1 is taken mod m as well; divisibility by
  // divisors of m is unaffected.
  const Word a_minus_1 = (a + m - 1) % m;

  HullDobellReport r;
  r.b_coprime_m = std::gcd(b, m) == 1;
  const auto factors = prime_factors(m);
  r.a_minus_1_divisible_by_prime_factors =
      std::all_of(factors.begin(), factors.end(), [&](std::uint64_t p) { return a_minus_1 % p == 0; });
  r.a_minus_1_divisible_by_4_when_m_is = (m % 4 != 0) || (a_minus_1 % 4 == 0);
  r.all_satisfied = r.b_coprime_m && r.a_minus_1_divisible_by_prime_factors &&
                    r.a_minus_1_divisible_by_4_when_m_is;
  return r;
}

std::uint64_t single_word_period(const LcgParams& params, Word x0) {
  const Word m = params.m();
  if (x0 >= m) {
    throw std::out_of_range("single_word_period: seed outside [0, m)");
  }
  // gcd(a, m) may exceed 1 here, in which case x0 can fall off its own cycle;
  // report the period of the cycle eventually entered.
  std::vector<std::int64_t> first_seen(m, -1);
  Word x = x0;
  for (std::int64_t step = 0;; ++step) {
    if (first_seen[x] >= 0) {
      return static_cast<std::uint64_t>(step - first_seen[x]);
    }
    first_seen[x] = step;
    x = (params.a() * x + params.b()) % m;
  }
}

ListingTrajectories listing_trajectories(const ReproductionConfig& config) {
  if (config.imax < 1 || config.imax > rund::kImax) {
    throw std::invalid_argument("imax must lie in [1, " + std::to_string(rund::kImax) + "]");
  }
  const auto imax = static_cast<std::size_t>(config.imax);
  ListingTrajectories t;
  t.forward.resize(imax);
  t.backward.resize(imax);

  rund::IntPair s{0, 0};
  for (std::size_t n = 0; n < imax; ++n) {
    s = rund::forward_step(s);
    t.forward[n] = static_cast<std::uint32_t>(rund::pack(s));
  }

  s = config.backward_seed == ReproductionConfig::BackwardSeed::kListingZero ? rund::IntPair{0, 0} : s;
  for (std::size_t n = 0; n < imax; ++n) {
    s = rund::backward_step_with(s, config.c, config.d);
    t.backward[n] = static_cast<std::uint32_t>(rund::pack(s));
  }
  return t;
}

ReproductionReport paper_reproduction(const ReproductionConfig& config) {
  const ListingTrajectories t = listing_trajectories(config);
  const std::size_t imax = t.forward.size();

  ReproductionReport report;
  // back(n) vs forw(imax - n), 1-based, n = 1 .. imax - 1.
  for (std::size_t n = 1; n < imax; ++n) {
    ++report.comparisons;
    if (t.backward[n - 1] != t.forward[imax - n - 1]) {
      if (!report.first_mismatch_n) {
        report.first_mismatch_n = n;
      }
      ++report.mismatches;
    }
  }
  report.passed = report.mismatches == 0;
  return report;
}

EquivalenceReport rund_equivalence_sweep(unsigned threads) {
  const LcgParams params = rund::params();
  const CouplingSpec coupling = rund::coupling();
  const InverseParams inverse = rund::inverse();
  const auto space = static_cast<std::uint64_t>(rund::kImax);

  const auto partials = parallel_chunks<EquivalenceReport>(
      space, threads, [&](std::uint64_t begin, std::uint64_t end, EquivalenceReport& out) {
        for (std::uint64_t z = begin; z < end; ++z) {
          const rund::IntPair listing_in = rund::unpack(z);
          const CoupledState generic_in = rund::to_state(listing_in);

          const rund::IntPair listing_fwd = rund::forward_step(listing_in);
          if (rund::to_state(listing_fwd) != forward_step(generic_in, params, coupling)) {
            ++out.generic_vs_listing_mismatches;
          }
          if (rund::unpack(rund::packed_oracle_step(z)) != listing_fwd) {
            ++out.oracle_vs_listing_mismatches;
          }
          if (rund::to_state(rund::backward_step(listing_in)) !=
              backward_step(generic_in, params, inverse, coupling)) {
            ++out.backward_mismatches;
          }
          if (rund::backward_carry_remainder(listing_in) != 0) {
            ++out.inexact_carry_divisions;
          }
          ++out.states_checked;
        }
      });

  EquivalenceReport report;
  for (const auto& p : partials) {
    report.states_checked += p.states_checked;
    report.generic_vs_listing_mismatches += p.generic_vs_listing_mismatches;
    report.oracle_vs_listing_mismatches += p.oracle_vs_listing_mismatches;
    report.backward_mismatches += p.backward_mismatches;
    report.inexact_carry_divisions += p.inexact_carry_divisions;
  }
  return report;
}

}  // namespace revlcg
