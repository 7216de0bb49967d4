#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <map>
#include <optional>

#include "revlcg/congruence.hpp"
#include "revlcg/coupled_lcg.hpp"
#include "revlcg/report_format.hpp"
#include "revlcg/rund.hpp"
#include "revlcg/verification.hpp"

namespace revlcg::cli {
namespace {

// Flags shared by every subcommand; defaults are the rund constants.
struct GeneratorFlags {
  std::uint64_t a = rund::kA;
  std::uint64_t b = rund::kB;
  std::uint64_t m = rund::kM;
  std::uint64_t s = rund::kSlope;
  bool carry = true;
  std::optional<std::uint64_t> c;
  std::optional<std::uint64_t> d;

  void attach(CLI::App& app, bool with_inverse_override) {
    app.add_option("--a", a, "Multiplier")->capture_default_str();
    app.add_option("--b", b, "Increment")->capture_default_str();
    app.add_option("--m", m, "Modulus")->capture_default_str();
    app.add_option("--s", s, "Coupling slope")->capture_default_str();
    app.add_flag("--carry,!--no-carry", carry, "Add the high word of a*x+b to the coupling")
        ->capture_default_str();
    if (with_inverse_override) {
      app.add_option("--c", c, "Override the derived inverse multiplier");
      app.add_option("--d", d, "Override the derived inverse increment");
    }
  }

  LcgParams params() const { return {a, b, m}; }
  CouplingSpec coupling() const { return {s, carry}; }

  InverseParams inverse(const LcgParams& p) const {
    InverseParams inv = derive_inverse(p);
    if (c) inv.c = *c;
    if (d) inv.d = *d;
    return inv;
  }
};

struct SeedFlags {
  std::uint64_t x0 = 0;
  std::uint64_t y0 = 0;

  void attach(CLI::App& app) {
    app.add_option("--x0", x0, "Seed x word")->capture_default_str();
    app.add_option("--y0", y0, "Seed y word")->capture_default_str();
  }
};

enum class StreamFormat { kState, kPacked, kReal };

void write_record(std::ostream& out, StreamFormat format, std::uint64_t n, const CoupledState& s, Word m) {
  switch (format) {
    case StreamFormat::kState:
      out << n << ' ' << s.x << ' ' << s.y << '\n';
      break;
    case StreamFormat::kPacked:
      out << pack(s, m) << '\n';
      break;
    case StreamFormat::kReal: {
      const UnitFraction r = output_real(s, m);
      out << n << ' ' << r.to_fraction() << ' ' << r.to_decimal() << '\n';
      break;
    }
  }
}

template <typename Report>
int emit_report(std::ostream& out, const Report& report, bool passed, bool key_values) {
  out << (key_values ? to_key_values(report) : to_text(report) + "\n");
  return passed ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-reversible coupled linear congruential generator"};
  app.require_subcommand(1);

  // derive
  GeneratorFlags derive_flags;
  auto* derive = app.add_subcommand("derive", "Print the inverse parameters c and d");
  derive_flags.attach(*derive, false);

  // generate / reverse
  const std::map<std::string, StreamFormat> formats{
      {"state", StreamFormat::kState}, {"z", StreamFormat::kPacked}, {"real", StreamFormat::kReal}};

  GeneratorFlags gen_flags;
  SeedFlags gen_seed;
  std::uint64_t gen_n = 0;
  StreamFormat gen_format = StreamFormat::kState;
  auto* generate = app.add_subcommand("generate", "Emit n forward states after the seed");
  gen_flags.attach(*generate, false);
  gen_seed.attach(*generate);
  generate->add_option("--n", gen_n, "Number of records")->required();
  generate->add_option("--format", gen_format, "state | z | real")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  GeneratorFlags rev_flags;
  SeedFlags rev_seed;
  std::uint64_t rev_n = 0;
  StreamFormat rev_format = StreamFormat::kState;
  auto* reverse = app.add_subcommand("reverse", "Emit n backward states before the seed");
  rev_flags.attach(*reverse, true);
  rev_seed.attach(*reverse);
  reverse->add_option("--n", rev_n, "Number of records")->required();
  reverse->add_option("--format", rev_format, "state | z | real")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  // verify
  GeneratorFlags ver_flags;
  SeedFlags ver_seed;
  std::string which;
  std::string report_format = "text";
  unsigned threads = 0;
  std::int64_t imax = rund::kImax;
  std::string backward_seed = "zero";
  auto* verify = app.add_subcommand("verify", "Run a verification check");
  ver_flags.attach(*verify, true);
  ver_seed.attach(*verify);
  verify->add_option("which", which, "roundtrip | period | equidist | hulldobell | paper | oracle")
      ->required()
      ->check(CLI::IsMember({"roundtrip", "period", "equidist", "hulldobell", "paper", "oracle"}));
  verify->add_option("--report", report_format, "text | kv")->check(CLI::IsMember({"text", "kv"}));
  verify->add_option("--threads", threads, "Worker threads for exhaustive sweeps (0 = auto)");
  verify->add_option("--imax", imax, "paper: loop length")->capture_default_str();
  verify->add_option("--backward-seed", backward_seed, "paper: zero | endpoint")
      ->check(CLI::IsMember({"zero", "endpoint"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*derive) {
      const LcgParams p = derive_flags.params();
      const InverseParams inv = derive_inverse(p);
      out << "c=" << inv.c << " d=" << inv.d << '\n';
      return kSuccess;
    }

    if (*generate || *reverse) {
      const bool forward = static_cast<bool>(*generate);
      const GeneratorFlags& flags = forward ? gen_flags : rev_flags;
      const SeedFlags& seed = forward ? gen_seed : rev_seed;
      const LcgParams p = flags.params();
      const CouplingSpec cpl = flags.coupling();
      validate_coupling(p, cpl);
      CoupledState s{seed.x0, seed.y0};
      validate_state(p, s);
      const InverseParams inv = forward ? InverseParams{} : flags.inverse(p);
      const std::uint64_t n = forward ? gen_n : rev_n;
      const StreamFormat format = forward ? gen_format : rev_format;

      for (std::uint64_t i = 1; i <= n; ++i) {
        s = forward ? forward_step(s, p, cpl) : backward_step(s, p, inv, cpl);
        write_record(out, format, i, s, p.m());
      }
      return kSuccess;
    }

    // verify
    const bool kv = report_format == "kv";
    if (which == "paper") {
      ReproductionConfig config;
      config.imax = imax;
      if (ver_flags.c) config.c = static_cast<rund::Int>(*ver_flags.c % rund::kM);
      if (ver_flags.d) config.d = static_cast<rund::Int>(*ver_flags.d % rund::kM);
      config.backward_seed = backward_seed == "endpoint" ? ReproductionConfig::BackwardSeed::kForwardEndpoint
                                                         : ReproductionConfig::BackwardSeed::kListingZero;
      const ReproductionReport r = paper_reproduction(config);
      return emit_report(out, r, r.passed, kv);
    }
    if (which == "oracle") {
      const EquivalenceReport r = rund_equivalence_sweep(threads);
      return emit_report(out, r, r.passed(), kv);
    }

    const LcgParams p = ver_flags.params();
    const CouplingSpec cpl = ver_flags.coupling();
    validate_coupling(p, cpl);
    const CoupledState seed{ver_seed.x0, ver_seed.y0};
    validate_state(p, seed);

    if (which == "hulldobell") {
      const HullDobellReport r = hull_dobell_check(p);
      return emit_report(out, r, r.all_satisfied, kv);
    }
    if (which == "roundtrip") {
      const RoundTripReport r = roundtrip_sweep(p, ver_flags.inverse(p), cpl, threads);
      return emit_report(out, r, r.passed(), kv);
    }
    if (which == "period") {
      const OrbitReport r = orbit_period(seed, p, cpl);
      return emit_report(out, r, r.reached_full_period, kv);
    }
    const EquidistributionReport r = equidistribution_check(p, cpl, seed);
    return emit_report(out, r, r.passed, kv);
  } catch (const std::logic_error& e) {
    // NotInvertibleError, ExhaustiveLimitError and range/argument errors.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace revlcg::cli
