#pragma once

// Report serialization. Two forms per report:
//   to_text()       one line of space-separated key=value pairs for humans
//   to_key_values() one key=value per line, always starting with
//                   "check=<name>" and "status=pass|fail"
// Both are locale-independent and deterministic.

#include <string>

#include "revlcg/verification.hpp"

namespace revlcg {

std::string to_text(const OrbitReport& r);
std::string to_text(const EquidistributionReport& r);
std::string to_text(const RoundTripReport& r);
std::string to_text(const HullDobellReport& r);
std::string to_text(const ReproductionReport& r);
std::string to_text(const EquivalenceReport& r);

std::string to_key_values(const OrbitReport& r);
std::string to_key_values(const EquidistributionReport& r);
std::string to_key_values(const RoundTripReport& r);
std::string to_key_values(const HullDobellReport& r);
std::string to_key_values(const ReproductionReport& r);
std::string to_key_values(const EquivalenceReport& r);

}  // namespace revlcg
