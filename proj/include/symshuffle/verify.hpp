#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symshuffle {

enum class Suite { identities, rsk, shuffles, cycle_index, all };
std::string to_string(Suite s);
Suite parse_suite(std::string_view name);

struct VerifyOptions {
  int n = 5;                   // largest deck size for enumeration checks
  std::uint64_t seed = 1;      // sampler checks
  std::size_t samples = 100000;
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // first discrepancy on failure
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options);

// One line per check: "name: PASS" or "name: FAIL (detail)".
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace symshuffle
