#pragma once

#include <string>
#include <vector>

#include "rootposet/root_system.hpp"

namespace rootposet {

// One verification record. Failing checks always carry a witness (the
// offending ideal, pair or root set); informational notes are marked and
// never fail.
struct CheckResult {
  std::string id;
  bool pass = false;
  bool note = false;
  std::string witness;
};

struct VerifyOptions {
  int max_rank = 8;
  unsigned seed = 12345;
};

// Every check applicable to one system; ids are prefixed with the type name.
std::vector<CheckResult> verify_type(const RootSystemSpec& spec, const VerifyOptions& options = {});

// The sweep: A1..A_max, B2.., C2.., D4.., E6..E8, F4, G2 within max_rank,
// plus the cross-type searches.
std::vector<CheckResult> verify_all(const VerifyOptions& options = {});

std::vector<RootSystemSpec> sweep_specs(int max_rank);

// Sorted, line-per-check report; deterministic for fixed options.
std::string render_report(std::vector<CheckResult> results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rootposet
