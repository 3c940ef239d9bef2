#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace efb {

struct CheckResult {
    std::string name;
    std::string covers;  // claim id, empty for supporting checks
    int m = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    bool exhaustive = false;
    bool skipped = false;
    nlohmann::ordered_json witness;      // first failure, null when passing
    nlohmann::ordered_json observation;  // recorded findings that are not asserted
    bool passed() const { return failures == 0; }
};

constexpr int kMaxVerifyM = 6;

// Claims that must each have a ledger entry.
const std::vector<std::string>& required_claims();
std::vector<std::string> check_names();

// Every check, in fixed order, followed by the coverage check. Each check
// draws from its own generator seeded by derive_seed(seed, name).
std::vector<CheckResult> run_suite(int m, std::uint64_t seed, std::size_t trials, bool parallel = false);

// one named check; throws RangeError for an unknown name
CheckResult run_check(const std::string& name, int m, std::uint64_t seed, std::size_t trials);

std::string ledger_line(const CheckResult& r);
std::string ledger(const std::vector<CheckResult>& results);

}  // namespace efb
