#pragma once
// The invariant suite behind `zeta4 verify`: group orders, the partial
// fraction identity, route equality, integrality, valuation bounds and the
// omega table of the 68/57 family. Check results are deterministic; timings
// are kept apart so the JSON report does not depend on them.

#include "zeta4/json_io.hpp"

#include <string>
#include <vector>

namespace zeta4 {

struct VerifyOptions {
    bool fast = false;  // n <= 2 only
    unsigned jobs = 1;
    std::string cache_dir;
};

struct VerifyCheck {
    std::string name;
    bool passed = true;
    std::vector<std::string> failures;  // empty when passed
    std::size_t cases = 0;
    double seconds = 0;
};

std::vector<VerifyCheck> run_verify(const VerifyOptions& options);
bool all_passed(const std::vector<VerifyCheck>& checks);
/// Report without timings.
json_io::Json verify_json(const std::vector<VerifyCheck>& checks, bool fast);

}  // namespace zeta4
