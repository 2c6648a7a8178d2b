#pragma once

#include "qsch/orthogonality.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qsch {

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SuiteResult {
    std::string suite;
    int n = 0;
    std::vector<IdentityCheck> checks;
    bool ok() const;
};

// ortho-62, basis-66, presentation-31, presentation-32, poincare-73,
// compare-76, counts-53, membership-52, positivity-83, positivity-84, dominance-69
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, int n);

// Individual pieces, shared with the acceptance harness.
IdentityCheck orbit_check(int n);
IdentityCheck exclusive_count_check(int n);
IdentityCheck self_symmetric_count_check(int n);
std::vector<IdentityCheck> membership_checks(int n);

std::string suite_to_json(const SuiteResult& r);

}  // namespace qsch
