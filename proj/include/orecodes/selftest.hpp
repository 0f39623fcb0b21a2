#ifndef ORECODES_SELFTEST_HPP
#define ORECODES_SELFTEST_HPP

#include <string>
#include <vector>

#include "orecodes/json_io.hpp"

namespace orecodes {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // failure description, or a short summary
};

struct SelftestReport {
    uint64_t seed = 0;
    std::vector<CriterionResult> criteria;
    bool pass = false;
};

// The verification suites behind `selftest` (and the acceptance runner):
// exact property checks on the standard contexts. Deterministic per seed.
SelftestReport run_selftest(uint64_t seed);

json selftest_report_json(const SelftestReport& r);

}  // namespace orecodes

#endif
