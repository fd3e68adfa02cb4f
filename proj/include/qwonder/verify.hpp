#pragma once

#include <string>
#include <vector>

namespace qwonder {

/// One named verification suite. Every suite pins its expected values in
/// code; pass means every identity held exactly.
struct SuiteResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

/// The named suites, in the order they are reported:
///   confluence, centrality, pw-dims, vinberg-iso, gr-p1p1, semiclassical,
///   hopf, phi-mult, torsion, q1-specialization, veronese, irreps.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name);
std::vector<SuiteResult> run_all_suites();

}  // namespace qwonder
