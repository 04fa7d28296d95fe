#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lam/catalog.hpp"

namespace lamcli {

struct SuiteResult {
    std::string name;
    int checked = 0;
    int passed = 0;
    int skipped = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

// Each suite sweeps the MAC catalog of degree d up to max_period.
SuiteResult suite_csl(int d, const std::vector<lam::MacData>& cat);
SuiteResult suite_coroot(int d, const std::vector<lam::MacData>& cat);
SuiteResult suite_roundtrip(int d, const std::vector<lam::MacData>& cat, int depth);
SuiteResult suite_invariance(int d, const std::vector<lam::MacData>& cat, int depth);
SuiteResult suite_scm(int d, const std::vector<lam::MacData>& cat, int depth);

/// Properties of a canonical SCM lamination: d-1 sides in (1/d, 1/(d-1)),
/// a side shorter than 1/d, a degree-2 gap past each major and, for identity
/// return, one portrait arc holding two vertices. Empty when all hold.
std::vector<std::string> scm_census(int d, const lam::Polygon& p, const lam::PullbackResult& s, bool identity_return);

const std::vector<std::string>& suite_names();

} // namespace lamcli
