#include "suites.hpp"

#include <algorithm>

namespace lamcli {

using namespace lam;

nlohmann::json SuiteResult::to_json() const {
    return {{"suite", name}, {"checked", checked}, {"passed", passed}, {"skipped", skipped}, {"failures", failures}};
}

namespace {

void record(SuiteResult& r, const std::string& failure) {
    ++r.checked;
    if (failure.empty())
        ++r.passed;
    else
        r.failures.push_back(failure);
}

Rational circle_distance(const Angle& a, const Angle& b) {
    Rational x = arc_length(a, b);
    return std::min(x, Rational(1 - x));
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"csl", "coroot", "roundtrip", "invariance", "scm"};
    return names;
}

SuiteResult suite_csl(int d, const std::vector<MacData>& cat) {
    SuiteResult r{"csl", 0, 0, 0, {}};
    for (const auto& m : cat) {
        auto rep = csl_check(d, m.major);
        if (!rep.narrow) {
            ++r.skipped;
            continue;
        }
        std::string f;
        if (!rep.ok()) f = m.major.str() + ": clause " + (!rep.clause1 ? "1" : !rep.clause2 ? "2" : "3") + " fails";
        record(r, f);
    }
    return r;
}

SuiteResult suite_coroot(int d, const std::vector<MacData>& cat) {
    SuiteResult r{"coroot", 0, 0, 0, {}};
    for (const auto& m : cat) {
        std::string f;
        if (static_cast<int>(m.coroots.size()) != d - 2) {
            f = m.major.str() + ": " + std::to_string(m.coroots.size()) + " co-roots";
            for (const auto& diag : m.diagnostics) f += "; " + diag;
        }
        for (const auto& c : m.coroots)
            if (f.empty() && sigma_iter(d, c, m.period) != c) f = m.major.str() + ": co-root " + c.str() + " not fixed";
        for (std::size_t i = 0; i < m.coroots.size() && f.empty(); ++i)
            for (std::size_t j = i + 1; j < m.coroots.size(); ++j)
                if (circle_distance(m.coroots[i], m.coroots[j]) <= Rational(1, d))
                    f = m.major.str() + ": co-roots " + m.coroots[i].str() + " and " + m.coroots[j].str() + " too close";
        record(r, f);
    }
    return r;
}

SuiteResult suite_roundtrip(int d, const std::vector<MacData>& cat, int depth) {
    SuiteResult r{"roundtrip", 0, 0, 0, {}};
    for (const auto& m : cat) {
        if (m.orbit_class.tag == OrbitTag::RotationReturn) {
            ++r.skipped;
            continue;
        }
        std::string f;
        try {
            auto scm = mac_to_scm(d, m);
            if (!is_scm(d, scm.polygon)) f = m.major.str() + ": " + scm.polygon.str() + " fails is_scm";
            else if (static_cast<int>(scm.majors.size()) != d - 1) f = m.major.str() + ": wrong major count";
            else if (scm_to_mac(d, scm.polygon).major != m.major) f = m.major.str() + ": scm_to_mac differs";
            else if (depth > 0 && !lamination_equal_at_depth(canonical_mac_lamination(d, m.major, depth),
                                                             canonical_scm_lamination(d, scm.polygon, depth), depth))
                f = m.major.str() + ": laminations differ at depth " + std::to_string(depth);
        } catch (const DomainError& e) {
            f = m.major.str() + ": " + e.what();
        }
        record(r, f);
    }
    return r;
}

SuiteResult suite_invariance(int d, const std::vector<MacData>& cat, int depth) {
    SuiteResult r{"invariance", 0, 0, 0, {}};
    for (const auto& m : cat) {
        std::string f;
        try {
            auto rep = check_invariance(canonical_mac_lamination(d, m.major, depth).lamination);
            if (!rep.ok())
                f = m.major.str() + ": forward " + std::to_string(rep.forward_failures()) + ", backward " +
                    std::to_string(rep.backward_failures()) + ", sibling " + std::to_string(rep.sibling_failures());
        } catch (const DomainError& e) {
            f = m.major.str() + ": " + e.what();
        }
        record(r, f);
    }
    return r;
}

std::vector<std::string> scm_census(int d, const Polygon& p, const PullbackResult& s, bool identity_return) {
    std::vector<std::string> out;
    const auto& v = p.vertices();
    const std::size_t k = v.size();
    int majors = 0, shorts = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Rational span = arc_length(v[i], v[(i + 1) % k]);
        if (span > Rational(1, d) && span < Rational(1, d - 1)) ++majors;
        if (span < Rational(1, d)) ++shorts;
    }
    if (majors != d - 1) out.push_back(std::to_string(majors) + " sides in (1/d, 1/(d-1))");
    if (shorts == 0) out.push_back("no side shorter than 1/d");
    GapFinder gaps(s.lamination);
    for (const auto& [from, to] : scm_major_chain(d, p)) {
        int deg = gap_degree(d, gaps.left_of(to, from));
        if (deg != 2)
            out.push_back("gap past (" + from.str() + "," + to.str() + ") has degree " + std::to_string(deg));
    }
    if (identity_return) {
        int holding = 0;
        for (const auto& sec : s.portrait.sectors())
            for (const auto& arc : sec.arcs) {
                auto n = std::count_if(v.begin(), v.end(), [&](const Angle& t) { return arc.contains_half_open(t); });
                if (n >= 2) ++holding;
            }
        if (holding != 1) out.push_back(std::to_string(holding) + " portrait arcs hold two vertices");
    }
    return out;
}

SuiteResult suite_scm(int d, const std::vector<MacData>& cat, int depth) {
    SuiteResult r{"scm", 0, 0, 0, {}};
    for (const auto& m : cat) {
        if (m.orbit_class.tag == OrbitTag::RotationReturn) {
            ++r.skipped;
            continue;
        }
        std::string f;
        try {
            auto scm = mac_to_scm(d, m);
            auto s = canonical_scm_lamination(d, scm.polygon, depth);
            for (const auto& msg : scm_census(d, scm.polygon, s, m.orbit_class.tag == OrbitTag::IdentityReturn))
                f += (f.empty() ? scm.polygon.str() + ": " : "; ") + msg;
        } catch (const DomainError& e) {
            f = m.major.str() + ": " + e.what();
        }
        record(r, f);
    }
    return r;
}

} // namespace lamcli
