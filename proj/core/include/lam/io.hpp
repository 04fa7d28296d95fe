#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lam/correspondence.hpp"
#include "lam/pullback.hpp"

namespace lam {

struct DocLeaf {
    Leaf leaf;
    std::optional<int> depth;
};

struct LamDocument {
    int degree = 2;
    std::vector<DocLeaf> leaves;      // canonical: sorted by (depth, leaf)
    std::vector<Polygon> polygons;
    std::vector<Leaf> portrait;
    nlohmann::json metadata = nlohmann::json::object();

    void canonicalize();
    Lamination lamination() const;
};

/// Strict: unreduced or out-of-range fractions, unknown keys and crossing
/// leaves are rejected with the offending JSON path.
LamDocument parse_lam_json(std::string_view text);
std::string write_lam_json(const LamDocument& doc, bool pretty = false);

LamDocument document_from(const Lamination& l);
LamDocument document_from(const PullbackResult& r);

nlohmann::json to_json(const Angle& a);
nlohmann::json to_json(const Leaf& l);
nlohmann::json to_json(const Polygon& p);
nlohmann::json to_json(const OrbitClass& c);
nlohmann::json to_json(const MacData& m);
nlohmann::json to_json(const ScmData& s);

} // namespace lam
