#include "lam/io.hpp"

#include <algorithm>
#include <set>

#include "lam/gaps.hpp"

namespace lam {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw DomainError(where + ": " + what);
}

Angle angle_at(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a fraction string");
    try {
        return Angle::parse(j.get<std::string>(), true);
    } catch (const DomainError& e) {
        fail(where, e.what());
    }
}

std::vector<Angle> angles_at(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of fraction strings");
    std::vector<Angle> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(angle_at(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Leaf leaf_at(const json& j, const std::string& where, std::optional<int>* depth = nullptr) {
    const std::size_t max = depth ? 3 : 2;
    if (!j.is_array() || j.size() < 2 || j.size() > max) fail(where, "expected [\"p/q\",\"r/s\"" + std::string(depth ? "[,depth]]" : "]"));
    Angle a = angle_at(j[0], where + "[0]"), b = angle_at(j[1], where + "[1]");
    if (a == b) fail(where, "degenerate leaf");
    if (depth && j.size() == 3) {
        if (!j[2].is_number_integer() || j[2].get<long long>() < 0) fail(where + "[2]", "depth must be a non-negative integer");
        *depth = j[2].get<int>();
    }
    return Leaf(a, b);
}

bool doc_leaf_less(const DocLeaf& x, const DocLeaf& y) {
    const int dx = x.depth.value_or(-1), dy = y.depth.value_or(-1);
    if (dx != dy) return dx < dy;
    return x.leaf < y.leaf;
}

} // namespace

void LamDocument::canonicalize() {
    std::sort(leaves.begin(), leaves.end(), doc_leaf_less);
    std::set<Leaf> seen;
    std::erase_if(leaves, [&](const DocLeaf& l) { return !seen.insert(l.leaf).second; });
    std::sort(polygons.begin(), polygons.end());
    polygons.erase(std::unique(polygons.begin(), polygons.end()), polygons.end());
    std::sort(portrait.begin(), portrait.end());
    portrait.erase(std::unique(portrait.begin(), portrait.end()), portrait.end());
}

Lamination LamDocument::lamination() const {
    Lamination l(degree);
    for (const auto& x : leaves) l.add(x.leaf, x.depth.value_or(0));
    return l;
}

LamDocument parse_lam_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("$", "expected an object");
    static const std::set<std::string> known{"degree", "leaves", "polygons", "portrait", "metadata"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) fail("$." + k, "unknown key");

    LamDocument doc;
    if (!j.contains("degree") || !j["degree"].is_number_integer()) fail("$.degree", "required integer");
    doc.degree = j["degree"].get<int>();
    if (doc.degree < 2) fail("$.degree", "must be at least 2");

    if (!j.contains("leaves")) fail("$.leaves", "required array");
    {
        const json& ls = j["leaves"];
        if (!ls.is_array()) fail("$.leaves", "expected an array");
        for (std::size_t i = 0; i < ls.size(); ++i) {
            std::optional<int> depth;
            Leaf l = leaf_at(ls[i], "$.leaves[" + std::to_string(i) + "]", &depth);
            doc.leaves.push_back({l, depth});
        }
        std::vector<Leaf> plain;
        for (const auto& x : doc.leaves) plain.push_back(x.leaf);
        if (auto c = find_crossing(plain)) {
            auto index = [&](const Leaf& l) {
                return std::to_string(std::find(plain.begin(), plain.end(), l) - plain.begin());
            };
            fail("$.leaves[" + index(c->first) + "] and $.leaves[" + index(c->second) + "]",
                 c->first.str() + " crosses " + c->second.str());
        }
    }
    if (j.contains("polygons")) {
        const json& ps = j["polygons"];
        if (!ps.is_array()) fail("$.polygons", "expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::string where = "$.polygons[" + std::to_string(i) + "]";
            try {
                doc.polygons.emplace_back(angles_at(ps[i], where));
            } catch (const DomainError& e) {
                fail(where, e.what());
            }
        }
    }
    if (j.contains("portrait")) {
        const json& cs = j["portrait"];
        if (!cs.is_array()) fail("$.portrait", "expected an array");
        for (std::size_t i = 0; i < cs.size(); ++i)
            doc.portrait.push_back(leaf_at(cs[i], "$.portrait[" + std::to_string(i) + "]"));
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) fail("$.metadata", "expected an object");
        doc.metadata = j["metadata"];
    }
    doc.canonicalize();
    return doc;
}

std::string write_lam_json(const LamDocument& in, bool pretty) {
    LamDocument doc = in;
    doc.canonicalize();
    json j = json::object();
    j["degree"] = doc.degree;
    json ls = json::array();
    for (const auto& x : doc.leaves) {
        json l = to_json(x.leaf);
        if (x.depth) l.push_back(*x.depth);
        ls.push_back(std::move(l));
    }
    j["leaves"] = std::move(ls);
    if (!doc.polygons.empty()) {
        json ps = json::array();
        for (const auto& p : doc.polygons) ps.push_back(to_json(p));
        j["polygons"] = std::move(ps);
    }
    if (!doc.portrait.empty()) {
        json cs = json::array();
        for (const auto& c : doc.portrait) cs.push_back(to_json(c));
        j["portrait"] = std::move(cs);
    }
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    return pretty ? j.dump(2) : j.dump();
}

LamDocument document_from(const Lamination& l) {
    LamDocument doc;
    doc.degree = l.degree();
    for (const auto& [leaf, depth] : l.leaves()) doc.leaves.push_back({leaf, depth});
    doc.canonicalize();
    return doc;
}

LamDocument document_from(const PullbackResult& r) {
    LamDocument doc = document_from(r.lamination);
    for (const auto& [poly, depth] : r.elements)
        if (poly.size() > 2) doc.polygons.push_back(poly);
    // Gaps bounded by leaves alone (the rabbit's triangles) are filled too.
    for (const auto& g : GapFinder(r.lamination).all())
        if (g.is_polygon()) doc.polygons.emplace_back(g.vertices());
    doc.portrait = r.portrait.chords();
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(to_json(g));
    doc.metadata["generators"] = std::move(gens);
    doc.metadata["depth"] = r.depth;
    doc.canonicalize();
    return doc;
}

json to_json(const Angle& a) { return a.str(); }

json to_json(const Leaf& l) { return json::array({l.first().str(), l.second().str()}); }

json to_json(const Polygon& p) {
    json out = json::array();
    for (const auto& v : p.vertices()) out.push_back(v.str());
    return out;
}

json to_json(const OrbitClass& c) {
    json out{{"tag", c.tag_name()}};
    out["rotation"] = c.rotation ? json(c.rotation->str()) : json(nullptr);
    return out;
}

json to_json(const MacData& m) {
    json roots = json::array();
    for (const auto& c : m.coroots) roots.push_back(c.str());
    return json{{"major", to_json(m.major)},      {"minor", to_json(m.minor)},
                {"period", m.period},             {"class", to_json(m.orbit_class)},
                {"coroots", std::move(roots)},    {"diagnostics", m.diagnostics}};
}

json to_json(const ScmData& s) {
    json majors = json::array();
    for (const auto& l : s.majors) majors.push_back(to_json(l));
    return json{{"polygon", to_json(s.polygon)}, {"majors", std::move(majors)}, {"chain_chord", to_json(s.chain_chord)}};
}

} // namespace lam
