#include "lamcli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lam/io.hpp"
#include "lam/svg.hpp"
#include "suites.hpp"

namespace lamcli {

using namespace lam;
using nlohmann::json;

namespace {

std::vector<Angle> parse_list(const std::string& text) {
    std::vector<Angle> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(Angle::parse(item));
    return out;
}

Leaf parse_leaf(const std::string& text) {
    auto v = parse_list(text);
    if (v.size() != 2) throw DomainError("a leaf needs two angles, got '" + text + "'");
    return Leaf(v[0], v[1]);
}

Polygon parse_polygon(const std::string& text) { return Polygon(parse_list(text)); }

struct Options {
    int degree = 2;
    std::string angle, leaf, polygon, major, out, in, suite = "all", format = "json";
    int depth = 5;
    int max_period = 4;
    int iterations = 1;
    int width = 600;
    bool labels = false;
    bool pretty = false;
};

class Emitter {
public:
    Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void text(const std::string& s) {
        if (o_.out.empty()) {
            out_ << s;
            if (s.empty() || s.back() != '\n') out_ << '\n';
            return;
        }
        std::ofstream f(o_.out, std::ios::binary);
        if (!f) throw DomainError("cannot write " + o_.out);
        f << s;
    }
    void data(const json& j) { text(o_.pretty ? j.dump(2) : j.dump()); }

private:
    const Options& o_;
    std::ostream& out_;
};

LamDocument load_document(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_lam_json(ss.str());
}

// The lamination a command works on: a document file, a MAC major or an
// SCM polygon, pulled back to --depth.
LamDocument build_document(const Options& o) {
    if (!o.in.empty()) return load_document(o.in);
    if (!o.major.empty()) {
        auto doc = document_from(canonical_mac_lamination(o.degree, parse_leaf(o.major), o.depth));
        doc.metadata["major"] = to_json(parse_leaf(o.major));
        return doc;
    }
    if (!o.polygon.empty()) {
        auto p = parse_polygon(o.polygon);
        auto doc = document_from(canonical_scm_lamination(o.degree, p, o.depth));
        doc.metadata["scm"] = to_json(p);
        return doc;
    }
    throw DomainError("give --in, --major or --polygon");
}

std::string render(const Options& o, const LamDocument& doc) {
    RenderOptions ro;
    ro.width_px = o.width;
    ro.draw_labels = o.labels;
    return render_svg(doc, ro);
}

int cmd_map(const Options& o, Emitter& e) {
    require_degree(o.degree);
    if (!o.angle.empty()) {
        e.text(sigma_iter(o.degree, Angle::parse(o.angle), o.iterations).str());
        return kOk;
    }
    if (!o.leaf.empty()) {
        LeafImage img = parse_leaf(o.leaf);
        for (int i = 0; i < o.iterations; ++i)
            if (auto* l = std::get_if<Leaf>(&img)) img = image_leaf(o.degree, *l);
        if (auto* l = std::get_if<Leaf>(&img))
            e.text(l->str());
        else
            e.text(std::get<DegeneratePoint>(img).point.str());
        return kOk;
    }
    throw DomainError("map needs --angle or --leaf");
}

Polygon object_of(const Options& o) {
    if (!o.polygon.empty()) return parse_polygon(o.polygon);
    if (!o.leaf.empty()) return Polygon(parse_leaf(o.leaf));
    if (!o.major.empty()) return Polygon(parse_leaf(o.major));
    throw DomainError("give --polygon or --leaf");
}

int cmd_orbit(const Options& o, Emitter& e) {
    auto info = forward_orbit(o.degree, object_of(o));
    if (!info) throw DomainError("no periodic orbit within the iteration bound");
    json orbit = json::array();
    for (const auto& p : info->orbit) orbit.push_back(to_json(p));
    e.data({{"preperiod", info->preperiod},
            {"vertex_period", info->vertex_period},
            {"object_period", info->object_period},
            {"orbit", orbit}});
    return kOk;
}

int cmd_classify(const Options& o, Emitter& e) {
    auto p = object_of(o);
    auto cls = classify(o.degree, p);
    json j = to_json(cls);
    if (cls.tag != OrbitTag::NotPeriodic) {
        j["side_orbits"] = side_orbit_count(o.degree, p);
        j["kiwi_bound"] = kiwi_bound_check(o.degree, p, cls);
    }
    e.data(j);
    return kOk;
}

MacData require_mac(const Options& o) {
    if (o.major.empty()) throw DomainError("give --major");
    auto m = parse_leaf(o.major);
    auto mac = is_mac(o.degree, m);
    if (!mac) throw DomainError(m.str() + " is not a MAC leaf in degree " + std::to_string(o.degree));
    return *mac;
}

int cmd_mac2scm(const Options& o, Emitter& e) {
    auto mac = require_mac(o);
    auto scm = mac_to_scm(o.degree, mac);
    if (o.pretty) {
        std::ostringstream s;
        s << "MAC " << mac.major.str() << " (" << mac.orbit_class.tag_name() << ", period " << mac.period << ")\n";
        s << "co-roots:";
        for (const auto& c : mac.coroots) s << ' ' << c.str();
        s << "\nSCM polygon " << scm.polygon.str() << "\nmajors:";
        for (const auto& l : scm.majors) s << ' ' << l.str();
        e.text(s.str());
        return kOk;
    }
    e.data({{"mac", to_json(mac)}, {"scm", to_json(scm)}});
    return kOk;
}

int cmd_scm2mac(const Options& o, Emitter& e) {
    if (o.polygon.empty()) throw DomainError("give --polygon");
    auto p = parse_polygon(o.polygon);
    auto scm = is_scm(o.degree, p);
    if (!scm) throw DomainError(p.str() + " is not an SCM polygon in degree " + std::to_string(o.degree));
    e.data({{"scm", to_json(*scm)}, {"mac", to_json(scm_to_mac(o.degree, *scm))}});
    return kOk;
}

int cmd_coroots(const Options& o, Emitter& e) {
    auto mac = require_mac(o);
    if (static_cast<int>(mac.coroots.size()) != o.degree - 2) {
        std::string why = mac.diagnostics.empty() ? "" : ": " + mac.diagnostics.back();
        throw DomainError("co-roots of " + mac.major.str() + " not found" + why);
    }
    json j = json::array();
    for (const auto& c : mac.coroots) j.push_back(c.str());
    e.data(j);
    return kOk;
}

int cmd_catalog(const Options& o, Emitter& e) {
    json j = json::array();
    for (const auto& m : catalog(o.degree, o.max_period)) j.push_back(to_json(m));
    e.data(j);
    return kOk;
}

// Invariance of a lamination read from a document.
int check_document(const Options& o, Emitter& e) {
    const auto doc = load_document(o.in);
    const auto rep = check_invariance(doc.lamination());
    json fails = json::array();
    for (const auto& v : rep.verdicts) {
        if (v.forward && v.backward.value_or(true) && v.sibling.value_or(true)) continue;
        json f{{"leaf", to_json(v.leaf)}, {"depth", v.depth}, {"forward", v.forward}};
        if (v.backward) f["backward"] = *v.backward;
        if (v.sibling) f["sibling"] = *v.sibling;
        fails.push_back(f);
    }
    json j{{"degree", doc.degree}, {"leaves", rep.verdicts.size()}, {"ok", rep.ok()}, {"failures", fails}};
    if (rep.crossing) j["crossing"] = {to_json(rep.crossing->first), to_json(rep.crossing->second)};
    e.data(j);
    return rep.ok() ? kOk : kVerification;
}

int cmd_check(const Options& o, Emitter& e) {
    if (!o.in.empty()) return check_document(o, e);
    const auto cat = catalog(o.degree, o.max_period);
    std::vector<SuiteResult> results;
    auto want = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };
    if (want("csl")) results.push_back(suite_csl(o.degree, cat));
    if (want("coroot")) results.push_back(suite_coroot(o.degree, cat));
    if (want("roundtrip")) results.push_back(suite_roundtrip(o.degree, cat, o.depth));
    if (want("invariance")) results.push_back(suite_invariance(o.degree, cat, o.depth));
    if (want("scm")) results.push_back(suite_scm(o.degree, cat, o.depth));
    bool ok = true;
    for (const auto& r : results) ok &= r.ok();
    if (o.pretty) {
        std::ostringstream s;
        s << "degree " << o.degree << ", periods <= " << o.max_period << ", " << cat.size() << " MAC leaves\n";
        for (const auto& r : results) {
            s << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.checked << " passed";
            if (r.skipped) s << ", " << r.skipped << " skipped";
            s << '\n';
            for (const auto& f : r.failures) s << "  " << f << '\n';
        }
        e.text(s.str());
    } else {
        json j = json::array();
        for (const auto& r : results) j.push_back(r.to_json());
        e.data({{"degree", o.degree}, {"max_period", o.max_period}, {"macs", cat.size()}, {"suites", j}});
    }
    return ok ? kOk : kVerification;
}

int cmd_pullback(const Options& o, Emitter& e) {
    auto doc = build_document(o);
    e.text(o.format == "svg" ? render(o, doc) : write_lam_json(doc, o.pretty));
    return kOk;
}

int cmd_render(const Options& o, Emitter& e) {
    e.text(render(o, build_document(o)));
    return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact laminations of the circle under angle multiplication", "lamcli"};
    app.require_subcommand(1);

    auto degree = [&](CLI::App* c) { c->add_option("-d,--degree", o.degree, "Degree d >= 2")->check(CLI::PositiveNumber); };
    auto output = [&](CLI::App* c) {
        c->add_option("-o,--out", o.out, "Write to FILE instead of stdout");
        c->add_flag("--pretty", o.pretty, "Human-readable output");
    };

    auto* map = app.add_subcommand("map", "Apply sigma_d to an angle or leaf");
    degree(map);
    map->add_option("--angle", o.angle, "Angle p/q");
    map->add_option("--leaf", o.leaf, "Leaf p/q,r/s");
    map->add_option("-n,--iterations", o.iterations, "Number of iterations")->check(CLI::NonNegativeNumber);
    output(map);

    auto* orbit = app.add_subcommand("orbit", "Forward orbit of a leaf or polygon");
    auto* classify_cmd = app.add_subcommand("classify", "Orbit type of a periodic leaf or polygon");
    for (auto* c : {orbit, classify_cmd}) {
        degree(c);
        c->add_option("--leaf", o.leaf, "Leaf p/q,r/s");
        c->add_option("--polygon", o.polygon, "Polygon p/q,r/s,...");
        output(c);
    }

    auto* pullback = app.add_subcommand("pullback", "Canonical MAC or SCM lamination to a given depth");
    auto* render_cmd = app.add_subcommand("render", "SVG picture of a lamination");
    for (auto* c : {pullback, render_cmd}) {
        degree(c);
        c->add_option("--major", o.major, "MAC major p/q,r/s");
        c->add_option("--polygon", o.polygon, "SCM polygon p/q,r/s,...");
        c->add_option("--depth", o.depth, "Pullback stages")->check(CLI::NonNegativeNumber);
        c->add_option("--width", o.width, "SVG width in pixels")->check(CLI::PositiveNumber);
        c->add_flag("--labels", o.labels, "Label generator endpoints");
        output(c);
    }
    pullback->add_option("--format", o.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    render_cmd->add_option("--in", o.in, "LamDocument JSON file")->check(CLI::ExistingFile);

    auto* mac2scm = app.add_subcommand("mac2scm", "SCM polygon of a MAC major");
    auto* coroots_cmd = app.add_subcommand("coroots", "Co-roots of a MAC major");
    for (auto* c : {mac2scm, coroots_cmd}) {
        degree(c);
        c->add_option("--major", o.major, "MAC major p/q,r/s")->required();
        output(c);
    }
    auto* scm2mac = app.add_subcommand("scm2mac", "MAC major of an SCM polygon");
    degree(scm2mac);
    scm2mac->add_option("--polygon", o.polygon, "SCM polygon p/q,r/s,...")->required();
    output(scm2mac);

    auto* catalog_cmd = app.add_subcommand("catalog", "All MAC leaves up to a period");
    auto* check = app.add_subcommand("check", "Verification suites over the MAC catalog");
    for (auto* c : {catalog_cmd, check}) {
        degree(c);
        c->add_option("--max-period", o.max_period, "Largest period")->check(CLI::Range(1, 8));
        output(c);
    }
    std::vector<std::string> suites{"all"};
    suites.insert(suites.end(), suite_names().begin(), suite_names().end());
    check->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember(suites));
    check->add_option("--depth", o.depth, "Pullback depth for lamination suites")->check(CLI::NonNegativeNumber);
    check->add_option("--in", o.in, "Check invariance of a LamDocument instead")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    Emitter emit(o, out);
    try {
        if (*map) return cmd_map(o, emit);
        if (*orbit) return cmd_orbit(o, emit);
        if (*classify_cmd) return cmd_classify(o, emit);
        if (*pullback) return cmd_pullback(o, emit);
        if (*render_cmd) return cmd_render(o, emit);
        if (*mac2scm) return cmd_mac2scm(o, emit);
        if (*scm2mac) return cmd_scm2mac(o, emit);
        if (*coroots_cmd) return cmd_coroots(o, emit);
        if (*catalog_cmd) return cmd_catalog(o, emit);
        if (*check) return cmd_check(o, emit);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

} // namespace lamcli
