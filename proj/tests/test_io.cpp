#include <doctest.h>

#include "lam/io.hpp"
#include "support.hpp"

using namespace lam;
using namespace lam::test;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_lam_json(text);
    } catch (const DomainError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("minimal document round trip") {
    const std::string text = R"({"degree":2,"leaves":[["1/3","2/3"]]})";
    auto doc = parse_lam_json(text);
    CHECK(doc.degree == 2);
    REQUIRE(doc.leaves.size() == 1);
    CHECK(doc.leaves[0].leaf == L("1/3", "2/3"));
    CHECK_FALSE(doc.leaves[0].depth.has_value());
    CHECK(write_lam_json(doc) == text);
    CHECK(parse_lam_json(write_lam_json(doc, true)).lamination().leaf_list() == doc.lamination().leaf_list());
}

TEST_CASE("strict validation with locations") {
    CHECK(error_of(R"({"degree":2,"leaves":[["2/6","2/3"]]})").find("$.leaves[0][0]") != std::string::npos);
    CHECK(error_of(R"({"degree":2,"leaves":[["1/3","3/2"]]})").find("$.leaves[0][1]") != std::string::npos);
    CHECK_FALSE(error_of(R"({"degree":1,"leaves":[]})").empty());
    CHECK_FALSE(error_of(R"({"degree":2,"leaves":[],"extra":1})").empty());
    CHECK_FALSE(error_of(R"({"degree":2})").empty());
    CHECK_FALSE(error_of("not json").empty());
    CHECK_FALSE(error_of(R"({"degree":2,"leaves":[["1/3","1/3"]]})").empty());

    auto cross = error_of(R"({"degree":2,"leaves":[["1/3","2/3"],["0","1/2"]]})");
    CHECK(cross.find("cross") != std::string::npos);
    CHECK(cross.find("0") != std::string::npos);
    CHECK(cross.find("1") != std::string::npos);
}

TEST_CASE("depths, polygons and portrait survive") {
    auto r = canonical_mac_lamination(2, L("1/7", "4/7"), 3);
    auto doc = document_from(r);
    CHECK(doc.portrait == std::vector<Leaf>{L("1/7", "9/14")});
    CHECK(std::find(doc.polygons.begin(), doc.polygons.end(), P({"1/7", "2/7", "4/7"})) != doc.polygons.end());
    auto text = write_lam_json(doc);
    auto back = parse_lam_json(text);
    CHECK(write_lam_json(back) == text);
    CHECK(back.lamination().leaves() == r.lamination.leaves());
    CHECK(back.metadata == doc.metadata);
}

TEST_CASE("canonical order does not depend on input order") {
    auto a = parse_lam_json(R"({"degree":2,"leaves":[["5/6","1/6",1],["1/3","2/3",0]]})");
    auto b = parse_lam_json(R"({"degree":2,"leaves":[["1/3","2/3",0],["1/6","5/6",1]]})");
    CHECK(write_lam_json(a) == write_lam_json(b));
}

TEST_CASE("JSON helpers") {
    CHECK(to_json(A("1/3")) == "1/3");
    CHECK(to_json(L("2/3", "1/3")) == nlohmann::json::array({"1/3", "2/3"}));
    auto c = to_json(classify(2, P({"1/7", "2/7", "4/7"})));
    CHECK(c["tag"] == "Rotational");
    CHECK(c["rotation"] == "1/3");
}
