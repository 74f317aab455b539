#include <catch2/catch_amalgamated.hpp>

#include "bifrm/io.hpp"

using namespace bifrm;

TEST_CASE("poset json round trip") {
  json j = json::parse(R"({"elements": ["a","b","c"], "leq": [["a","b"],["b","c"]]})");
  Poset p = poset_from_json(j);
  REQUIRE(p.leq(0, 2));  // closure taken on load
  Poset back = poset_from_json(poset_to_json(p));
  REQUIRE(back.isomorphic_to(p));
}

TEST_CASE("frame json") {
  SECTION("from a poset, via the downset lattice") {
    json j = json::parse(R"({"poset": {"elements": ["x","y"], "leq": []}})");
    REQUIRE(frame_from_json(j)->size() == 4);
  }
  SECTION("explicit lattices are validated") {
    json diamond = json::parse(
        R"({"elements": ["0","a","b","c","1"],
            "leq": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]})");
    REQUIRE_THROWS_AS(frame_from_json(diamond), NotDistributive);
  }
}

TEST_CASE("presentation expressions") {
  FramePtr lp = Frame::chain(3);  // labels {}, {p0}, {p0,p1}
  FramePtr lm = Frame::two();     // labels 0, 1
  CoproductResult cp = coproduct(lp, lm);
  PresentationParser parser(lp, lm, cp);
  SECTION("constants and generators") {
    REQUIRE(parser.parse("0") == cp.frame->bot());
    REQUIRE(parser.parse("1") == cp.frame->top());
    REQUIRE(parser.parse("{p0}") == cp.inj_a.img[1]);
  }
  SECTION("meets, joins, parentheses") {
    int a = cp.inj_a.img[1];
    REQUIRE(parser.parse("{p0} & 1") == a);
    REQUIRE(parser.parse("{p0} | 0") == a);
    REQUIRE(parser.parse("({p0} | {p0,p1}) & {p0}") == a);
  }
  SECTION("side suffixes disambiguate") {
    // both sides share the label "{}" after relabeling; use explicit frames
    FramePtr c1 = Frame::chain(3);
    CoproductResult cp2 = coproduct(c1, c1);
    PresentationParser p2(c1, c1, cp2);
    REQUIRE(p2.parse("{p0}+") == cp2.inj_a.img[1]);
    REQUIRE(p2.parse("{p0}-") == cp2.inj_b.img[1]);
    REQUIRE_THROWS_AS(p2.parse("{p0}"), InputError);
  }
  SECTION("errors") {
    REQUIRE_THROWS_AS(parser.parse("("), InputError);
    REQUIRE_THROWS_AS(parser.parse("nosuch"), InputError);
    REQUIRE_THROWS_AS(parser.parse("{p0} } junk"), InputError);
  }
}

TEST_CASE("biframe json builds the presented biframe") {
  // two 3-chains whose middle generators are forced complementary: the main
  // component collapses from the 6-element grid to the 4-element Boolean frame
  json j2 = json::parse(R"({
    "Lp": {"poset": {"elements": ["lo","hi"], "leq": [["lo","hi"]]}},
    "Lm": {"poset": {"elements": ["lo","hi"], "leq": [["lo","hi"]]}},
    "relations": [["{lo}+ & {lo}-", "0"], ["1", "{lo}+ | {lo}-"]]})");
  BiframePtr b2 = biframe_from_json(j2);
  REQUIRE(b2->lp()->size() == 3);
  REQUIRE(b2->l()->size() == 4);
  REQUIRE(b2->l()->isomorphic_to(*Frame::boolean(2)));
  REQUIRE(is_finitary(b2));
  // a relation collapsing a component is rejected
  json j3 = json::parse(R"({
    "Lp": {"poset": {"elements": ["lo","hi"], "leq": [["lo","hi"]]}},
    "Lm": {"poset": {"elements": ["g"], "leq": []}},
    "relations": [["1", "0"]]})");
  REQUIRE_THROWS_AS(biframe_from_json(j3), InjectionCollapsed);
}

TEST_CASE("dframe json applies closure normalization and reports additions") {
  json j = json::parse(R"({
    "Lp": {"poset": {"elements": ["t"], "leq": []}},
    "Lm": {"poset": {"elements": ["t"], "leq": []}},
    "con": [["{t}", "{}"]], "tot": [["{t}", "{t}"]]})");
  DFrameLoad load = dframe_from_json(j);
  REQUIRE(!load.normalization.added_con.empty());  // downset closure adds ({},{})
  REQUIRE(load.dframe->con(0, 0));
}

TEST_CASE("bispace json closes the families and reports additions") {
  json j = json::parse(R"({"points": ["x","y"], "tauP": [["x"],["y"]], "tauM": []})");
  BispaceLoad load = bispace_from_json(j);
  REQUIRE(load.space->tauP().size() == 4);
  REQUIRE(load.added_p.size() == 2);  // gains the empty set and the union
  json back = bispace_to_json(*load.space);
  BispaceLoad again = bispace_from_json(back);
  REQUIRE(*again.space == *load.space);
  REQUIRE(again.added_p.empty());
}

TEST_CASE("dot export contains the cover edges") {
  std::string dot = frame_to_dot(Frame::chain(3));
  REQUIRE(dot.find("digraph") != std::string::npos);
  REQUIRE(dot.find("->") != std::string::npos);
}

TEST_CASE("kind detection") {
  REQUIRE(detect_kind(json{{"points", json::array()}}) == "bispace");
  REQUIRE(detect_kind(json{{"Lp", 1}, {"Lm", 2}, {"con", 3}}) == "dframe");
  REQUIRE(detect_kind(json{{"Lp", 1}, {"Lm", 2}}) == "biframe");
  REQUIRE(detect_kind(json{{"poset", 1}}) == "frame");
  REQUIRE(detect_kind(json{{"elements", 1}}) == "poset");
  REQUIRE_THROWS_AS(detect_kind(json{{"other", 1}}), InputError);
}
