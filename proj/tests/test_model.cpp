#include "doctest.h"
#include "triholes/model.hpp"

using namespace triholes;

namespace {

BlockMultiset fano() {
    BlockMultiset b;
    b.add(make_triple(0, 1, 2));
    b.add(make_triple(0, 3, 4));
    b.add(make_triple(0, 5, 6));
    b.add(make_triple(1, 3, 5));
    b.add(make_triple(1, 4, 6));
    b.add(make_triple(2, 3, 6));
    b.add(make_triple(2, 4, 5));
    return b;
}

}  // namespace

TEST_CASE("triples sort and multisets count with multiplicity") {
    Triple t = make_triple(5, 1, 3);
    CHECK(t == Triple{1, 3, 5});
    BlockMultiset b;
    b.add(t, 2);
    b.add(make_triple(0, 1, 2));
    CHECK(b.count(t) == 2);
    CHECK(b.size() == 3);
    b.remove(t);
    CHECK(b.count(t) == 1);
    CHECK(b.size() == 2);
}

TEST_CASE("pair targets and block counts") {
    ItsSpec a{11, 2, {{0, 1, 2}, {3, 4}}};
    CHECK(pair_target_count(a) == 51);
    CHECK(block_count(a) == 34);

    ItsSpec b{11, 3, {{0, 1, 2}, {3, 4, 5}}};
    CHECK(block_count(b) == 49);

    ItsSpec c{6, 6, {{0, 1}, {2, 3}}};
    CHECK(block_count(c) == 26);

    ItsSpec bad{7, 1, {{0, 1, 2}, {3, 4}}};
    CHECK_THROWS_AS(block_count(bad), InadmissibleError);
}

TEST_CASE("three holes subtract pairwise overlaps") {
    ItsSpec s{7, 2, {{0, 1}, {2, 3}, {1, 2}}};
    CHECK(s.z1() == 1);
    CHECK(s.z2() == 1);
    CHECK(pair_target_count(s) == 18);
    CHECK(block_count(s) == 12);
}

TEST_CASE("verifier accepts a valid system and rejects tampering") {
    StructuredDesign d;
    d.kind = DesignKind::its;
    d.its = ItsSpec{7, 1, {{0}, {1}}};
    d.blocks = fano();
    CHECK(static_cast<bool>(verify_its(d)));

    StructuredDesign missing = d;
    missing.blocks.remove(make_triple(0, 1, 2));
    CHECK_FALSE(static_cast<bool>(verify_its(missing)));

    StructuredDesign doubled = d;
    doubled.blocks.add(make_triple(0, 1, 2));
    auto r = verify_its(doubled);
    CHECK_FALSE(static_cast<bool>(r));
    CHECK(r.observed > r.expected);
}

TEST_CASE("group divisible verifier") {
    StructuredDesign d;
    d.kind = DesignKind::gdd;
    d.gdd.v = 9;
    d.gdd.lambda = 1;
    d.gdd.groups = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    int latin[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d.blocks.add(make_triple(r, 3 + c, 6 + latin[r][c]));
    CHECK(static_cast<bool>(verify_gdd_igdd(d)));

    d.blocks.remove(make_triple(0, 3, 6));
    CHECK_FALSE(static_cast<bool>(verify_gdd_igdd(d)));
}

TEST_CASE("two disjoint holes read as groups plus singletons") {
    StructuredDesign d;
    d.kind = DesignKind::its;
    d.its = ItsSpec{7, 2, {{0, 1, 2}, {3, 4}}};
    auto g = its_to_gdd(d);
    REQUIRE(g.gdd.groups.size() == 4);
    CHECK(g.gdd.groups[0] == std::vector<int>{0, 1, 2});
    CHECK(g.gdd.groups[1] == std::vector<int>{3, 4});
    CHECK(g.gdd.groups[2] == std::vector<int>{5});
    CHECK(g.gdd.groups[3] == std::vector<int>{6});
}

TEST_CASE("resolution classes verify point coverage") {
    StructuredDesign d;
    d.kind = DesignKind::resolvable;
    d.gdd.v = 3;
    d.gdd.lambda = 3;
    d.gdd.groups = {{0, 1, 2}};
    for (int i = 0; i < 3; ++i) {
        DesignClass c;
        c.label = "pc" + std::to_string(i);
        c.alpha = 1;
        c.blocks.add(make_triple(0, 1, 2));
        d.blocks.add(make_triple(0, 1, 2));
        d.classes.push_back(c);
    }
    CHECK(static_cast<bool>(verify_classes(d, ClassKind::alpha_resolvable)));

    d.classes[0].alpha = 2;
    CHECK_FALSE(static_cast<bool>(verify_classes(d, ClassKind::alpha_resolvable)));
}

TEST_CASE("json serialization round trips") {
    StructuredDesign d;
    d.kind = DesignKind::its;
    d.its = ItsSpec{7, 1, {{0}, {1}}};
    d.blocks = fano();
    d.trace.push_back("built by hand");
    d.trace.push_back("verified");

    auto text = design_to_json_string(d);
    auto back = design_from_json_string(text);
    CHECK(back.kind == DesignKind::its);
    CHECK(back.its.v == 7);
    CHECK(back.its.lambda == 1);
    CHECK(back.its.holes == d.its.holes);
    CHECK(back.blocks == d.blocks);
    CHECK(back.trace == d.trace);

    CHECK(design_to_json_string(back) == text);
}

TEST_CASE("json keeps class structure") {
    StructuredDesign d;
    d.kind = DesignKind::resolvable;
    d.gdd.v = 3;
    d.gdd.lambda = 3;
    d.gdd.groups = {{0, 1, 2}};
    for (int i = 0; i < 3; ++i) {
        DesignClass c;
        c.label = "pc" + std::to_string(i);
        c.alpha = 1;
        c.blocks.add(make_triple(0, 1, 2));
        d.blocks.add(make_triple(0, 1, 2));
        d.classes.push_back(c);
    }
    auto back = design_from_json_string(design_to_json_string(d));
    REQUIRE(back.classes.size() == 3);
    CHECK(back.classes[1].label == "pc1");
    CHECK(back.classes[1].alpha == 1);
    CHECK(back.classes[1].blocks.size() == 1);
    CHECK(back.blocks.size() == 3);
    CHECK(static_cast<bool>(verify_classes(back, ClassKind::alpha_resolvable)));
}
