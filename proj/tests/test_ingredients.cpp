#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "triholes/ingredients.hpp"

using namespace triholes;

namespace {

struct CacheOff {
    CacheOff() {
        set_cache_root("");
        clear_memory_cache();
        reset_provider_strategies();
    }
    ~CacheOff() {
        set_cache_root("");
        clear_memory_cache();
        reset_provider_strategies();
    }
};

int class_count_with(const StructuredDesign& d, int alpha) {
    int n = 0;
    for (const auto& c : d.classes)
        if (c.alpha == alpha) ++n;
    return n;
}

}  // namespace

TEST_CASE("full triple systems") {
    CacheOff guard;

    SUBCASE("order seven is the classic seven-block system") {
        auto d = get_ts(7, 1);
        CHECK(d.blocks.size() == 7);
        CHECK(verify_its(d).ok);
    }
    SUBCASE("order three stacks copies of one block") {
        auto d = get_ts(3, 4);
        CHECK(d.blocks.size() == 4);
        CHECK(d.blocks.count(make_triple(0, 1, 2)) == 4);
    }
    SUBCASE("order five needs index divisible by three") {
        CHECK_THROWS_AS(get_ts(5, 2), InadmissibleError);
        auto d = get_ts(5, 6);
        CHECK(d.blocks.size() == 20);
    }
    SUBCASE("order two never works") { CHECK_THROWS_AS(get_ts(2, 6), InadmissibleError); }
    SUBCASE("degenerate orders are empty") {
        CHECK(get_ts(0, 1).blocks.size() == 0);
        CHECK(get_ts(1, 5).blocks.size() == 0);
    }
    SUBCASE("quasigroup route covers nine points") {
        auto d = get_ts(9, 1);
        CHECK(d.blocks.size() == 12);
    }
    SUBCASE("search route covers thirteen points") {
        auto d = get_ts(13, 1);
        CHECK(d.blocks.size() == 26);
    }
    SUBCASE("even orders scale a two-fold base") {
        auto d = get_ts(6, 4);
        CHECK(d.blocks.size() == 20);
        CHECK(d.its.lambda == 4);
    }
}

TEST_CASE("one-hole systems") {
    CacheOff guard;

    SUBCASE("hole equal to the order is empty") {
        auto d = get_one_hole_its(5, 5, 3);
        CHECK(d.blocks.size() == 0);
        CHECK(d.its.w() == 5);
        CHECK(verify_its(d).ok);
    }
    SUBCASE("seven points around a three-point hole") {
        auto d = get_one_hole_its(7, 3, 1);
        CHECK(d.blocks.size() == 6);
    }
    SUBCASE("pair count must divide by three") {
        CHECK_THROWS_AS(get_one_hole_its(7, 2, 2), InadmissibleError);
    }
    SUBCASE("small admissible cases certify") {
        CHECK(get_one_hole_its(6, 1, 2).blocks.size() == 10);
        CHECK(get_one_hole_its(9, 3, 2).blocks.size() == 22);
    }
    SUBCASE("hole too large for the order") {
        CHECK_THROWS_AS(get_one_hole_its(6, 3, 2), InadmissibleError);
    }
    SUBCASE("zero hole falls back to a full system") {
        auto d = get_one_hole_its(9, 0, 1);
        CHECK(d.blocks.size() == 12);
    }
}

TEST_CASE("systems with three-fold parallel classes") {
    CacheOff guard;

    SUBCASE("order three repeats one block") {
        auto d = get_three_resolvable_ts(3, 6);
        REQUIRE(d.classes.size() == 2);
        for (const auto& c : d.classes) {
            CHECK(c.alpha == 3);
            CHECK(c.blocks.count(make_triple(0, 1, 2)) == 3);
        }
    }
    SUBCASE("order seven at index three") {
        auto d = get_three_resolvable_ts(7, 3);
        REQUIRE(d.classes.size() == 3);
        for (const auto& c : d.classes) CHECK(c.blocks.size() == 7);
    }
    SUBCASE("order nine at index six") {
        auto d = get_three_resolvable_ts(9, 6);
        CHECK(d.classes.size() == 8);
    }
    SUBCASE("a single class when the count is one") {
        auto d = get_three_resolvable_ts(7, 1);
        CHECK(d.classes.size() == 1);
        CHECK(d.classes[0].blocks.size() == 7);
        auto e = get_three_resolvable_ts(4, 2);
        CHECK(e.classes.size() == 1);
    }
    SUBCASE("divisibility gate") {
        CHECK_THROWS_AS(get_three_resolvable_ts(6, 2), InadmissibleError);
    }
    SUBCASE("even order needs a class search") {
        auto d = get_three_resolvable_ts(4, 6);
        CHECK(d.classes.size() == 3);
        auto e = get_three_resolvable_ts(10, 2);
        CHECK(e.classes.size() == 3);
        CHECK(e.blocks.size() == 30);
    }
}

TEST_CASE("group divisible designs") {
    CacheOff guard;

    SUBCASE("three groups of two at index two") {
        auto d = get_gdd(2, 3, 0, 2);
        CHECK(d.blocks.size() == 8);
        CHECK(d.gdd.groups.size() == 3);
    }
    SUBCASE("five groups of three with a stub point") {
        auto d = get_gdd(3, 5, 1, 2);
        CHECK(d.blocks.size() == 70);
    }
    SUBCASE("oversized last group is rejected") {
        CHECK_THROWS_AS(get_gdd(2, 3, 5, 2), InadmissibleError);
    }
    SUBCASE("embedded classed design at index six") {
        auto d = get_gdd(2, 4, 1, 6);
        CHECK(d.blocks.size() == 64);
        REQUIRE(d.classes.size() == 5);
        CHECK(class_count_with(d, 3) == 1);
        CHECK(class_count_with(d, 6) == 4);
    }
    SUBCASE("two equal groups plus an equal stub") {
        auto d = get_gdd(2, 2, 2, 1);
        CHECK(d.blocks.size() == 4);
    }
    SUBCASE("single group shapes are empty") {
        CHECK(get_gdd(5, 1, 0, 2).blocks.size() == 0);
        CHECK(get_gdd(0, 0, 4, 2).blocks.size() == 0);
    }
}

TEST_CASE("three-group designs with two holes") {
    CacheOff guard;

    SUBCASE("unit index base cases certify") {
        auto d = get_igdd_3part(6, 2, 1, 1);
        CHECK(d.gdd.v == 18);
        CHECK(d.gdd.hole1.size() == 6);
        CHECK(d.gdd.hole2.size() == 3);
        CHECK(verify_gdd_igdd(d).ok);
    }
    SUBCASE("higher index stacks copies") {
        auto d = get_igdd_3part(7, 2, 2, 2);
        CHECK(d.gdd.lambda == 2);
        CHECK(verify_gdd_igdd(d).ok);
    }
    SUBCASE("hole order is enforced") {
        CHECK_THROWS_AS(get_igdd_3part(6, 1, 2, 1), InadmissibleError);
    }
    SUBCASE("groups must fit both holes") {
        CHECK_THROWS_AS(get_igdd_3part(4, 2, 1, 1), InadmissibleError);
    }
}

TEST_CASE("frames") {
    CacheOff guard;

    SUBCASE("singleton groups on seven points") {
        auto d = get_frame(1, 7, 2);
        REQUIRE(d.classes.size() == 7);
        for (const auto& c : d.classes) CHECK(c.alpha == 1);
        CHECK(verify_classes(d, ClassKind::frame).ok);
    }
    SUBCASE("pairs on four groups") {
        auto d = get_frame(2, 4, 2);
        CHECK(d.classes.size() == 8);
        CHECK(d.blocks.size() == 16);
    }
    SUBCASE("too few groups") { CHECK_THROWS_AS(get_frame(3, 3, 2), InadmissibleError); }
    SUBCASE("divisibility by three") { CHECK_THROWS_AS(get_frame(2, 5, 2), InadmissibleError); }
    SUBCASE("pairs on seven groups") {
        auto d = get_frame(2, 7, 2);
        CHECK(d.classes.size() == 14);
        CHECK(d.blocks.size() == 56);
    }
}

TEST_CASE("transversal designs") {
    CacheOff guard;

    SUBCASE("prime order five") {
        auto d = get_td5(5);
        CHECK(d.td_blocks.size() == 25);
        CHECK(verify_td(d).ok);
    }
    SUBCASE("prime power orders") {
        CHECK(get_td5(4).td_blocks.size() == 16);
        CHECK(get_td5(7).td_blocks.size() == 49);
        CHECK(get_td5(8).td_blocks.size() == 64);
        CHECK(get_td5(9).td_blocks.size() == 81);
    }
    SUBCASE("excluded orders") {
        CHECK_THROWS_AS(get_td5(6), InadmissibleError);
        CHECK_THROWS_AS(get_td5(10), InadmissibleError);
        CHECK_THROWS_AS(get_td5(3), InadmissibleError);
    }
    SUBCASE("order twelve has no route here") { CHECK_THROWS_AS(get_td5(12), NoPathError); }
    SUBCASE("product route for order twenty") {
        auto d = get_td5(20);
        CHECK(d.td_blocks.size() == 400);
        CHECK(verify_td(d).ok);
    }
    SUBCASE("deterministic output") {
        auto a = get_td5(5);
        clear_memory_cache();
        auto b = get_td5(5);
        CHECK(a.td_blocks == b.td_blocks);
    }
}

TEST_CASE("unit-index eframes") {
    CacheOff guard;

    SUBCASE("four full groups with a two-point tail") {
        auto d = get_eframe31(4, 2);
        CHECK(d.gdd.v == 26);
        REQUIRE(d.classes.size() == 5);
        CHECK(class_count_with(d, 3) == 4);
        CHECK(class_count_with(d, 1) == 1);
        CHECK(verify_classes(d, ClassKind::eframe).ok);
    }
    SUBCASE("five full groups is excluded") {
        CHECK_THROWS_AS(get_eframe31(5, 2), InadmissibleError);
    }
    SUBCASE("tail size is constrained") {
        CHECK_THROWS_AS(get_eframe31(4, 6), std::invalid_argument);
        CHECK_THROWS_AS(get_eframe31(8, 8), InadmissibleError);
    }
}

TEST_CASE("unit-index systems with two holes") {
    CacheOff guard;

    SUBCASE("nine points, two triple holes") {
        auto d = get_lambda1_its(9, 3, 3);
        CHECK(d.blocks.size() == 10);
        CHECK(verify_its(d).ok);
    }
    SUBCASE("order bound") { CHECK_THROWS_AS(get_lambda1_its(7, 3, 3), InadmissibleError); }
    SUBCASE("thirteen points, two triple holes") {
        auto d = get_lambda1_its(13, 3, 3);
        CHECK(d.blocks.size() == 24);
    }
    SUBCASE("everything must be odd") {
        CHECK_THROWS_AS(get_lambda1_its(8, 3, 3), InadmissibleError);
        CHECK_THROWS_AS(get_lambda1_its(9, 2, 3), InadmissibleError);
    }
}

TEST_CASE("orbit development") {
    SUBCASE("embedded five-group eframe expands to seventy blocks") {
        const cat::OrbitEntry* entry = nullptr;
        for (const auto& o : cat::orbit_entries())
            if (o.kind == cat::OrbitKind::Eframe && o.h == 3 && o.n == 5 && o.m == 1) entry = &o;
        REQUIRE(entry != nullptr);
        auto d = develop_orbit(*entry);
        CHECK(d.blocks.size() == 70);
        REQUIRE(d.classes.size() == 6);
        CHECK(d.classes[0].alpha == 1);
        CHECK(d.classes[0].group == 5);
    }
    SUBCASE("identity action keeps blocks") {
        BaseBlockOrbit o;
        o.kind = cat::OrbitKind::GddWithClasses;
        o.lambda = 1;
        o.npoints = 3;
        o.groups = {{0}, {1}, {2}};
        o.perm = {0, 1, 2};
        o.first_len = 1;
        o.n_first = 0;
        o.joint_first = false;
        o.first_alpha = 1;
        o.pre_powers = {0};
        o.n_translates = 1;
        o.rest_alpha = 3;
        o.base = {{0, 1, 2}};
        auto d = develop_orbit(o);
        CHECK(d.blocks.size() == 1);
        CHECK(d.blocks.count(make_triple(0, 1, 2)) == 1);
    }
    SUBCASE("classed design over five pair groups") {
        const cat::OrbitEntry* entry = nullptr;
        for (const auto& o : cat::orbit_entries())
            if (o.kind == cat::OrbitKind::GddWithClasses && o.n == 5) entry = &o;
        REQUIRE(entry != nullptr);
        auto d = develop_orbit(*entry);
        CHECK(d.blocks.size() == 100);
        REQUIRE(!d.classes.empty());
        CHECK(d.classes[0].alpha == 3);
        CHECK(d.classes[0].group == static_cast<int>(d.gdd.groups.size()) - 1);
        CHECK(d.classes[0].blocks.size() == 10);
    }
}

TEST_CASE("catalog lookups") {
    CacheOff guard;

    SUBCASE("embedded holey systems are present") {
        auto a = catalog_lookup(IngredientKey::its(14, 2, 5, 4, 5, 2, 3));
        REQUIRE(a.has_value());
        CHECK(a->its.w() == 5);
        CHECK(a->its.y() == 5);
        auto b = catalog_lookup(IngredientKey::its(13, 6, 5, 2, 0, 0, 0));
        REQUIRE(b.has_value());
        auto c = catalog_lookup(IngredientKey::its(11, 3, 3, 3, 0, 0, 0));
        REQUIRE(c.has_value());
        CHECK(c->blocks.size() == 49);
    }
    SUBCASE("unknown keys are absent") {
        CHECK(!catalog_lookup(IngredientKey::its(1000000, 2, 5, 4, 0, 0, 0)).has_value());
        CHECK(!catalog_lookup(IngredientKey::gdd(2, 7, 1, 6)).has_value());
        CHECK(!catalog_lookup(IngredientKey::td5(5)).has_value());
    }
    SUBCASE("embedded eframes are classed") {
        auto d = catalog_lookup(IngredientKey::eframe(6, 5, 5, 2));
        REQUIRE(d.has_value());
        CHECK(d->gdd.v == 35);
        CHECK(class_count_with(*d, 1) == 5);
        CHECK(class_count_with(*d, 6) == 5);
        CHECK(catalog_lookup(IngredientKey::eframe(6, 5, 8, 2)).has_value());
        CHECK(catalog_lookup(IngredientKey::eframe(3, 6, 1, 2)).has_value());
        CHECK(catalog_lookup(IngredientKey::eframe(3, 6, 2, 2)).has_value());
    }
}

TEST_CASE("index scaling") {
    CacheOff guard;

    SUBCASE("copies of a full system") {
        auto d = scale_copies(get_ts(7, 1), 3);
        CHECK(d.its.lambda == 3);
        CHECK(d.blocks.size() == 21);
        CHECK(verify_its(d).ok);
    }
    SUBCASE("an eframe doubles into an even-index eframe") {
        auto base = get_eframe31(4, 2);
        auto d = eframe_multiply(base, 2);
        CHECK(d.gdd.lambda == 2);
        CHECK(verify_gdd_igdd(d).ok);
        CHECK(verify_classes(d, ClassKind::eframe).ok);
        CHECK(class_count_with(d, 6) == 4);
        CHECK(class_count_with(d, 1) == 2);
    }
    SUBCASE("multiply guards its input") {
        CHECK_THROWS_AS(eframe_multiply(get_ts(7, 1), 2), std::invalid_argument);
        CHECK_THROWS_AS(eframe_multiply(get_eframe31(4, 2), 3), std::invalid_argument);
    }
}

TEST_CASE("disk cache") {
    CacheOff guard;
    auto root = std::filesystem::temp_directory_path() / "triholes-cache-test";
    std::filesystem::remove_all(root);
    set_cache_root(root.string());

    auto first = get_ts(13, 1);
    std::string first_json = design_to_json_string(first);
    clear_memory_cache();
    auto second = get_ts(13, 1);  // disk hit
    CHECK(design_to_json_string(second) == first_json);

    IngredientKey key = IngredientKey::ts(13, 1);
    auto path = root / key.filename();
    CHECK(std::filesystem::exists(path));

    SUBCASE("corrupt entries are rebuilt") {
        {
            std::ofstream out(path, std::ios::trunc);
            out << "not a design";
        }
        clear_memory_cache();
        auto third = get_ts(13, 1);
        CHECK(verify_its(third).ok);
        CHECK(third.blocks.size() == 26);
    }
    SUBCASE("wrong-shape entries are rebuilt") {
        {
            std::ofstream out(path, std::ios::trunc);
            out << design_to_json_string(get_ts(9, 1));
        }
        clear_memory_cache();
        auto third = get_ts(13, 1);
        CHECK(third.blocks.size() == 26);
    }
    std::filesystem::remove_all(root);
}

TEST_CASE("fixed seeds make results repeatable") {
    CacheOff guard;
    auto a = get_lambda1_its(9, 3, 3);
    clear_memory_cache();
    auto b = get_lambda1_its(9, 3, 3);
    CHECK(a.blocks == b.blocks);
}

TEST_CASE("strategy overrides") {
    CacheOff guard;
    auto& strat = provider_strategy("TS");
    strat.tactics.clear();
    strat.tactics.push_back({ProviderTactic::Kind::search, 1, 1, 1});
    CHECK_THROWS_AS(get_ts(13, 1), NoPathError);
    reset_provider_strategies();
    CHECK(get_ts(13, 1).blocks.size() == 26);
}
