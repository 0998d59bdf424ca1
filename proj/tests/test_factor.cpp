#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "triholes/factor.hpp"

using namespace triholes;

namespace {

MultiGraph sum_factors(int n, const Factorization& f) {
    MultiGraph out(n);
    for (const auto& g : f.factors)
        for (int x = 0; x < n; ++x)
            for (const auto& [y, m] : g.neighbors(x))
                if (y > x) out.add_edge(x, y, m);
    return out;
}

bool regular_of(const MultiGraph& g, int d) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

int used_colors(const EdgeColoring& c) {
    std::set<int> s;
    for (const auto& e : c.edges) s.insert(e.color);
    return static_cast<int>(s.size());
}

EdgeColoring from_factors(int n, const Factorization& f) {
    EdgeColoring col;
    col.n = n;
    col.t = static_cast<int>(f.factors.size());
    for (int c = 0; c < col.t; ++c)
        for (int x = 0; x < n; ++x)
            for (const auto& [y, m] : f.factors[c].neighbors(x))
                if (y > x)
                    for (int i = 0; i < m; ++i) col.edges.push_back({x, y, c});
    return col;
}

}  // namespace

TEST_CASE("a double edge splits into two matchings") {
    MultiGraph g(2);
    g.add_edge(0, 1, 2);
    auto f = one_factorize_bipartite(g, {0, 1});
    REQUIRE(f.factors.size() == 2);
    for (const auto& m : f.factors) CHECK(m.multiplicity(0, 1) == 1);
}

TEST_CASE("doubled complete bipartite graph gives six matchings") {
    MultiGraph g(6);
    std::vector<int> side{0, 0, 0, 1, 1, 1};
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) g.add_edge(a, b, 2);
    auto f = one_factorize_bipartite(g, side);
    REQUIRE(f.factors.size() == 6);
    for (const auto& m : f.factors) {
        CHECK(m.edge_count() == 3);
        CHECK(regular_of(m, 1));
    }
    CHECK(sum_factors(6, f) == g);
}

TEST_CASE("bipartite factorization rejects bad input") {
    MultiGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(one_factorize_bipartite(path, {0, 1, 0}), std::invalid_argument);

    MultiGraph inside(2);
    inside.add_edge(0, 1);
    CHECK_THROWS_AS(one_factorize_bipartite(inside, {0, 0}), std::invalid_argument);
}

TEST_CASE("doubled square splits into two spanning 2-factors") {
    MultiGraph g(4);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 2);
    g.add_edge(3, 0, 2);
    auto f = two_factorize(g);
    REQUIRE(f.factors.size() == 2);
    for (const auto& m : f.factors) CHECK(regular_of(m, 2));
    CHECK(sum_factors(4, f) == g);
}

TEST_CASE("six regular circulant splits into three 2-factors") {
    MultiGraph g(11);
    for (int v = 0; v < 11; ++v)
        for (int d = 1; d <= 3; ++d) g.add_edge(v, (v + d) % 11);
    auto f = two_factorize(g);
    REQUIRE(f.factors.size() == 3);
    for (const auto& m : f.factors) CHECK(regular_of(m, 2));
    CHECK(sum_factors(11, f) == g);
}

TEST_CASE("odd regular graphs cannot 2-factorize") {
    MultiGraph k4(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
    CHECK_THROWS_AS(two_factorize(k4), std::invalid_argument);
}

TEST_CASE("triangle takes three colors") {
    MultiGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    auto col = proper_color(g);
    CHECK(col.proper());
    CHECK(col.t == 3);
    CHECK(used_colors(col) == 3);
}

TEST_CASE("triangle with one doubled edge fits four colors") {
    MultiGraph g(3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    auto col = proper_color(g);
    CHECK(col.proper());
    CHECK(used_colors(col) <= 4);
}

TEST_CASE("fully doubled triangle stays within the palette bound") {
    MultiGraph g(3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 2);
    g.add_edge(0, 2, 2);
    auto col = proper_color(g);
    CHECK(col.proper());
    CHECK(col.t == 6);
}

TEST_CASE("random multigraphs color within max degree plus max multiplicity") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + static_cast<int>(rng() % 11);
        MultiGraph g(n);
        int tries = 3 * n;
        for (int e = 0; e < tries; ++e) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b) continue;
            if (g.multiplicity(a, b) >= 3) continue;
            if (g.degree(a) >= 12 || g.degree(b) >= 12) continue;
            g.add_edge(a, b);
        }
        if (g.edge_count() == 0) continue;
        auto col = proper_color(g);
        CHECK(col.proper());
        CHECK(col.t <= g.max_degree() + g.max_multiplicity());
        CHECK(static_cast<long long>(col.edges.size()) == g.edge_count());
    }
}

TEST_CASE("equitable recoloring balances a path system") {
    EdgeColoring col;
    col.n = 6;
    col.t = 2;
    col.edges = {{0, 1, 0}, {2, 3, 0}, {4, 5, 0}, {1, 2, 1}};
    auto out = equitable_recolor(col);
    CHECK(out.proper());
    CHECK(out.t == 2);
    auto sizes = out.class_sizes();
    CHECK(sizes[0] == 2);
    CHECK(sizes[1] == 2);
}

TEST_CASE("already equitable colorings keep their size multiset") {
    EdgeColoring col;
    col.n = 6;
    col.t = 2;
    for (int i = 0; i < 6; ++i) col.edges.push_back({i, (i + 1) % 6, i % 2});
    auto out = equitable_recolor(col);
    auto a = col.class_sizes();
    auto b = out.class_sizes();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(out.proper());
}

TEST_CASE("unbalanced palettes settle to spread one") {
    MultiGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    auto out = equitable_recolor(proper_color(g));
    CHECK(out.proper());
    auto sizes = out.class_sizes();
    CHECK(*std::max_element(sizes.begin(), sizes.end()) -
              *std::min_element(sizes.begin(), sizes.end()) <=
          1);
}

TEST_CASE("merging three matchings into one class is 3-proper") {
    MultiGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    auto col = proper_color(g);
    auto merged = merge_to_3proper(col);
    CHECK(merged.t == 1);
    for (int x = 0; x < 3; ++x) CHECK(merged.eta(x, 0) <= 3);
}

TEST_CASE("merging six equitable classes lands within the size window") {
    MultiGraph g(6);
    std::vector<int> side{0, 0, 0, 1, 1, 1};
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) g.add_edge(a, b, 2);
    auto col = from_factors(6, one_factorize_bipartite(g, side));
    REQUIRE(col.t == 6);
    auto merged = merge_to_3proper(col);
    CHECK(merged.t == 2);
    auto sizes = merged.class_sizes();
    CHECK(sizes[0] == 9);
    CHECK(sizes[1] == 9);
    for (int x = 0; x < 6; ++x)
        for (int c = 0; c < 2; ++c) CHECK(merged.eta(x, c) <= 3);
}

TEST_CASE("merging nine classes keeps eta within three and spread within two") {
    MultiGraph g(18);
    std::vector<int> side(18, 0);
    for (int i = 9; i < 18; ++i) side[i] = 1;
    for (int a = 0; a < 9; ++a)
        for (int b = 9; b < 18; ++b) g.add_edge(a, b);
    auto col = from_factors(18, one_factorize_bipartite(g, side));
    REQUIRE(col.t == 9);
    auto merged = merge_to_3proper(col);
    CHECK(merged.t == 3);
    auto sizes = merged.class_sizes();
    CHECK(*std::max_element(sizes.begin(), sizes.end()) -
              *std::min_element(sizes.begin(), sizes.end()) <=
          2);
    for (int x = 0; x < 18; ++x)
        for (int c = 0; c < 3; ++c) CHECK(merged.eta(x, c) <= 3);
    CHECK(merged.edges.size() == col.edges.size());
}

TEST_CASE("merge rejects palettes not divisible by three") {
    EdgeColoring col;
    col.n = 4;
    col.t = 2;
    col.edges = {{0, 1, 0}, {2, 3, 1}};
    CHECK_THROWS_AS(merge_to_3proper(col), std::invalid_argument);
}

TEST_CASE("full leave keeps every pair") {
    auto r = near_regular_decomposable(5, 30);
    CHECK(r.leave.edge_count() == 30);
    CHECK(r.triangles.empty());
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK(r.leave.multiplicity(i, j) == 3);
}

TEST_CASE("triple cover of seven points decomposes with empty leave") {
    auto r = near_regular_decomposable(7, 0);
    CHECK(r.leave.edge_count() == 0);
    CHECK(r.triangles.size() == 21);
    std::map<std::pair<int, int>, int> got;
    for (const auto& [t, c] : r.triangles.entries()) {
        got[{t[0], t[1]}] += c;
        got[{t[0], t[2]}] += c;
        got[{t[1], t[2]}] += c;
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) CHECK(got[{i, j}] == 3);
}

TEST_CASE("nine point order with a nine edge leave") {
    auto r = near_regular_decomposable(9, 9);
    CHECK(r.leave.edge_count() == 9);
    CHECK(r.leave.max_multiplicity() <= 3);
    int dmin = 99, dmax = -1;
    for (int v = 0; v < 9; ++v) {
        dmin = std::min(dmin, r.leave.degree(v));
        dmax = std::max(dmax, r.leave.degree(v));
    }
    CHECK(dmax - dmin <= 2);
    CHECK(r.triangles.size() == 33);
    std::map<std::pair<int, int>, int> got;
    for (const auto& [t, c] : r.triangles.entries()) {
        got[{t[0], t[1]}] += c;
        got[{t[0], t[2]}] += c;
        got[{t[1], t[2]}] += c;
    }
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j)
            CHECK(got[{i, j}] + r.leave.multiplicity(i, j) == 3);
}

TEST_CASE("leave bounds are enforced") {
    CHECK_THROWS_AS(near_regular_decomposable(4, 0), InadmissibleError);
    CHECK_THROWS_AS(near_regular_decomposable(7, 1), InadmissibleError);
}
