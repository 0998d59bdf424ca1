#pragma once

#include <cstdint>

#include "triholes/model.hpp"

namespace triholes {

struct ColoredEdge {
    int u = 0;
    int v = 0;
    int color = -1;
};

struct EdgeColoring {
    int n = 0;
    int t = 0;  // palette size
    std::vector<ColoredEdge> edges;

    // eta_c(x): number of edge instances of color c at x
    int eta(int x, int c) const;
    std::vector<long long> class_sizes() const;
    bool proper() const;
    bool lambda_proper(int lambda) const;
};

struct Factorization {
    int k = 0;  // per-factor degree
    std::vector<MultiGraph> factors;
};

// d-regular bipartite multigraph into d perfect matchings.
// side[x] gives the part (0 or 1) of each vertex.
Factorization one_factorize_bipartite(const MultiGraph& g, const std::vector<int>& side);

// 2k-regular multigraph into k spanning 2-factors; 2-cycles allowed.
Factorization two_factorize(const MultiGraph& g);

// Proper edge coloring with at most max_degree + max_multiplicity colors.
EdgeColoring proper_color(const MultiGraph& g);

// Same palette, class sizes differing by at most 1.
EdgeColoring equitable_recolor(const EdgeColoring& col);

// Equitable 3k-coloring into a k-coloring where every vertex sees each
// color at most 3 times; class sizes differ by at most 2.
EdgeColoring merge_to_3proper(const EdgeColoring& col);

struct NearRegularDecomposition {
    MultiGraph leave;        // N: the part left uncovered, q edges
    BlockMultiset triangles; // exact decomposition of 3K_s minus the leave
};

// Splits 3K_s into triangles plus a near-regular leave with exactly q
// edges (degree gap <= 2, multiplicity <= 3).
NearRegularDecomposition near_regular_decomposable(int s, long long q, std::uint64_t seed = 1);

}  // namespace triholes
