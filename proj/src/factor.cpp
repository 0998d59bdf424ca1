#include "triholes/factor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "triholes/search.hpp"

namespace triholes {

namespace {

std::vector<std::pair<int, int>> edge_instances(const MultiGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < g.n(); ++x)
        for (const auto& [y, m] : g.neighbors(x))
            if (y > x)
                for (int i = 0; i < m; ++i) out.emplace_back(x, y);
    return out;
}

struct Circuit {
    int start = 0;
    std::vector<int> edges;
};

// Euler circuits over the instance subset `ids`; all active degrees even.
std::vector<Circuit> euler_circuits(int n, const std::vector<std::pair<int, int>>& ends,
                                    const std::vector<int>& ids) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, id)
    for (int id : ids) {
        auto [a, b] = ends[id];
        adj[a].push_back({b, id});
        adj[b].push_back({a, id});
    }
    std::vector<std::size_t> pos(n, 0);
    std::vector<char> used(ends.size(), 0);
    std::vector<Circuit> out;
    for (int s0 = 0; s0 < n; ++s0) {
        while (pos[s0] < adj[s0].size() && used[adj[s0][pos[s0]].second]) ++pos[s0];
        if (pos[s0] == adj[s0].size()) continue;
        std::vector<std::pair<int, int>> st{{s0, -1}};
        std::vector<int> circ;
        while (!st.empty()) {
            auto [v, ein] = st.back();
            while (pos[v] < adj[v].size() && used[adj[v][pos[v]].second]) ++pos[v];
            if (pos[v] == adj[v].size()) {
                st.pop_back();
                if (ein >= 0) circ.push_back(ein);
            } else {
                auto [w, id] = adj[v][pos[v]];
                used[id] = 1;
                st.push_back({w, id});
            }
        }
        std::reverse(circ.begin(), circ.end());
        if (!circ.empty()) out.push_back({s0, std::move(circ)});
    }
    return out;
}

// d-regular bipartite instance set into d perfect matchings
// (alternate Euler halving and matching removal).
std::vector<std::vector<int>> split_regular_bipartite(int n,
                                                      const std::vector<std::pair<int, int>>& ends,
                                                      const std::vector<int>& side,
                                                      const std::vector<int>& ids, int d) {
    std::vector<std::vector<int>> out;
    if (d == 0) return out;
    if (d % 2 == 1) {
        std::vector<std::vector<int>> adj(n);
        for (int id : ids) {
            auto [a, b] = ends[id];
            adj[side[a] == 0 ? a : b].push_back(id);
        }
        std::vector<int> match_r(n, -1), match_l(n, -1);
        std::vector<char> vis(n, 0);
        std::function<bool(int)> aug = [&](int l) -> bool {
            for (int id : adj[l]) {
                auto [a, b] = ends[id];
                int rv = side[a] == 0 ? b : a;
                if (vis[rv]) continue;
                vis[rv] = 1;
                if (match_r[rv] < 0) {
                    match_r[rv] = id;
                    match_l[l] = id;
                    return true;
                }
                int id2 = match_r[rv];
                auto [c2, d2] = ends[id2];
                int l2 = side[c2] == 0 ? c2 : d2;
                if (aug(l2)) {
                    match_r[rv] = id;
                    match_l[l] = id;
                    return true;
                }
            }
            return false;
        };
        for (int v = 0; v < n; ++v) {
            if (side[v] != 0 || adj[v].empty() || match_l[v] >= 0) continue;
            std::fill(vis.begin(), vis.end(), 0);
            if (!aug(v)) throw std::logic_error("matching failed in a regular bipartite graph");
        }
        std::vector<int> m;
        std::vector<char> picked(ends.size(), 0);
        for (int v = 0; v < n; ++v)
            if (side[v] == 0 && match_l[v] >= 0) {
                m.push_back(match_l[v]);
                picked[match_l[v]] = 1;
            }
        std::vector<int> rest;
        for (int id : ids)
            if (!picked[id]) rest.push_back(id);
        out.push_back(std::move(m));
        auto more = split_regular_bipartite(n, ends, side, rest, d - 1);
        out.insert(out.end(), more.begin(), more.end());
        return out;
    }
    auto circs = euler_circuits(n, ends, ids);
    std::vector<int> half_a, half_b;
    for (const auto& c : circs)
        for (std::size_t i = 0; i < c.edges.size(); ++i)
            (i % 2 == 0 ? half_a : half_b).push_back(c.edges[i]);
    out = split_regular_bipartite(n, ends, side, half_a, d / 2);
    auto more = split_regular_bipartite(n, ends, side, half_b, d / 2);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

int common_degree(const MultiGraph& g) {
    int d = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (d < 0)
            d = g.degree(v);
        else if (g.degree(v) != d)
            throw std::invalid_argument("graph is not regular");
    }
    return d < 0 ? 0 : d;
}

}  // namespace

int EdgeColoring::eta(int x, int c) const {
    int out = 0;
    for (const auto& e : edges)
        if (e.color == c && (e.u == x || e.v == x)) ++out;
    return out;
}

std::vector<long long> EdgeColoring::class_sizes() const {
    std::vector<long long> out(t, 0);
    for (const auto& e : edges) {
        if (e.color < 0 || e.color >= t) return {};
        ++out[e.color];
    }
    return out;
}

bool EdgeColoring::proper() const { return lambda_proper(1); }

bool EdgeColoring::lambda_proper(int lambda) const {
    if (t < 0) return false;
    std::vector<int> seen(static_cast<std::size_t>(n) * std::max(t, 1), 0);
    for (const auto& e : edges) {
        if (e.color < 0 || e.color >= t) return false;
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v) return false;
        if (++seen[static_cast<std::size_t>(e.u) * t + e.color] > lambda) return false;
        if (++seen[static_cast<std::size_t>(e.v) * t + e.color] > lambda) return false;
    }
    return true;
}

Factorization one_factorize_bipartite(const MultiGraph& g, const std::vector<int>& side) {
    const int n = g.n();
    if (static_cast<int>(side.size()) != n) throw std::invalid_argument("bipartition size mismatch");
    for (int v : side)
        if (v != 0 && v != 1) throw std::invalid_argument("bipartition entries must be 0 or 1");
    auto ends = edge_instances(g);
    for (auto [a, b] : ends)
        if (side[a] == side[b]) throw std::invalid_argument("edge inside one part");
    const int d = common_degree(g);
    Factorization out;
    out.k = 1;
    if (d == 0) return out;
    std::vector<int> ids(ends.size());
    std::iota(ids.begin(), ids.end(), 0);
    auto matchings = split_regular_bipartite(n, ends, side, ids, d);
    for (const auto& m : matchings) {
        MultiGraph f(n);
        for (int id : m) f.add_edge(ends[id].first, ends[id].second);
        out.factors.push_back(std::move(f));
    }
    return out;
}

Factorization two_factorize(const MultiGraph& g) {
    const int n = g.n();
    const int d = common_degree(g);
    if (d % 2 != 0) throw std::invalid_argument("vertex degrees must be even");
    const int k = d / 2;
    Factorization out;
    out.k = 2;
    if (k == 0) return out;
    auto ends = edge_instances(g);
    std::vector<int> ids(ends.size());
    std::iota(ids.begin(), ids.end(), 0);
    auto circs = euler_circuits(n, ends, ids);
    std::vector<std::pair<int, int>> oriented(ends.size());
    for (const auto& c : circs) {
        int cur = c.start;
        for (int id : c.edges) {
            auto [a, b] = ends[id];
            int nxt = (a == cur) ? b : a;
            oriented[id] = {cur, nxt};
            cur = nxt;
        }
    }
    // out-degree / in-degree double cover: a perfect matching there picks one
    // outgoing and one incoming arc per vertex, i.e. a spanning 2-factor
    std::vector<std::pair<int, int>> ends2(ends.size());
    for (std::size_t i = 0; i < ends.size(); ++i)
        ends2[i] = {oriented[i].first, n + oriented[i].second};
    std::vector<int> side2(2 * n, 0);
    std::fill(side2.begin() + n, side2.end(), 1);
    auto matchings = split_regular_bipartite(2 * n, ends2, side2, ids, k);
    for (const auto& m : matchings) {
        MultiGraph f(n);
        for (int id : m) f.add_edge(ends[id].first, ends[id].second);
        out.factors.push_back(std::move(f));
    }
    return out;
}

EdgeColoring proper_color(const MultiGraph& g) {
    const int n = g.n();
    auto ends = edge_instances(g);
    const int m = static_cast<int>(ends.size());
    EdgeColoring out;
    out.n = n;
    if (m == 0) {
        out.t = 0;
        return out;
    }
    const int palette = g.max_degree() + g.max_multiplicity();
    std::vector<int> color(m, -1);
    std::vector<std::vector<int>> at(n, std::vector<int>(palette, -1));
    auto other = [&](int id, int x) { return ends[id].first == x ? ends[id].second : ends[id].first; };
    auto clear_color = [&](int id) {
        int c = color[id];
        if (c < 0) return;
        at[ends[id].first][c] = -1;
        at[ends[id].second][c] = -1;
        color[id] = -1;
    };
    auto set_color = [&](int id, int c) {
        assert(at[ends[id].first][c] < 0 && at[ends[id].second][c] < 0);
        color[id] = c;
        at[ends[id].first][c] = id;
        at[ends[id].second][c] = id;
    };
    auto flip_path = [&](const std::vector<int>& path, int ca, int cb) {
        std::vector<int> nc(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) nc[i] = color[path[i]] == ca ? cb : ca;
        for (int id : path) clear_color(id);
        for (std::size_t i = 0; i < path.size(); ++i) set_color(path[i], nc[i]);
    };
    for (int e0 = 0; e0 < m; ++e0) {
        if (color[e0] >= 0) continue;
        const int u = ends[e0].first;
        std::vector<int> fedge{e0}, fvert{ends[e0].second}, fcol{-1};
        auto apply_fan = [&](int len, int final_color) {
            for (int t2 = 0; t2 < len; ++t2) clear_color(fedge[t2]);
            for (int t2 = 0; t2 + 1 < len; ++t2) set_color(fedge[t2], fcol[t2 + 1]);
            set_color(fedge[len - 1], final_color);
        };
        for (;;) {
            const int w = fvert.back();
            int gamma = -1;
            for (int c = 0; c < palette && gamma < 0; ++c) {
                if (at[w][c] >= 0) continue;
                bool excl = false;
                for (std::size_t t2 = 1; t2 < fedge.size() && !excl; ++t2)
                    if (fvert[t2 - 1] == w && fcol[t2] == c) excl = true;
                if (!excl) gamma = c;
            }
            if (gamma < 0) throw std::logic_error("edge coloring ran out of candidate colors");
            if (at[u][gamma] < 0) {
                apply_fan(static_cast<int>(fedge.size()), gamma);
                break;
            }
            const int ep = at[u][gamma];
            int j = -1;
            for (std::size_t t2 = 1; t2 < fedge.size() && j < 0; ++t2)
                if (fedge[t2] == ep) j = static_cast<int>(t2);
            if (j < 0) {
                fedge.push_back(ep);
                fvert.push_back(other(ep, u));
                fcol.push_back(gamma);
                continue;
            }
            const int beta = gamma;
            int alpha = -1;
            for (int c = 0; c < palette && alpha < 0; ++c)
                if (at[u][c] < 0) alpha = c;
            if (alpha < 0) throw std::logic_error("edge coloring found no free color");
            std::vector<int> path;
            int cur = u, want = beta;
            while (at[cur][want] >= 0) {
                int id = at[cur][want];
                path.push_back(id);
                cur = other(id, cur);
                want = (want == beta) ? alpha : beta;
            }
            if (cur != fvert[j - 1]) {
                flip_path(path, alpha, beta);
                apply_fan(j, beta);
            } else {
                std::vector<int> path2;
                int cur2 = fvert.back(), want2 = alpha;
                while (at[cur2][want2] >= 0) {
                    int id = at[cur2][want2];
                    path2.push_back(id);
                    cur2 = other(id, cur2);
                    want2 = (want2 == alpha) ? beta : alpha;
                }
                flip_path(path2, alpha, beta);
                apply_fan(static_cast<int>(fedge.size()), alpha);
            }
            break;
        }
    }
    out.t = palette;
    out.edges.reserve(m);
    for (int i = 0; i < m; ++i) out.edges.push_back({ends[i].first, ends[i].second, color[i]});
    if (!out.proper()) throw std::logic_error("edge coloring failed properness check");
    return out;
}

EdgeColoring equitable_recolor(const EdgeColoring& col) {
    if (!col.proper()) throw std::invalid_argument("coloring is not proper");
    EdgeColoring out = col;
    if (out.t <= 1 || out.edges.empty()) return out;
    const int n = out.n;
    const long long guard_max = 8LL * out.edges.size() * out.edges.size() + 64;
    for (long long guard = 0;; ++guard) {
        if (guard > guard_max) throw std::logic_error("equitable recoloring did not converge");
        auto sizes = out.class_sizes();
        int big = 0, small = 0;
        for (int c = 0; c < out.t; ++c) {
            if (sizes[c] > sizes[big]) big = c;
            if (sizes[c] < sizes[small]) small = c;
        }
        if (sizes[big] - sizes[small] <= 1) break;
        // components of the big/small subgraph are paths or even cycles;
        // flip one path with a surplus of the big color
        std::vector<std::array<int, 2>> at(n, {-1, -1});
        std::vector<int> sub;
        for (std::size_t i = 0; i < out.edges.size(); ++i) {
            const auto& e = out.edges[i];
            if (e.color == big) {
                at[e.u][0] = static_cast<int>(i);
                at[e.v][0] = static_cast<int>(i);
                sub.push_back(static_cast<int>(i));
            } else if (e.color == small) {
                at[e.u][1] = static_cast<int>(i);
                at[e.v][1] = static_cast<int>(i);
                sub.push_back(static_cast<int>(i));
            }
        }
        std::vector<char> seen(out.edges.size(), 0);
        bool flipped = false;
        for (int seed : sub) {
            if (seen[seed] || flipped) continue;
            std::vector<int> comp{seed};
            seen[seed] = 1;
            for (int dir = 0; dir < 2; ++dir) {
                int x = dir == 0 ? out.edges[seed].u : out.edges[seed].v;
                int eid = seed;
                for (;;) {
                    int nxt = at[x][0] == eid ? at[x][1] : (at[x][1] == eid ? at[x][0] : -1);
                    if (nxt < 0 || seen[nxt]) break;
                    seen[nxt] = 1;
                    comp.push_back(nxt);
                    x = out.edges[nxt].u == x ? out.edges[nxt].v : out.edges[nxt].u;
                    eid = nxt;
                }
            }
            long long nb = 0, ns = 0;
            for (int id : comp) (out.edges[id].color == big ? nb : ns)++;
            if (nb > ns) {
                for (int id : comp) out.edges[id].color = out.edges[id].color == big ? small : big;
                flipped = true;
            }
        }
        if (!flipped) throw std::logic_error("no rebalancing path found");
    }
    return out;
}

EdgeColoring merge_to_3proper(const EdgeColoring& col) {
    if (!col.proper()) throw std::invalid_argument("coloring is not proper");
    if (col.t % 3 != 0) throw std::invalid_argument("palette size must be a multiple of three");
    auto sizes = col.class_sizes();
    if (!col.edges.empty()) {
        long long mx = *std::max_element(sizes.begin(), sizes.end());
        long long mn = *std::min_element(sizes.begin(), sizes.end());
        if (mx - mn > 1) throw std::invalid_argument("coloring is not equitable");
    }
    const int k = col.t / 3;
    std::vector<int> order(col.t);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[a] > sizes[b]; });
    // deal the sorted classes round-robin so merged sizes stay balanced
    std::vector<int> bucket(col.t, 0);
    for (int pos = 0; pos < col.t; ++pos) bucket[order[pos]] = pos % k;
    EdgeColoring out;
    out.n = col.n;
    out.t = k;
    out.edges = col.edges;
    for (auto& e : out.edges) e.color = bucket[e.color];
    return out;
}

NearRegularDecomposition near_regular_decomposable(int s, long long q, std::uint64_t seed) {
    if (s < 1) throw std::invalid_argument("order must be positive");
    const long long total = 3LL * s * (s - 1) / 2;
    if (q < 0 || q > total)
        throw InadmissibleError("leave size must lie between 0 and the full triple cover");
    const long long covered = total - q;
    if (covered % 3 != 0)
        throw InadmissibleError("covered part must have a multiple of three edges");
    const long long cap = 3LL * ((static_cast<long long>(s) * ((3LL * (s - 1)) / 2)) / 3);
    if (covered > cap) throw InadmissibleError("outside the near-regular decomposable range");
    NearRegularDecomposition res{MultiGraph(s), BlockMultiset{}};
    if (covered == 0) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) res.leave.add_edge(i, j, 3);
        return res;
    }
    const int nt = static_cast<int>(covered / 3);
    const int base = static_cast<int>(covered / s);
    const int extra = static_cast<int>(covered % s);
    auto pidx = [&](int a, int b) { return a < b ? a * s + b : b * s + a; };
    for (int restart = 0; restart < 80; ++restart) {
        std::mt19937_64 rng(mix_seed(seed, restart));
        std::vector<int> quota(s, base);
        std::vector<int> perm(s);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < extra; ++i) ++quota[perm[i]];
        std::vector<int> cnt(s * s, 0), cur(s, 0);
        std::vector<std::array<int, 3>> bl;
        std::vector<char> alive;
        int nalive = 0;
        std::vector<std::vector<int>> pb(s), prb(s * s);
        auto add_block = [&](int a, int b, int c) {
            int id = static_cast<int>(bl.size());
            bl.push_back({a, b, c});
            alive.push_back(1);
            ++nalive;
            ++cur[a], ++cur[b], ++cur[c];
            ++cnt[pidx(a, b)], ++cnt[pidx(a, c)], ++cnt[pidx(b, c)];
            pb[a].push_back(id), pb[b].push_back(id), pb[c].push_back(id);
            prb[pidx(a, b)].push_back(id);
            prb[pidx(a, c)].push_back(id);
            prb[pidx(b, c)].push_back(id);
        };
        auto kill = [&](int id) {
            const auto& t = bl[id];
            alive[id] = 0;
            --nalive;
            --cur[t[0]], --cur[t[1]], --cur[t[2]];
            --cnt[pidx(t[0], t[1])], --cnt[pidx(t[0], t[2])], --cnt[pidx(t[1], t[2])];
        };
        auto remove_from = [&](std::vector<int>& lst) {
            for (;;) {
                std::size_t idx = rng() % lst.size();
                int id = lst[idx];
                if (!alive[id]) {
                    lst[idx] = lst.back();
                    lst.pop_back();
                    continue;
                }
                kill(id);
                return;
            }
        };
        auto compact = [&]() {
            std::vector<std::array<int, 3>> keep;
            for (std::size_t i = 0; i < bl.size(); ++i)
                if (alive[i]) keep.push_back(bl[i]);
            bl.clear();
            alive.clear();
            nalive = 0;
            std::fill(cnt.begin(), cnt.end(), 0);
            std::fill(cur.begin(), cur.end(), 0);
            for (auto& v : pb) v.clear();
            for (auto& v : prb) v.clear();
            for (const auto& t : keep) add_block(t[0], t[1], t[2]);
        };
        const long long budget = 300000 + 2000LL * s * s;
        for (long long step = 0; step < budget && nalive < nt; ++step) {
            if (bl.size() > 8u * static_cast<unsigned>(nt) + 4096) compact();
            int x = -1;
            for (int tries = 0; tries < 8 && x < 0; ++tries) {
                int cand = static_cast<int>(rng() % s);
                if (cur[cand] < quota[cand]) x = cand;
            }
            if (x < 0)
                for (int cand = 0; cand < s && x < 0; ++cand)
                    if (cur[cand] < quota[cand]) x = cand;
            int y = -1;
            {
                int off = static_cast<int>(rng() % s);
                for (int pass = 0; pass < 3 && y < 0; ++pass)
                    for (int t2 = 0; t2 < s && y < 0; ++t2) {
                        int c2 = (off + t2) % s;
                        if (c2 == x || quota[c2] == 0) continue;
                        bool ok = pass == 0 ? (cur[c2] < quota[c2] && cnt[pidx(x, c2)] < 3)
                                 : pass == 1 ? (cnt[pidx(x, c2)] < 3)
                                             : true;
                        if (ok) y = c2;
                    }
            }
            int z = -1;
            {
                int off = static_cast<int>(rng() % s);
                for (int pass = 0; pass < 3 && z < 0; ++pass)
                    for (int t2 = 0; t2 < s && z < 0; ++t2) {
                        int c2 = (off + t2) % s;
                        if (c2 == x || c2 == y || quota[c2] == 0) continue;
                        bool ok = pass == 0
                                      ? (cur[c2] < quota[c2] && cnt[pidx(x, c2)] < 3 &&
                                         cnt[pidx(y, c2)] < 3)
                                 : pass == 1 ? (cnt[pidx(x, c2)] < 3 && cnt[pidx(y, c2)] < 3)
                                             : true;
                        if (ok) z = c2;
                    }
            }
            if (x < 0 || y < 0 || z < 0) break;
            while (cur[y] >= quota[y]) remove_from(pb[y]);
            while (cur[z] >= quota[z]) remove_from(pb[z]);
            while (cnt[pidx(x, y)] >= 3) remove_from(prb[pidx(x, y)]);
            while (cnt[pidx(x, z)] >= 3) remove_from(prb[pidx(x, z)]);
            while (cnt[pidx(y, z)] >= 3) remove_from(prb[pidx(y, z)]);
            add_block(x, y, z);
        }
        if (nalive != nt) continue;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (cnt[pidx(i, j)] < 3) res.leave.add_edge(i, j, 3 - cnt[pidx(i, j)]);
        for (std::size_t i = 0; i < bl.size(); ++i)
            if (alive[i]) res.triangles.add(make_triple(bl[i][0], bl[i][1], bl[i][2]));
        assert(res.leave.edge_count() == q);
        return res;
    }
    throw NoPathError("no near-regular triangle packing found within budget");
}

}  // namespace triholes
