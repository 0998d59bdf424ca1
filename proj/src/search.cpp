#include "triholes/search.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <random>

namespace triholes {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a * 0x9e3779b97f4a7c15ULL + b;
    splitmix(s);
    return splitmix(s);
}

CoverProblem CoverProblem::all_pairs(int n, int lambda) {
    CoverProblem p;
    p.n = n;
    p.target.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) p.set(x, y, lambda);
    return p;
}

CoverProblem CoverProblem::from_its(const ItsSpec& spec) {
    CoverProblem p = all_pairs(spec.v, spec.lambda);
    for (const auto& h : spec.holes)
        for (size_t i = 0; i < h.size(); ++i)
            for (size_t j = i + 1; j < h.size(); ++j) p.set(h[i], h[j], 0);
    return p;
}

CoverProblem CoverProblem::from_gdd(const GddSpec& spec) {
    CoverProblem p = all_pairs(spec.v, spec.lambda);
    for (const auto& g : spec.groups)
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = i + 1; j < g.size(); ++j) p.set(g[i], g[j], 0);
    for (size_t i = 0; i < spec.hole1.size(); ++i)
        for (size_t j = i + 1; j < spec.hole1.size(); ++j) p.set(spec.hole1[i], spec.hole1[j], 0);
    for (size_t i = 0; i < spec.hole2.size(); ++i)
        for (size_t j = i + 1; j < spec.hole2.size(); ++j) p.set(spec.hole2[i], spec.hole2[j], 0);
    return p;
}

long long CoverProblem::total() const {
    long long t = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) t += at(x, y);
    return t;
}

namespace {

struct Climber {
    int n;
    const std::vector<int>& target;
    std::vector<int> cnt;
    std::mt19937_64 rng;

    std::vector<Triple> block_of;
    std::vector<char> alive;
    std::vector<int> free_slots;
    std::vector<std::vector<int>> pair_blocks;
    long long pair_entries = 0;
    long long n_alive = 0;

    std::vector<std::pair<int, int>> def_list;
    std::vector<char> in_def;
    long long deficiency = 0;

    Climber(const CoverProblem& p, std::uint64_t seed)
        : n(p.n), target(p.target), cnt(p.target.size(), 0), rng(seed),
          pair_blocks(p.target.size()), in_def(p.target.size(), 0) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                size_t i = idx(x, y);
                if (target[i] > 0) {
                    deficiency += target[i];
                    push_def(x, y);
                }
            }
    }

    size_t idx(int x, int y) const {
        return static_cast<size_t>(std::min(x, y)) * n + std::max(x, y);
    }

    int rnd(int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); }

    void push_def(int x, int y) {
        size_t i = idx(x, y);
        if (!in_def[i]) {
            in_def[i] = 1;
            def_list.emplace_back(std::min(x, y), std::max(x, y));
        }
    }

    bool pick_deficient(int& x, int& y) {
        while (!def_list.empty()) {
            int i = rnd(static_cast<int>(def_list.size()));
            auto [a, b] = def_list[i];
            size_t p = idx(a, b);
            if (cnt[p] < target[p]) {
                x = a;
                y = b;
                return true;
            }
            in_def[p] = 0;
            def_list[i] = def_list.back();
            def_list.pop_back();
        }
        return false;
    }

    void add_block(int x, int y, int z) {
        Triple t = make_triple(x, y, z);
        int id;
        if (!free_slots.empty()) {
            id = free_slots.back();
            free_slots.pop_back();
            block_of[id] = t;
            alive[id] = 1;
        } else {
            id = static_cast<int>(block_of.size());
            block_of.push_back(t);
            alive.push_back(1);
        }
        n_alive++;
        for (auto [a, b] : pairs_of(t)) {
            size_t i = idx(a, b);
            cnt[i]++;
            deficiency--;
            pair_blocks[i].push_back(id);
            pair_entries++;
        }
        if (pair_entries > 6 * n_alive + 4096) compact();
    }

    void remove_block(int id) {
        alive[id] = 0;
        free_slots.push_back(id);
        n_alive--;
        for (auto [a, b] : pairs_of(block_of[id])) {
            cnt[idx(a, b)]--;
            deficiency++;
            push_def(a, b);
        }
    }

    static std::array<std::pair<int, int>, 3> pairs_of(const Triple& t) {
        return {{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    }

    void remove_block_with_pair(int x, int y) {
        auto& vec = pair_blocks[idx(x, y)];
        while (true) {
            int i = rnd(static_cast<int>(vec.size()));
            int id = vec[i];
            if (!alive[id]) {
                vec[i] = vec.back();
                vec.pop_back();
                pair_entries--;
                continue;
            }
            vec[i] = vec.back();
            vec.pop_back();
            pair_entries--;
            remove_block(id);
            return;
        }
    }

    void compact() {
        for (auto& v : pair_blocks) v.clear();
        pair_entries = 0;
        for (size_t id = 0; id < block_of.size(); ++id) {
            if (!alive[id]) continue;
            for (auto [a, b] : pairs_of(block_of[id])) {
                pair_blocks[idx(a, b)].push_back(static_cast<int>(id));
                pair_entries++;
            }
        }
    }

    void step(std::vector<int>& feas, std::vector<int>& good) {
        int x, y;
        if (!pick_deficient(x, y)) return;
        feas.clear();
        good.clear();
        for (int z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            size_t ix = idx(x, z), iy = idx(y, z);
            if (target[ix] == 0 || target[iy] == 0) continue;
            feas.push_back(z);
            if (cnt[ix] < target[ix] && cnt[iy] < target[iy]) good.push_back(z);
        }
        if (feas.empty()) return;
        int z = good.empty() ? feas[rnd(static_cast<int>(feas.size()))]
                             : good[rnd(static_cast<int>(good.size()))];
        while (cnt[idx(x, z)] >= target[idx(x, z)]) remove_block_with_pair(x, z);
        while (cnt[idx(y, z)] >= target[idx(y, z)]) remove_block_with_pair(y, z);
        add_block(x, y, z);
    }

    bool run(long long max_steps) {
        std::vector<int> feas, good;
        feas.reserve(n);
        good.reserve(n);
        for (long long s = 0; s < max_steps && deficiency > 0; ++s) step(feas, good);
        return deficiency == 0;
    }

    BlockMultiset collect() const {
        BlockMultiset bm;
        for (size_t id = 0; id < block_of.size(); ++id)
            if (alive[id]) bm.add(block_of[id]);
        return bm;
    }
};

}  // namespace

std::optional<BlockMultiset> solve_cover(const CoverProblem& prob, const SearchOptions& opts) {
    long long total = prob.total();
    if (total % 3 != 0) return std::nullopt;
    if (total == 0) return BlockMultiset{};
    if (prob.n < 3) return std::nullopt;
    for (int r = 0; r < opts.restarts; ++r) {
        Climber c(prob, mix_seed(opts.seed, static_cast<std::uint64_t>(r)));
        if (c.run(opts.max_steps)) return c.collect();
    }
    return std::nullopt;
}

namespace {

struct Exhaustive {
    int n;
    std::vector<int> rem;
    std::vector<Triple> triples;
    std::vector<std::vector<int>> by_pair;  // pair index -> positions in `triples`
    long long budget;
    long long nodes = 0;
    bool aborted = false;

    size_t idx(int x, int y) const {
        return static_cast<size_t>(std::min(x, y)) * n + std::max(x, y);
    }

    explicit Exhaustive(const CoverProblem& p, long long node_budget)
        : n(p.n), rem(p.target), by_pair(p.target.size()), budget(node_budget) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    if (rem[idx(a, b)] == 0 || rem[idx(a, c)] == 0 || rem[idx(b, c)] == 0)
                        continue;
                    int id = static_cast<int>(triples.size());
                    triples.push_back({a, b, c});
                    by_pair[idx(a, b)].push_back(id);
                    by_pair[idx(a, c)].push_back(id);
                    by_pair[idx(b, c)].push_back(id);
                }
    }

    bool dfs(size_t prev_pair, size_t min_pos) {
        if (aborted) return false;
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        size_t p = first_deficient();
        if (p == rem.size()) return true;
        size_t start = (p == prev_pair) ? min_pos : 0;
        const auto& list = by_pair[p];
        for (size_t pos = start; pos < list.size(); ++pos) {
            const Triple& t = triples[list[pos]];
            size_t i1 = idx(t[0], t[1]), i2 = idx(t[0], t[2]), i3 = idx(t[1], t[2]);
            if (rem[i1] == 0 || rem[i2] == 0 || rem[i3] == 0) continue;
            rem[i1]--;
            rem[i2]--;
            rem[i3]--;
            if (dfs(p, pos)) return true;
            rem[i1]++;
            rem[i2]++;
            rem[i3]++;
        }
        return false;
    }

    size_t first_deficient() const {
        for (size_t i = 0; i < rem.size(); ++i)
            if (rem[i] > 0) return i;
        return rem.size();
    }
};

}  // namespace

ExhaustiveResult exhaustive_cover(const CoverProblem& prob, long long node_budget) {
    ExhaustiveResult r;
    if (prob.total() % 3 != 0) {
        r.decided = true;
        return r;
    }
    Exhaustive ex(prob, node_budget);
    r.exists = ex.dfs(prob.target.size(), 0);
    r.nodes = ex.nodes;
    r.decided = r.exists || !ex.aborted;
    return r;
}

namespace {

struct ClassClimber {
    const ClassCoverProblem& P;
    int n;
    int C;
    std::vector<int> cnt;
    std::vector<std::vector<int>> cov;   // per class, per point
    std::vector<char> allowed;           // c*n + x
    std::mt19937_64 rng;

    std::vector<Triple> block_of;
    std::vector<int> class_of;
    std::vector<char> alive;
    std::vector<int> free_slots;
    std::vector<std::vector<int>> pair_blocks;
    std::vector<std::vector<std::vector<int>>> point_blocks;  // [c][x] -> ids
    long long entries = 0;
    long long n_alive = 0;

    std::vector<std::pair<int, int>> def_list;  // (class, point)
    std::vector<char> in_def;
    long long deficiency = 0;

    ClassClimber(const ClassCoverProblem& p, std::uint64_t seed)
        : P(p), n(p.n), C(static_cast<int>(p.slots.size())), cnt(p.target.size(), 0),
          cov(C, std::vector<int>(p.n, 0)), allowed(static_cast<size_t>(C) * p.n, 0),
          rng(seed), pair_blocks(p.target.size()),
          point_blocks(C, std::vector<std::vector<int>>(p.n)),
          in_def(static_cast<size_t>(C) * p.n, 0) {
        for (int c = 0; c < C; ++c)
            for (int x : P.slots[c].allowed) {
                allowed[static_cast<size_t>(c) * n + x] = 1;
                deficiency += P.slots[c].alpha;
                push_def(c, x);
            }
    }

    size_t idx(int x, int y) const {
        return static_cast<size_t>(std::min(x, y)) * n + std::max(x, y);
    }

    int rnd(int k) { return static_cast<int>(rng() % static_cast<unsigned>(k)); }

    void push_def(int c, int x) {
        size_t i = static_cast<size_t>(c) * n + x;
        if (!in_def[i]) {
            in_def[i] = 1;
            def_list.emplace_back(c, x);
        }
    }

    bool pick_deficient(int& c, int& x) {
        while (!def_list.empty()) {
            int i = rnd(static_cast<int>(def_list.size()));
            auto [cc, xx] = def_list[i];
            if (cov[cc][xx] < P.slots[cc].alpha) {
                c = cc;
                x = xx;
                return true;
            }
            in_def[static_cast<size_t>(cc) * n + xx] = 0;
            def_list[i] = def_list.back();
            def_list.pop_back();
        }
        return false;
    }

    void add_block(int c, const Triple& t) {
        int id;
        if (!free_slots.empty()) {
            id = free_slots.back();
            free_slots.pop_back();
            block_of[id] = t;
            class_of[id] = c;
            alive[id] = 1;
        } else {
            id = static_cast<int>(block_of.size());
            block_of.push_back(t);
            class_of.push_back(c);
            alive.push_back(1);
        }
        n_alive++;
        for (int x : t) {
            cov[c][x]++;
            deficiency--;
            point_blocks[c][x].push_back(id);
            entries++;
        }
        cnt[idx(t[0], t[1])]++;
        cnt[idx(t[0], t[2])]++;
        cnt[idx(t[1], t[2])]++;
        pair_blocks[idx(t[0], t[1])].push_back(id);
        pair_blocks[idx(t[0], t[2])].push_back(id);
        pair_blocks[idx(t[1], t[2])].push_back(id);
        entries += 3;
        if (entries > 12 * n_alive + 4096) compact();
    }

    void remove_block(int id) {
        alive[id] = 0;
        free_slots.push_back(id);
        n_alive--;
        int c = class_of[id];
        const Triple& t = block_of[id];
        for (int x : t) {
            cov[c][x]--;
            deficiency++;
            push_def(c, x);
        }
        cnt[idx(t[0], t[1])]--;
        cnt[idx(t[0], t[2])]--;
        cnt[idx(t[1], t[2])]--;
    }

    void remove_from(std::vector<int>& vec) {
        while (true) {
            int i = rnd(static_cast<int>(vec.size()));
            int id = vec[i];
            vec[i] = vec.back();
            vec.pop_back();
            entries--;
            if (alive[id]) {
                remove_block(id);
                return;
            }
        }
    }

    void compact() {
        for (auto& v : pair_blocks) v.clear();
        for (auto& pc : point_blocks)
            for (auto& v : pc) v.clear();
        entries = 0;
        for (size_t id = 0; id < block_of.size(); ++id) {
            if (!alive[id]) continue;
            const Triple& t = block_of[id];
            int c = class_of[id];
            for (int x : t) {
                point_blocks[c][x].push_back(static_cast<int>(id));
                entries++;
            }
            pair_blocks[idx(t[0], t[1])].push_back(static_cast<int>(id));
            pair_blocks[idx(t[0], t[2])].push_back(static_cast<int>(id));
            pair_blocks[idx(t[1], t[2])].push_back(static_cast<int>(id));
            entries += 3;
        }
    }

    bool ok_in_class(int c, int x) const {
        return allowed[static_cast<size_t>(c) * n + x] != 0;
    }

    void step(std::vector<int>& t1, std::vector<int>& t2) {
        int c, x;
        if (!pick_deficient(c, x)) return;
        int alpha = P.slots[c].alpha;

        t1.clear();
        t2.clear();
        for (int y = 0; y < n; ++y) {
            if (y == x || !ok_in_class(c, y)) continue;
            size_t i = idx(x, y);
            if (P.target[i] == 0) continue;
            t2.push_back(y);
            if (cov[c][y] < alpha && cnt[i] < P.target[i]) t1.push_back(y);
        }
        if (t2.empty()) return;
        int y = t1.empty() ? t2[rnd(static_cast<int>(t2.size()))]
                           : t1[rnd(static_cast<int>(t1.size()))];

        t1.clear();
        t2.clear();
        for (int z = 0; z < n; ++z) {
            if (z == x || z == y || !ok_in_class(c, z)) continue;
            size_t ix = idx(x, z), iy = idx(y, z);
            if (P.target[ix] == 0 || P.target[iy] == 0) continue;
            t2.push_back(z);
            if (cov[c][z] < alpha && cnt[ix] < P.target[ix] && cnt[iy] < P.target[iy])
                t1.push_back(z);
        }
        if (t2.empty()) return;
        int z = t1.empty() ? t2[rnd(static_cast<int>(t2.size()))]
                           : t1[rnd(static_cast<int>(t1.size()))];

        while (cov[c][y] >= alpha) remove_from(point_blocks[c][y]);
        while (cov[c][z] >= alpha) remove_from(point_blocks[c][z]);
        while (cnt[idx(x, y)] >= P.target[idx(x, y)]) remove_from(pair_blocks[idx(x, y)]);
        while (cnt[idx(x, z)] >= P.target[idx(x, z)]) remove_from(pair_blocks[idx(x, z)]);
        while (cnt[idx(y, z)] >= P.target[idx(y, z)]) remove_from(pair_blocks[idx(y, z)]);
        add_block(c, make_triple(x, y, z));
    }

    bool run(long long max_steps) {
        std::vector<int> t1, t2;
        t1.reserve(n);
        t2.reserve(n);
        for (long long s = 0; s < max_steps && deficiency > 0; ++s) step(t1, t2);
        return deficiency == 0;
    }

    std::vector<BlockMultiset> collect() const {
        std::vector<BlockMultiset> out(C);
        for (size_t id = 0; id < block_of.size(); ++id)
            if (alive[id]) out[class_of[id]].add(block_of[id]);
        return out;
    }
};

struct Mcc;

// Fills one class at a time against a shared pair budget, hardest classes
// first. Each class is an exact-cover instance of its own: points need
// exactly alpha blocks, remaining pair multiplicities act as capacities.
struct SequentialFiller {
    const ClassCoverProblem& prob;
    std::mt19937_64 rng;
    std::vector<int> rem;

    SequentialFiller(const ClassCoverProblem& p, std::uint64_t seed) : prob(p), rng(seed) {}

    bool fill_class(const ClassSlot& slot, BlockMultiset& out, long long node_cap);

    bool run_prefix(const std::vector<int>& order, size_t cut, std::vector<BlockMultiset>& out,
                    long long node_cap) {
        rem = prob.target;
        for (size_t i = 0; i < cut; ++i) {
            int idx = order[i];
            if (!fill_class(prob.slots[idx], out[idx], node_cap)) {
                if (std::getenv("TRIHOLES_SEARCH_DEBUG"))
                    std::fprintf(stderr, "prefix: class %d (#%zu of %zu) stuck\n", idx, i, cut);
                if (const char* dump = std::getenv("TRIHOLES_DUMP_CLASS")) {
                    if (FILE* fp = std::fopen(dump, "w")) {
                        const auto& slot = prob.slots[idx];
                        int n = prob.n;
                        std::fprintf(fp, "%d %d %zu\n", n, slot.alpha, slot.allowed.size());
                        for (int x : slot.allowed) std::fprintf(fp, "%d ", x);
                        std::fprintf(fp, "\n");
                        for (int a = 0; a < n; ++a)
                            for (int b = a + 1; b < n; ++b)
                                std::fprintf(fp, "%d ", rem[static_cast<size_t>(a) * n + b]);
                        std::fprintf(fp, "\n");
                        std::fclose(fp);
                    }
                }
                return false;
            }
        }
        return true;
    }
};

// Exact cover with multiplicities: choose options (with repetition) so that
// every item is covered exactly need[i] times. Options die once any of
// their items saturates; the most constrained item is branched first.
struct Mcc {
    std::vector<int> need;
    std::vector<char> at_most;  // item is a capacity, not a requirement
    std::vector<std::vector<int>> opt_items;
    std::vector<std::vector<int>> item_opts;
    std::vector<char> opt_alive;
    std::vector<int> cand;
    std::vector<int> chosen;
    long long nodes = 0;
    long long budget;
    bool aborted = false;
    std::mt19937_64 rng;

    Mcc(std::vector<int> needs, std::vector<std::vector<int>> options, long long node_budget,
        std::uint64_t seed)
        : need(std::move(needs)), at_most(need.size(), 0), opt_items(std::move(options)),
          item_opts(need.size()), opt_alive(opt_items.size(), 1),
          cand(need.size(), 0), budget(node_budget), rng(seed) {
        for (size_t o = 0; o < opt_items.size(); ++o)
            for (int i : opt_items[o]) {
                item_opts[i].push_back(static_cast<int>(o));
                cand[i]++;
            }
        for (auto& lst : item_opts)
            for (size_t i = lst.size(); i > 1; --i) std::swap(lst[i - 1], lst[rng() % i]);
    }

    void kill_options_of(int item, std::vector<int>& killed) {
        for (int o : item_opts[item])
            if (opt_alive[o]) {
                opt_alive[o] = 0;
                killed.push_back(o);
                for (int j : opt_items[o]) cand[j]--;
            }
    }

    bool sequential = false;  // resolve items in index order instead of min-candidates

    // Picks an unmet item and resolves its full remaining multiplicity in
    // one nested combination, so option order never repeats.
    bool dfs() {
        int best = -1;
        int best_cand = INT_MAX;
        for (size_t i = 0; i < need.size(); ++i) {
            if (need[i] == 0 || at_most[i]) continue;
            if (cand[i] < need[i]) return false;
            if (!sequential && cand[i] < best_cand) {
                best_cand = cand[i];
                best = static_cast<int>(i);
            }
            if (sequential && best < 0) best = static_cast<int>(i);
        }
        if (best == -1) return true;
        return fill_item(best, 0);
    }

    bool fill_item(int item, size_t from) {
        if (need[item] == 0) return dfs();
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        const auto& lst = item_opts[item];
        for (size_t p = from; p < lst.size(); ++p) {
            int o = lst[p];
            if (!opt_alive[o]) continue;
            std::vector<int> killed;
            std::vector<int> saturated;
            chosen.push_back(o);
            for (int j : opt_items[o]) {
                need[j]--;
                if (need[j] == 0) saturated.push_back(j);
            }
            for (int j : saturated) kill_options_of(j, killed);
            bool feasible = true;
            for (int j : opt_items[o])
                if (!at_most[j] && cand[j] < need[j]) {
                    feasible = false;
                    break;
                }
            if (feasible && fill_item(item, p)) return true;
            for (int oo : killed) {
                opt_alive[oo] = 1;
                for (int j : opt_items[oo]) cand[j]++;
            }
            for (int j : opt_items[o]) need[j]++;
            chosen.pop_back();
            if (aborted) return false;
        }
        return false;
    }
};

bool SequentialFiller::fill_class(const ClassSlot& slot, BlockMultiset& out, long long node_cap) {
    int n = prob.n;
    auto rem_at = [&](int a, int b) -> int& {
        return rem[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
    };
    std::vector<int> pt_item(n, -1);
    std::vector<int> pair_it(static_cast<size_t>(n) * n, -1);
    std::vector<int> needs;
    std::vector<char> caps;
    for (int x : slot.allowed) {
        pt_item[x] = static_cast<int>(needs.size());
        needs.push_back(slot.alpha);
        caps.push_back(0);
    }
    for (size_t i = 0; i < slot.allowed.size(); ++i)
        for (size_t j = i + 1; j < slot.allowed.size(); ++j) {
            int x = slot.allowed[i], y = slot.allowed[j];
            int r = rem_at(x, y);
            if (r > 0) {
                pair_it[static_cast<size_t>(std::min(x, y)) * n + std::max(x, y)] =
                    static_cast<int>(needs.size());
                needs.push_back(r);
                caps.push_back(1);
            }
        }
    std::vector<std::vector<int>> options;
    std::vector<Triple> opt_triple;
    for (size_t i = 0; i < slot.allowed.size(); ++i)
        for (size_t j = i + 1; j < slot.allowed.size(); ++j) {
            int x = slot.allowed[i], y = slot.allowed[j];
            int pxy = pair_it[static_cast<size_t>(std::min(x, y)) * n + std::max(x, y)];
            if (pxy < 0) continue;
            for (size_t k = j + 1; k < slot.allowed.size(); ++k) {
                int z = slot.allowed[k];
                int pxz = pair_it[static_cast<size_t>(std::min(x, z)) * n + std::max(x, z)];
                int pyz = pair_it[static_cast<size_t>(std::min(y, z)) * n + std::max(y, z)];
                if (pxz < 0 || pyz < 0) continue;
                options.push_back({pt_item[x], pt_item[y], pt_item[z], pxy, pxz, pyz});
                opt_triple.push_back(make_triple(x, y, z));
            }
        }
    // Runtimes are heavy-tailed in the value ordering: many short shuffled
    // attempts succeed where one long run stalls.
    long long per_attempt = std::max<long long>(node_cap / 12, 4000);
    for (int attempt = 0; attempt < 12; ++attempt) {
        Mcc m(needs, options, per_attempt, rng());
        m.at_most = caps;
        if (!m.dfs()) {
            if (!m.aborted) return false;  // exhausted: genuinely infeasible
            continue;
        }
        for (int o : m.chosen) {
            const Triple& t = opt_triple[o];
            out.add(t);
            rem_at(t[0], t[1])--;
            rem_at(t[0], t[2])--;
            rem_at(t[1], t[2])--;
        }
        return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<BlockMultiset>> solve_class_cover(const ClassCoverProblem& prob,
                                                            const SearchOptions& opts) {
    long long slot_total = 0;
    for (const auto& s : prob.slots) slot_total += static_cast<long long>(s.alpha) * s.allowed.size();
    long long pair_total = 0;
    for (int x = 0; x < prob.n; ++x)
        for (int y = x + 1; y < prob.n; ++y) pair_total += prob.at(x, y);
    if (slot_total != pair_total || slot_total % 3 != 0) return std::nullopt;
    if (slot_total == 0) return std::vector<BlockMultiset>(prob.slots.size());

    int climb_restarts = std::min(opts.restarts, 4);
    for (int r = 0; r < climb_restarts; ++r) {
        ClassClimber c(prob, mix_seed(opts.seed ^ 0x5eedf00dULL, static_cast<std::uint64_t>(r)));
        if (c.run(opts.max_steps)) return c.collect();
    }

    // Greedy prefix, exact endgame. Classes are filled one at a time against
    // the shared pair budget; the last couple of classes are left to a
    // propagating exact solver, since their blocks are forced by whatever
    // pairs remain. Items: one per open (class, point) with multiplicity
    // alpha, one per remaining pair with its multiplicity.
    int C = static_cast<int>(prob.slots.size());
    int n = prob.n;
    std::vector<int> order(C);
    for (int i = 0; i < C; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (prob.slots[a].alpha != prob.slots[b].alpha)
            return prob.slots[a].alpha < prob.slots[b].alpha;
        return prob.slots[a].allowed.size() < prob.slots[b].allowed.size();
    });
    size_t cut = order.size();
    long long tail_units = 0;
    while (cut > 0) {
        const auto& s = prob.slots[order[cut - 1]];
        long long u = static_cast<long long>(s.alpha) * s.allowed.size();
        if (cut < order.size() && order.size() - cut >= 2 && tail_units + u > 140) break;
        tail_units += u;
        cut--;
    }
    long long node_budget = std::max<long long>(opts.max_steps / 2, 500000);
    long long class_budget = std::max<long long>(opts.max_steps / 8, 100000);
    for (int r = 0; r < opts.restarts; ++r) {
        SequentialFiller f(prob, mix_seed(opts.seed ^ 0xf111e5ULL, static_cast<std::uint64_t>(r)));
        std::vector<BlockMultiset> out(C);
        if (!f.run_prefix(order, cut, out, class_budget)) continue;
        if (cut == order.size()) return out;
        auto rem_at = [&](int x, int y) {
            return f.rem[static_cast<size_t>(std::min(x, y)) * n + std::max(x, y)];
        };
        std::vector<int> point_item(static_cast<size_t>(C) * n, -1);
        std::vector<int> pair_item(static_cast<size_t>(n) * n, -1);
        std::vector<int> needs;
        for (size_t i = cut; i < order.size(); ++i) {
            int c = order[i];
            for (int x : prob.slots[c].allowed) {
                point_item[static_cast<size_t>(c) * n + x] = static_cast<int>(needs.size());
                needs.push_back(prob.slots[c].alpha);
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (rem_at(x, y) > 0) {
                    pair_item[static_cast<size_t>(x) * n + y] = static_cast<int>(needs.size());
                    needs.push_back(rem_at(x, y));
                }
        std::vector<std::vector<int>> options;
        std::vector<int> opt_class;
        std::vector<Triple> opt_triple;
        for (size_t i = cut; i < order.size(); ++i) {
            int c = order[i];
            const auto& pts = prob.slots[c].allowed;
            int k = static_cast<int>(pts.size());
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    int x = pts[a], y = pts[b];
                    if (rem_at(x, y) == 0) continue;
                    for (int d = b + 1; d < k; ++d) {
                        int z = pts[d];
                        if (rem_at(x, z) == 0 || rem_at(y, z) == 0) continue;
                        options.push_back({point_item[static_cast<size_t>(c) * n + x],
                                           point_item[static_cast<size_t>(c) * n + y],
                                           point_item[static_cast<size_t>(c) * n + z],
                                           pair_item[static_cast<size_t>(std::min(x, y)) * n +
                                                     std::max(x, y)],
                                           pair_item[static_cast<size_t>(std::min(x, z)) * n +
                                                     std::max(x, z)],
                                           pair_item[static_cast<size_t>(std::min(y, z)) * n +
                                                     std::max(y, z)]});
                        opt_class.push_back(c);
                        opt_triple.push_back(make_triple(x, y, z));
                    }
                }
        }
        for (int sub = 0; sub < 6; ++sub) {
            Mcc m(needs, options, node_budget / 6,
                  mix_seed(opts.seed ^ 0xdadacafeULL,
                           static_cast<std::uint64_t>(r) * 16 + sub));
            if (std::getenv("TRIHOLES_SEARCH_DEBUG"))
                std::fprintf(stderr, "restart %d.%d: prefix ok, endgame items=%zu opts=%zu\n", r,
                             sub, needs.size(), options.size());
            bool got = m.dfs();
            if (got) {
                for (int o : m.chosen) out[opt_class[o]].add(opt_triple[o]);
                return out;
            }
            if (!m.aborted) break;  // exhausted: this residual is infeasible
        }
    }
    return std::nullopt;
}

}  // namespace triholes
