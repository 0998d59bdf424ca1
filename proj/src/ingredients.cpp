#include "triholes/ingredients.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "triholes/search.hpp"

namespace triholes {

namespace {

long long choose2(long long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex16(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[x & 0xf];
        x >>= 4;
    }
    return out;
}

}  // namespace

std::string IngredientKey::canonical() const {
    std::ostringstream os;
    os << kind << '(';
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) os << ',';
        os << params[i];
    }
    os << ')';
    return os.str();
}

std::string IngredientKey::filename() const {
    return kind + "-" + hex16(fnv1a(canonical())) + ".json";
}

IngredientKey IngredientKey::ts(int v, int lambda) { return {"TS", {v, lambda}}; }
IngredientKey IngredientKey::one_hole_its(int v, int w, int lambda) {
    return {"oneHoleITS", {v, w, lambda}};
}
IngredientKey IngredientKey::three_resolvable_ts(int v, int lambda) {
    return {"threeResolvableTS", {v, lambda}};
}
IngredientKey IngredientKey::gdd(int g, int t, int w, int lambda) {
    return {"GDD", {g, t, w, lambda}};
}
IngredientKey IngredientKey::igdd_3part(int n, int m, int l, int lambda) {
    return {"IGDD3part", {n, m, l, lambda}};
}
IngredientKey IngredientKey::frame(int g, int n, int lambda) { return {"frame", {g, n, lambda}}; }
IngredientKey IngredientKey::td5(int n) { return {"TD5", {n}}; }
IngredientKey IngredientKey::eframe31(int n, int m) { return {"eframe31", {n, m}}; }
IngredientKey IngredientKey::eframe(int h, int n, int m, int lambda) {
    return {"eframe", {h, n, m, lambda}};
}
IngredientKey IngredientKey::lambda1_its(int v, int w, int u) {
    return {"lambda1ITS", {v, w, u}};
}
IngredientKey IngredientKey::its(int v, int lambda, int w, int u, int y, int z1, int z2) {
    return {"its", {v, lambda, w, u, y, z1, z2}};
}

// ----------------------------------------------------------------- strategy

namespace {

const char* kKnownKinds[] = {"TS",    "oneHoleITS", "threeResolvableTS", "GDD",
                             "IGDD3part", "frame",  "TD5",               "eframe31",
                             "eframe",    "lambda1ITS", "its"};

std::map<std::string, ProviderStrategy>& strategy_table() {
    static std::map<std::string, ProviderStrategy> table;
    return table;
}

ProviderStrategy default_strategy() {
    ProviderStrategy s;
    s.tactics.push_back({ProviderTactic::Kind::direct, 0, 1, 0});
    s.tactics.push_back({ProviderTactic::Kind::catalog, 0, 1, 0});
    s.tactics.push_back({ProviderTactic::Kind::search, 0, 1, 0});
    return s;
}

}  // namespace

ProviderStrategy& provider_strategy(const std::string& kind) {
    auto& table = strategy_table();
    auto it = table.find(kind);
    if (it == table.end()) it = table.emplace(kind, default_strategy()).first;
    return it->second;
}

void reset_provider_strategies() { strategy_table().clear(); }

void set_search_overrides(long long budget, std::uint64_t seed) {
    for (const char* k : kKnownKinds) {
        for (auto& t : provider_strategy(k).tactics)
            if (t.kind == ProviderTactic::Kind::search) {
                t.budget = budget;
                t.seed = seed;
            }
    }
}

// -------------------------------------------------------------------- cache

namespace {

std::map<std::string, StructuredDesign>& mem_cache() {
    static std::map<std::string, StructuredDesign> mem;
    return mem;
}

std::string& root_slot(bool& initialized) {
    static std::string root;
    static bool init = false;
    initialized = init;
    init = true;
    return root;
}

}  // namespace

void set_cache_root(const std::string& dir) {
    bool init = false;
    root_slot(init) = dir;
}

std::string cache_root() {
    bool init = false;
    std::string& root = root_slot(init);
    if (!init) {
        if (const char* env = std::getenv("TRIHOLES_CACHE_DIR")) root = env;
    }
    return root;
}

void clear_memory_cache() { mem_cache().clear(); }

namespace {

void cache_store(const IngredientKey& key, const StructuredDesign& d) {
    mem_cache()[key.canonical()] = d;
    std::string root = cache_root();
    if (root.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(root, ec);
    if (ec) return;
    std::filesystem::path final_path = std::filesystem::path(root) / key.filename();
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << design_to_json_string(d);
        if (!out) return;
    }
    std::filesystem::rename(tmp, final_path, ec);
}

using KeyCheck = std::function<VerifyResult(const StructuredDesign&)>;

std::optional<StructuredDesign> cache_fetch(const IngredientKey& key, const KeyCheck& check) {
    auto& mem = mem_cache();
    auto it = mem.find(key.canonical());
    if (it != mem.end()) return it->second;
    std::string root = cache_root();
    if (root.empty()) return std::nullopt;
    std::filesystem::path path = std::filesystem::path(root) / key.filename();
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        StructuredDesign d = design_from_json_string(buf.str());
        if (!check(d)) return std::nullopt;  // corrupt or stale; rebuild
        mem[key.canonical()] = d;
        return d;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

using Attempt = std::function<std::optional<StructuredDesign>(const ProviderTactic&)>;

StructuredDesign provide(const IngredientKey& key, const KeyCheck& check, const Attempt& attempt,
                         const std::string& exhausted_msg) {
    if (auto hit = cache_fetch(key, check)) return *hit;
    for (const auto& tactic : provider_strategy(key.kind).tactics) {
        auto built = attempt(tactic);
        if (!built) continue;
        VerifyResult vr = check(*built);
        if (!vr)
            throw VerifyFailure("certification failed for " + key.canonical() + ": " + vr.detail);
        cache_store(key, *built);
        return *built;
    }
    throw NoPathError(exhausted_msg);
}

SearchOptions search_options(const ProviderTactic& t, long long auto_budget, int auto_restarts) {
    SearchOptions o;
    o.seed = t.seed;
    o.max_steps = t.budget > 0 ? t.budget : auto_budget;
    o.restarts = t.restarts > 0 ? t.restarts : auto_restarts;
    return o;
}

// --------------------------------------------------------- shared checkers

VerifyResult shape_fail(const std::string& msg) {
    VerifyResult r;
    r.detail = msg;
    return r;
}

VerifyResult ok_shape() {
    VerifyResult r;
    r.ok = true;
    return r;
}

std::vector<int> sorted_group_sizes(const GddSpec& g) {
    std::vector<int> s;
    for (const auto& grp : g.groups) s.push_back(static_cast<int>(grp.size()));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> expected_type(int g, int t, int w) {
    std::vector<int> s(t, g);
    if (w > 0) s.push_back(w);
    std::sort(s.begin(), s.end());
    return s;
}

VerifyResult check_classed_gdd(const StructuredDesign& d, ClassKind ck) {
    VerifyResult vr = verify_gdd_igdd(d);
    if (!vr) return vr;
    return verify_classes(d, ck);
}

VerifyResult check_for_key(const IngredientKey& key, const StructuredDesign& d) {
    const auto& p = key.params;
    if (key.kind == "TS") {
        if (d.kind != DesignKind::its || d.its.v != p[0] || d.its.lambda != p[1])
            return shape_fail("wrong shape for a full triple system");
        if (d.its.w() != 0 || d.its.u() != 0 || d.its.y() != 0)
            return shape_fail("a full triple system has empty holes");
        return verify_its(d);
    }
    if (key.kind == "oneHoleITS") {
        if (d.kind != DesignKind::its || d.its.v != p[0] || d.its.lambda != p[2])
            return shape_fail("wrong shape for a one-hole system");
        if (d.its.w() != p[1] || d.its.u() != 0 || d.its.y() != 0)
            return shape_fail("hole sizes do not match the request");
        return verify_its(d);
    }
    if (key.kind == "lambda1ITS") {
        if (d.kind != DesignKind::its || d.its.v != p[0] || d.its.lambda != 1)
            return shape_fail("wrong shape for a unit-index system");
        if (d.its.w() != p[1] || d.its.u() != p[2] || d.its.y() != 0 || d.its.z() != 0)
            return shape_fail("hole sizes do not match the request");
        return verify_its(d);
    }
    if (key.kind == "its") {
        if (d.kind != DesignKind::its || d.its.v != p[0] || d.its.lambda != p[1])
            return shape_fail("wrong shape for a holey triple system");
        if (d.its.w() != p[2] || d.its.u() != p[3] || d.its.y() != p[4] || d.its.z1() != p[5] ||
            d.its.z2() != p[6])
            return shape_fail("hole signature does not match the request");
        return verify_its(d);
    }
    if (key.kind == "threeResolvableTS") {
        int v = static_cast<int>(p[0]);
        int lambda = static_cast<int>(p[1]);
        if (d.kind != DesignKind::resolvable || d.gdd.v != v || d.gdd.lambda != lambda)
            return shape_fail("wrong shape for a resolvable system");
        long long want = static_cast<long long>(v - 1) * lambda / 6;
        if (static_cast<long long>(d.classes.size()) != want)
            return shape_fail("wrong class count");
        for (const auto& c : d.classes)
            if (c.alpha != 3) return shape_fail("every class must cover points three times");
        VerifyResult vr = verify_gdd_igdd(d);
        if (!vr) return vr;
        return verify_classes(d, ClassKind::alpha_resolvable);
    }
    if (key.kind == "GDD") {
        if (d.kind != DesignKind::gdd || d.gdd.lambda != p[3])
            return shape_fail("wrong shape for a group divisible design");
        if (sorted_group_sizes(d.gdd) !=
            expected_type(static_cast<int>(p[0]), static_cast<int>(p[1]), static_cast<int>(p[2])))
            return shape_fail("group sizes do not match the requested type");
        if (!d.gdd.hole1.empty() || !d.gdd.hole2.empty())
            return shape_fail("plain group divisible designs carry no holes");
        VerifyResult vr = verify_gdd_igdd(d);
        if (!vr) return vr;
        if (!d.classes.empty()) return verify_classes(d, ClassKind::condensed);
        return ok_shape();
    }
    if (key.kind == "IGDD3part") {
        int n = static_cast<int>(p[0]), m = static_cast<int>(p[1]), l = static_cast<int>(p[2]);
        if (d.kind != DesignKind::igdd || d.gdd.lambda != p[3] || d.gdd.v != 3 * n)
            return shape_fail("wrong shape for a three-group holey design");
        if (sorted_group_sizes(d.gdd) != std::vector<int>(3, n))
            return shape_fail("need three equal groups");
        if (static_cast<int>(d.gdd.hole1.size()) != 3 * m ||
            static_cast<int>(d.gdd.hole2.size()) != 3 * l)
            return shape_fail("hole sizes do not match the request");
        return verify_gdd_igdd(d);
    }
    if (key.kind == "frame") {
        if (d.kind != DesignKind::frame || d.gdd.lambda != p[2])
            return shape_fail("wrong shape for a frame");
        if (sorted_group_sizes(d.gdd) !=
            expected_type(static_cast<int>(p[0]), static_cast<int>(p[1]), 0))
            return shape_fail("group sizes do not match the requested type");
        return check_classed_gdd(d, ClassKind::frame);
    }
    if (key.kind == "eframe31" || key.kind == "eframe") {
        int h = key.kind == "eframe" ? static_cast<int>(p[0]) : 6;
        int n = static_cast<int>(key.kind == "eframe" ? p[1] : p[0]);
        int m = static_cast<int>(key.kind == "eframe" ? p[2] : p[1]);
        int lambda = key.kind == "eframe" ? static_cast<int>(p[3]) : 1;
        if (d.kind != DesignKind::eframe || d.gdd.lambda != lambda)
            return shape_fail("wrong shape for an eframe");
        const auto& groups = d.gdd.groups;
        if (static_cast<int>(groups.size()) != n + 1)
            return shape_fail("wrong group count for an eframe");
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(groups[i].size()) != h)
                return shape_fail("full groups must have the stated size");
        if (static_cast<int>(groups.back().size()) != m)
            return shape_fail("final group must have the stated size");
        return check_classed_gdd(d, ClassKind::eframe);
    }
    if (key.kind == "TD5") {
        int n = static_cast<int>(p[0]);
        if (d.gdd.v != 5 * n) return shape_fail("wrong order for a transversal design");
        return verify_td(d);
    }
    return shape_fail("unknown ingredient kind " + key.kind);
}

}  // namespace

// ---------------------------------------------------------------- scaling

StructuredDesign scale_copies(const StructuredDesign& base, int lambda) {
    if (lambda < 1) throw std::invalid_argument("copy count must be positive");
    StructuredDesign out = base;
    if (lambda == 1) return out;
    if (out.kind == DesignKind::its)
        out.its.lambda *= lambda;
    else
        out.gdd.lambda *= lambda;
    BlockMultiset blocks;
    for (const auto& [t, c] : base.blocks.entries()) blocks.add(t, c * lambda);
    out.blocks = blocks;
    out.classes.clear();
    for (int r = 0; r < lambda; ++r)
        for (const auto& cls : base.classes) {
            DesignClass copy = cls;
            copy.label = cls.label + "x" + std::to_string(r);
            out.classes.push_back(std::move(copy));
        }
    out.trace.push_back("scaled to " + std::to_string(lambda) + " copies");
    return out;
}

StructuredDesign eframe_multiply(const StructuredDesign& base, int lambda) {
    if (base.kind != DesignKind::eframe || base.gdd.lambda != 1)
        throw std::invalid_argument("expected a unit-index eframe");
    if (lambda < 2 || lambda % 2 != 0) throw std::invalid_argument("target index must be even");
    StructuredDesign out = base;
    out.gdd.lambda = lambda;
    BlockMultiset blocks;
    for (const auto& [t, c] : base.blocks.entries()) blocks.add(t, c * lambda);
    out.blocks = blocks;
    out.classes.clear();
    int last = static_cast<int>(base.gdd.groups.size()) - 1;
    for (const auto& cls : base.classes) {
        if (cls.group == last) {
            // 1-partial classes repeat verbatim, lambda per original
            for (int r = 0; r < lambda; ++r) {
                DesignClass copy = cls;
                copy.label = cls.label + "x" + std::to_string(r);
                out.classes.push_back(std::move(copy));
            }
        } else {
            // two copies of a half-weight class merge into one full class
            DesignClass merged = cls;
            merged.alpha = cls.alpha * 2;
            merged.blocks = BlockMultiset{};
            for (const auto& [t, c] : cls.blocks.entries()) merged.blocks.add(t, 2 * c);
            for (int r = 0; r < lambda / 2; ++r) {
                DesignClass copy = merged;
                copy.label = cls.label + "x" + std::to_string(r);
                out.classes.push_back(copy);
            }
        }
    }
    out.trace.push_back("eframe raised to index " + std::to_string(lambda));
    return out;
}

// ------------------------------------------------------------ field + TD

namespace {

struct SmallField {
    int q = 0, p = 0, k = 0;
    std::vector<int> red;  // x^k expressed in lower powers, digits mod p

    int add(int a, int b) const {
        if (k == 1) return (a + b) % p;
        int out = 0, place = 1;
        for (int i = 0; i < k; ++i) {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        return out;
    }

    int mul(int a, int b) const {
        if (k == 1) return static_cast<int>(static_cast<long long>(a) * b % p);
        std::vector<int> da(k, 0), db(k, 0), conv(2 * k - 1, 0);
        for (int i = 0; i < k; ++i) {
            da[i] = a % p;
            a /= p;
            db[i] = b % p;
            b /= p;
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p;
        for (int d = 2 * k - 2; d >= k; --d) {
            int c = conv[d];
            if (c == 0) continue;
            conv[d] = 0;
            for (int i = 0; i < k; ++i) conv[d - k + i] = (conv[d - k + i] + c * red[i]) % p;
        }
        int out = 0, place = 1;
        for (int i = 0; i < k; ++i) {
            out += conv[i] * place;
            place *= p;
        }
        return out;
    }
};

std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::make_pair(q, 1);
    int k = 0, x = q;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    if (x != 1) return std::nullopt;
    return std::make_pair(p, k);
}

std::optional<SmallField> make_field(int q) {
    auto pk = prime_power(q);
    if (!pk) return std::nullopt;
    auto [p, k] = *pk;
    if (k == 1) return SmallField{q, p, 1, {}};
    static const std::map<std::pair<int, int>, std::vector<int>> reductions = {
        {{2, 2}, {1, 1}},          {{2, 3}, {1, 1, 0}},    {{2, 4}, {1, 1, 0, 0}},
        {{2, 5}, {1, 0, 1, 0, 0}}, {{3, 2}, {2, 0}},       {{3, 3}, {2, 1, 0}},
        {{5, 2}, {3, 0}},          {{7, 2}, {6, 0}},
    };
    auto it = reductions.find({p, k});
    if (it == reductions.end()) return std::nullopt;
    return SmallField{q, p, k, it->second};
}

// Block rows of a 5-group transversal design, one symbol per group.
std::vector<std::array<int, 5>> td_rows(int n) {
    if (auto F = make_field(n)) {
        std::vector<std::array<int, 5>> rows;
        rows.reserve(static_cast<size_t>(n) * n);
        if (n >= 5) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    std::array<int, 5> r{};
                    for (int i = 0; i < 5; ++i) r[i] = F->add(a, F->mul(i, b));
                    rows.push_back(r);
                }
            return rows;
        }
        if (n == 4) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    std::array<int, 5> r{};
                    for (int i = 0; i < 4; ++i) r[i] = F->add(a, F->mul(i, b));
                    r[4] = b;
                    rows.push_back(r);
                }
            return rows;
        }
    }
    // composite order: product of coprime prime-power parts
    auto pk = prime_power(n);
    if (pk)
        throw NoPathError("no construction route for a transversal design of order " +
                          std::to_string(n));
    int q = 0;
    {
        int x = n;
        for (int d = 2; d <= x; ++d)
            if (x % d == 0) {
                q = 1;
                while (x % d == 0) {
                    x /= d;
                    q *= d;
                }
                break;
            }
    }
    int rest = n / q;
    if (q < 4 || rest < 4)
        throw NoPathError("no construction route for a transversal design of order " +
                          std::to_string(n) + ": a factor is too small");
    auto left = td_rows(q);
    auto right = td_rows(rest);
    std::vector<std::array<int, 5>> rows;
    rows.reserve(left.size() * right.size());
    for (const auto& a : left)
        for (const auto& b : right) {
            std::array<int, 5> r{};
            for (int i = 0; i < 5; ++i) r[i] = a[i] * rest + b[i];
            rows.push_back(r);
        }
    return rows;
}

}  // namespace

VerifyResult verify_td(const StructuredDesign& design) {
    if (design.kind != DesignKind::td) return shape_fail("not a transversal design");
    const GddSpec& spec = design.gdd;
    int v = spec.v;
    if (spec.lambda != 1) return shape_fail("transversal designs here have unit index");
    if (spec.groups.size() != 5) return shape_fail("need exactly five groups");
    std::vector<int> owner(v, -1);
    for (size_t g = 0; g < spec.groups.size(); ++g) {
        if (spec.groups[g].size() != spec.groups[0].size())
            return shape_fail("groups must share one size");
        for (int x : spec.groups[g]) {
            if (x < 0 || x >= v || owner[x] != -1) return shape_fail("groups must partition points");
            owner[x] = static_cast<int>(g);
        }
    }
    for (int x = 0; x < v; ++x)
        if (owner[x] == -1) return shape_fail("point outside every group");
    long long n = static_cast<long long>(spec.groups[0].size());
    if (static_cast<long long>(design.td_blocks.size()) != n * n)
        return shape_fail("wrong block count");
    std::vector<int> cnt(static_cast<size_t>(v) * v, 0);
    for (const auto& row : design.td_blocks) {
        std::set<int> gs;
        for (int x : row) {
            if (x < 0 || x >= v) return shape_fail("block point out of range");
            gs.insert(owner[x]);
        }
        if (gs.size() != 5) return shape_fail("a block must meet every group once");
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                int a = std::min(row[i], row[j]), b = std::max(row[i], row[j]);
                cnt[static_cast<size_t>(a) * v + b]++;
            }
    }
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            int want = owner[x] == owner[y] ? 0 : 1;
            int got = cnt[static_cast<size_t>(x) * v + y];
            if (got != want) {
                VerifyResult r;
                r.x = x;
                r.y = y;
                r.observed = got;
                r.expected = want;
                r.detail = "pair coverage mismatch";
                return r;
            }
        }
    return ok_shape();
}

// --------------------------------------------------------- direct recipes

namespace {

// Full triple system on 3t points from a symmetric idempotent quasigroup.
BlockMultiset bose_blocks(int v) {
    int n = v / 3;  // odd
    int half = (n + 1) / 2;
    BlockMultiset out;
    for (int i = 0; i < n; ++i) out.add(make_triple(i, i + n, i + 2 * n));
    for (int k = 0; k < 3; ++k) {
        int kk = (k + 1) % 3;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int x = static_cast<int>(static_cast<long long>(i + j) * half % n);
                out.add(make_triple(i + k * n, j + k * n, x + kk * n));
            }
    }
    return out;
}

StructuredDesign wrap_ts(int v, int lambda, BlockMultiset blocks, const std::string& note) {
    StructuredDesign d;
    d.kind = DesignKind::its;
    d.its.v = v;
    d.its.lambda = lambda;
    d.its.holes = {{}, {}};
    d.blocks = std::move(blocks);
    d.trace.push_back(note);
    return d;
}

// One full sweep of difference classes on an odd order: class d holds the
// translates of {0, d, 2d} and covers every point three times; the union of
// all (v-1)/2 classes covers every pair exactly three times.
std::vector<BlockMultiset> circulant_sweep(int v) {
    std::vector<BlockMultiset> classes;
    for (int d = 1; 2 * d < v; ++d) {
        BlockMultiset cls;
        for (int i = 0; i < v; ++i) cls.add(make_triple(i, (i + d) % v, (i + 2 * d) % v));
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::vector<int>> singleton_groups(int v) {
    std::vector<std::vector<int>> g;
    g.reserve(v);
    for (int x = 0; x < v; ++x) g.push_back({x});
    return g;
}

std::vector<std::vector<int>> block_groups(int g, int t, int w) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < t; ++i) {
        std::vector<int> grp;
        for (int j = 0; j < g; ++j) grp.push_back(i * g + j);
        out.push_back(std::move(grp));
    }
    if (w > 0) {
        std::vector<int> grp;
        for (int j = 0; j < w; ++j) grp.push_back(g * t + j);
        out.push_back(std::move(grp));
    }
    return out;
}

std::vector<int> complement_of(const std::vector<int>& grp, int v) {
    std::vector<char> in(v, 0);
    for (int x : grp) in[x] = 1;
    std::vector<int> out;
    for (int x = 0; x < v; ++x)
        if (!in[x]) out.push_back(x);
    return out;
}

// Backtracking search for a starter set of disjoint triples on Z_v minus the
// subgroup nZ, hitting each admissible difference a prescribed number of times.
struct StarterSearch {
    int v = 0;
    std::vector<int> quota;  // per difference class 1..v/2
    std::vector<char> used;
    std::vector<Triple> out;
    long long nodes = 0;
    long long cap = 2000000;

    int dclass(int a, int b) const {
        int d = b - a;
        return std::min(d, v - d);
    }

    bool place() {
        if (++nodes > cap) return false;
        int x = -1;
        for (int i = 0; i < v; ++i)
            if (!used[i]) {
                x = i;
                break;
            }
        if (x < 0) return true;
        used[x] = 1;
        for (int y = x + 1; y < v; ++y) {
            if (used[y] || quota[dclass(x, y)] == 0) continue;
            int d1 = dclass(x, y);
            quota[d1]--;
            used[y] = 1;
            for (int z = y + 1; z < v; ++z) {
                if (used[z]) continue;
                int d2 = dclass(x, z);
                int d3 = dclass(y, z);
                if (d2 == d3) {
                    if (quota[d2] < 2) continue;
                } else if (quota[d2] == 0 || quota[d3] == 0) {
                    continue;
                }
                quota[d2]--;
                quota[d3]--;
                used[z] = 1;
                out.push_back(make_triple(x, y, z));
                if (place()) return true;
                out.pop_back();
                used[z] = 0;
                quota[d2]++;
                quota[d3]++;
            }
            used[y] = 0;
            quota[d1]++;
        }
        used[x] = 0;
        return false;
    }
};

// Index-two frame on Z_{gn} with groups the cosets of nZ: translating a
// starter set around the cycle yields one partial class per element, and the
// class at j leaves exactly the coset of j uncovered.
std::optional<StructuredDesign> cyclic_frame(int g, int n) {
    int v = g * n;
    if ((v - g) % 3 != 0) return std::nullopt;
    StarterSearch ss;
    ss.v = v;
    ss.used.assign(v, 0);
    for (int k = 0; k < g; ++k) ss.used[k * n] = 1;
    ss.quota.assign(v / 2 + 1, 0);
    for (int d = 1; 2 * d <= v; ++d) {
        if (d % n == 0) continue;
        ss.quota[d] = (2 * d == v) ? 1 : 2;
    }
    if (!ss.place()) return std::nullopt;
    auto relabel = [&](int p) { return (p % n) * g + p / n; };
    StructuredDesign d;
    d.kind = DesignKind::frame;
    d.gdd.v = v;
    d.gdd.lambda = 2;
    d.gdd.groups = block_groups(g, n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < g; ++k) {
            int j = k * n + i;
            DesignClass cls;
            cls.label = "g" + std::to_string(i) + "c" + std::to_string(k);
            cls.alpha = 1;
            cls.group = i;
            for (const Triple& t : ss.out)
                cls.blocks.add(make_triple(relabel((t[0] + j) % v), relabel((t[1] + j) % v),
                                           relabel((t[2] + j) % v)));
            d.blocks.add(cls.blocks);
            d.classes.push_back(std::move(cls));
        }
    d.trace.push_back("cyclic starter with " + std::to_string(ss.out.size()) + " base triples");
    return d;
}

}  // namespace

// ----------------------------------------------------------- orbit expand

namespace {

Triple apply_pow(const std::vector<int>& perm, int power, const std::array<int, 3>& b) {
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        int x = b[i];
        for (int c = 0; c < power; ++c) x = perm.at(x);
        out[i] = x;
    }
    return make_triple(out[0], out[1], out[2]);
}

int missed_group(const std::vector<std::vector<int>>& groups, const std::vector<int>& cover) {
    int found = -1;
    for (size_t g = 0; g < groups.size(); ++g) {
        bool zero = true;
        for (int x : groups[g])
            if (cover[x] != 0) {
                zero = false;
                break;
            }
        if (zero) {
            if (found != -1) return -1;  // ambiguous
            found = static_cast<int>(g);
        }
    }
    return found;
}

}  // namespace

StructuredDesign develop_orbit(const BaseBlockOrbit& o) {
    int v = o.npoints;
    if (v <= 0) throw std::invalid_argument("orbit needs a positive point count");
    if (static_cast<int>(o.perm.size()) != v)
        throw std::invalid_argument("permutation size does not match the point count");
    {
        std::vector<char> seen(v, 0);
        for (int x : o.perm) {
            if (x < 0 || x >= v || seen[x]) throw std::invalid_argument("malformed permutation");
            seen[x] = 1;
        }
    }
    if (o.n_first < 0 || o.n_first > static_cast<int>(o.base.size()))
        throw std::invalid_argument("bad base block split");
    if (o.first_len < 0 || o.n_translates < 0)
        throw std::invalid_argument("bad development lengths");

    std::vector<std::pair<int, BlockMultiset>> classes;  // alpha, blocks
    if (o.joint_first) {
        BlockMultiset cls;
        for (int c = 0; c < o.first_len; ++c)
            for (int i = 0; i < o.n_first; ++i) cls.add(apply_pow(o.perm, c, o.base[i]));
        classes.emplace_back(o.first_alpha, std::move(cls));
    } else {
        for (int i = 0; i < o.n_first; ++i) {
            BlockMultiset cls;
            for (int c = 0; c < o.first_len; ++c) cls.add(apply_pow(o.perm, c, o.base[i]));
            classes.emplace_back(o.first_alpha, std::move(cls));
        }
    }
    std::vector<Triple> expanded;
    for (int pw : o.pre_powers)
        for (size_t i = o.n_first; i < o.base.size(); ++i)
            expanded.push_back(apply_pow(o.perm, pw, o.base[i]));
    for (int c = 0; c < o.n_translates; ++c) {
        BlockMultiset cls;
        for (const Triple& t : expanded) cls.add(apply_pow(o.perm, c, {t[0], t[1], t[2]}));
        classes.emplace_back(o.rest_alpha, std::move(cls));
    }

    StructuredDesign d;
    d.kind = o.kind == cat::OrbitKind::Eframe ? DesignKind::eframe : DesignKind::gdd;
    d.gdd.v = v;
    d.gdd.lambda = o.lambda;
    d.gdd.groups = o.groups;
    int idx = 0;
    for (auto& [alpha, blocks] : classes) {
        std::vector<int> cover(v, 0);
        for (const auto& [t, c] : blocks.entries())
            for (int x : t) cover[x] += c;
        DesignClass cls;
        cls.label = "c" + std::to_string(idx++);
        cls.alpha = alpha;
        cls.group = missed_group(d.gdd.groups, cover);
        cls.blocks = blocks;
        d.blocks.add(blocks);
        d.classes.push_back(std::move(cls));
    }
    d.trace.push_back("developed from " + std::to_string(o.base.size()) + " base blocks");
    return d;
}

// --------------------------------------------------------------- catalog

namespace {

struct CatalogIndex {
    std::map<std::array<long long, 7>, int> its;     // v,lambda,w,u,y,z1,z2
    std::map<std::array<long long, 4>, int> eframe;  // h,n,m,lambda
    std::map<std::array<long long, 4>, int> gddc;    // g,t,w,lambda
};

const CatalogIndex& catalog_index() {
    static CatalogIndex ix = [] {
        CatalogIndex b;
        const auto& its = cat::its_entries();
        for (size_t i = 0; i < its.size(); ++i) {
            ItsSpec spec;
            spec.v = its[i].v;
            spec.lambda = its[i].lambda;
            spec.holes = its[i].holes;
            b.its[{spec.v, spec.lambda, spec.w(), spec.u(), spec.y(), spec.z1(), spec.z2()}] =
                static_cast<int>(i);
        }
        const auto& orbits = cat::orbit_entries();
        for (size_t i = 0; i < orbits.size(); ++i) {
            const auto& o = orbits[i];
            if (o.kind == cat::OrbitKind::Eframe)
                b.eframe[{o.h, o.n, o.m, o.lambda}] = static_cast<int>(i);
            else
                b.gddc[{o.h, o.n, o.m, o.lambda}] = static_cast<int>(i);
        }
        return b;
    }();
    return ix;
}

}  // namespace

std::optional<StructuredDesign> catalog_lookup(const IngredientKey& key) {
    auto& mem = mem_cache();
    if (auto it = mem.find(key.canonical()); it != mem.end()) return it->second;
    const auto& ix = catalog_index();
    const auto& p = key.params;
    std::optional<StructuredDesign> built;
    if (key.kind == "its" && p.size() == 7) {
        auto it = ix.its.find({p[0], p[1], p[2], p[3], p[4], p[5], p[6]});
        if (it == ix.its.end()) return std::nullopt;
        const auto& e = cat::its_entries()[it->second];
        StructuredDesign d;
        d.kind = DesignKind::its;
        d.its.v = e.v;
        d.its.lambda = e.lambda;
        d.its.holes = e.holes;
        for (const auto& b : e.blocks) d.blocks.add(make_triple(b[0], b[1], b[2]), b[3]);
        d.trace.push_back("embedded block table");
        built = std::move(d);
    } else if (key.kind == "eframe" && p.size() == 4) {
        auto it = ix.eframe.find({p[0], p[1], p[2], p[3]});
        if (it == ix.eframe.end()) return std::nullopt;
        built = develop_orbit(cat::orbit_entries()[it->second]);
        built->trace.push_back("embedded base blocks");
    } else if (key.kind == "GDD" && p.size() == 4) {
        auto it = ix.gddc.find({p[0], p[1], p[2], p[3]});
        if (it == ix.gddc.end()) return std::nullopt;
        built = develop_orbit(cat::orbit_entries()[it->second]);
        built->trace.push_back("embedded base blocks");
    } else {
        return std::nullopt;
    }
    VerifyResult vr = check_for_key(key, *built);
    if (!vr)
        throw VerifyFailure("embedded catalog entry failed certification for " + key.canonical() +
                            ": " + vr.detail);
    mem[key.canonical()] = *built;
    return built;
}

// -------------------------------------------------------------- providers

StructuredDesign get_ts(int v, int lambda) {
    if (v < 0 || lambda < 1) throw std::invalid_argument("order and index must be positive");
    if (v == 2) throw InadmissibleError("inadmissible: no triple fits on two points");
    if (v >= 3) {
        int need = std::gcd(v - 2, 6);
        if (lambda % need != 0)
            throw InadmissibleError("inadmissible: index must be a multiple of " +
                                    std::to_string(need) + " at order " + std::to_string(v));
    }
    if (v < 3) return wrap_ts(v, lambda, {}, "degenerate order");
    IngredientKey key = IngredientKey::ts(v, lambda);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    int base_lambda = std::gcd(v - 2, 6);
    auto attempt = [&](const ProviderTactic& t) -> std::optional<StructuredDesign> {
        switch (t.kind) {
            case ProviderTactic::Kind::direct:
                if (lambda > base_lambda) {
                    StructuredDesign base = get_ts(v, base_lambda);
                    StructuredDesign out = scale_copies(base, lambda / base_lambda);
                    return out;
                }
                if (v % 6 == 3)
                    return wrap_ts(v, lambda, bose_blocks(v), "quasigroup construction");
                return std::nullopt;
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                auto opts = search_options(t, 400000 + 500LL * v * v, 40);
                auto sol = solve_cover(CoverProblem::all_pairs(v, lambda), opts);
                if (!sol) return std::nullopt;
                return wrap_ts(v, lambda, std::move(*sol), "pair cover search");
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the full triple system " + key.canonical());
}

StructuredDesign get_one_hole_its(int v, int w, int lambda) {
    if (v < 0 || w < 0 || lambda < 1) throw std::invalid_argument("sizes must be nonnegative");
    if (w > v) throw std::invalid_argument("hole exceeds the point set");
    if (w == 0) return get_ts(v, lambda);
    if (w == v) {
        StructuredDesign d;
        d.kind = DesignKind::its;
        d.its.v = v;
        d.its.lambda = lambda;
        std::vector<int> hole(v);
        for (int i = 0; i < v; ++i) hole[i] = i;
        d.its.holes = {hole, {}};
        d.trace.push_back("hole equals the point set");
        return d;
    }
    if (v < 2 * w + 1)
        throw InadmissibleError("inadmissible: order must be at least twice the hole plus one");
    if (lambda * (choose2(v) - choose2(w)) % 3 != 0)
        throw InadmissibleError("inadmissible: covered pair count is not divisible by three");
    if (lambda * (v - 1) % 2 != 0 || lambda * (v - w) % 2 != 0)
        throw InadmissibleError("inadmissible: an odd point degree is forced");
    IngredientKey key = IngredientKey::one_hole_its(v, w, lambda);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    ItsSpec spec;
    spec.v = v;
    spec.lambda = lambda;
    std::vector<int> hole;
    for (int i = v - w; i < v; ++i) hole.push_back(i);
    spec.holes = {hole, {}};
    auto attempt = [&](const ProviderTactic& t) -> std::optional<StructuredDesign> {
        switch (t.kind) {
            case ProviderTactic::Kind::direct:
                return std::nullopt;
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                auto opts = search_options(t, 400000 + 500LL * v * v, 40);
                auto sol = solve_cover(CoverProblem::from_its(spec), opts);
                if (!sol) return std::nullopt;
                StructuredDesign d;
                d.kind = DesignKind::its;
                d.its = spec;
                d.blocks = std::move(*sol);
                d.trace.push_back("pair cover search");
                return d;
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the one-hole system " + key.canonical());
}

StructuredDesign get_three_resolvable_ts(int v, int lambda) {
    if (v < 0 || lambda < 1) throw std::invalid_argument("order and index must be positive");
    if (v == 2) throw InadmissibleError("inadmissible: no triple fits on two points");
    if (static_cast<long long>(lambda) * (v - 1) % 6 != 0)
        throw InadmissibleError(
            "inadmissible: index times one less than the order must be a multiple of six");
    long long nclasses = static_cast<long long>(lambda) * (v - 1) / 6;
    auto wrap = [&](std::vector<DesignClass> classes, const std::string& note) {
        StructuredDesign d;
        d.kind = DesignKind::resolvable;
        d.gdd.v = v;
        d.gdd.lambda = lambda;
        d.gdd.groups = singleton_groups(v);
        d.classes = std::move(classes);
        for (const auto& c : d.classes) d.blocks.add(c.blocks);
        d.trace.push_back(note);
        return d;
    };
    if (v < 3) return wrap({}, "degenerate order");
    IngredientKey key = IngredientKey::three_resolvable_ts(v, lambda);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& t) -> std::optional<StructuredDesign> {
        switch (t.kind) {
            case ProviderTactic::Kind::direct: {
                if (v % 2 == 1 && lambda % 3 == 0) {
                    std::vector<DesignClass> classes;
                    auto sweep = circulant_sweep(v);
                    for (int r = 0; r < lambda / 3; ++r)
                        for (size_t i = 0; i < sweep.size(); ++i) {
                            DesignClass c;
                            c.label = "r" + std::to_string(classes.size());
                            c.alpha = 3;
                            c.blocks = sweep[i];
                            classes.push_back(std::move(c));
                        }
                    return wrap(std::move(classes), "difference class sweep");
                }
                if (nclasses == 1) {
                    StructuredDesign ts = get_ts(v, lambda);
                    DesignClass c;
                    c.label = "r0";
                    c.alpha = 3;
                    c.blocks = ts.blocks;
                    return wrap({std::move(c)}, "single-class resolution");
                }
                return std::nullopt;
            }
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                ClassCoverProblem prob;
                prob.n = v;
                prob.target = CoverProblem::all_pairs(v, lambda).target;
                std::vector<int> all(v);
                for (int x = 0; x < v; ++x) all[x] = x;
                for (long long i = 0; i < nclasses; ++i) prob.slots.push_back({3, all});
                auto opts = search_options(t, 800000 + 2000LL * v * v, 40);
                auto sol = solve_class_cover(prob, opts);
                if (!sol) return std::nullopt;
                std::vector<DesignClass> classes;
                for (size_t i = 0; i < sol->size(); ++i) {
                    DesignClass c;
                    c.label = "r" + std::to_string(i);
                    c.alpha = 3;
                    c.blocks = std::move((*sol)[i]);
                    classes.push_back(std::move(c));
                }
                return wrap(std::move(classes), "class cover search");
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the resolvable system " + key.canonical());
}

StructuredDesign get_gdd(int g, int t, int w, int lambda) {
    if (g < 0 || t < 0 || w < 0 || lambda < 1)
        throw std::invalid_argument("sizes must be nonnegative");
    if (g > 0 && !(t >= 3 || (t == 2 && w == g) || (t == 1 && w == 0) || t == 0))
        throw InadmissibleError("inadmissible: too few groups for this type");
    if (g * t > 0 && w > g * (t - 1))
        throw InadmissibleError("inadmissible: the last group is too large for this type");
    if (g * t > 0 && static_cast<long long>(lambda) * (g * (t - 1) + w) % 2 != 0)
        throw InadmissibleError("inadmissible: an odd point degree is forced in a full group");
    if (w > 0 && static_cast<long long>(lambda) * g * t % 2 != 0)
        throw InadmissibleError("inadmissible: an odd point degree is forced in the last group");
    long long pair6 = static_cast<long long>(lambda) *
                      (static_cast<long long>(g) * g * t * (t - 1) / 2 +
                       static_cast<long long>(g) * t * w);
    if (pair6 % 3 != 0)
        throw InadmissibleError("inadmissible: covered pair count is not divisible by three");

    GddSpec spec;
    spec.v = g * t + w;
    spec.lambda = lambda;
    spec.groups = block_groups(g, t, w);
    auto wrap = [&](BlockMultiset blocks, const std::string& note) {
        StructuredDesign d;
        d.kind = DesignKind::gdd;
        d.gdd = spec;
        d.blocks = std::move(blocks);
        d.trace.push_back(note);
        return d;
    };
    if (g == 0 || t == 0 || (t == 1 && w == 0)) return wrap({}, "single-group type");
    IngredientKey key = IngredientKey::gdd(g, t, w, lambda);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& tac) -> std::optional<StructuredDesign> {
        switch (tac.kind) {
            case ProviderTactic::Kind::direct:
                return std::nullopt;
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                auto opts = search_options(tac, 400000 + 500LL * spec.v * spec.v, 40);
                auto sol = solve_cover(CoverProblem::from_gdd(spec), opts);
                if (!sol) return std::nullopt;
                return wrap(std::move(*sol), "pair cover search");
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the group divisible design " + key.canonical());
}

StructuredDesign get_igdd_3part(int n, int m, int l, int lambda) {
    if (n < 0 || m < 0 || l < 0 || lambda < 1)
        throw std::invalid_argument("sizes must be nonnegative");
    if (m < l) throw InadmissibleError("inadmissible: the second hole may not exceed the first");
    if (n < 2 * m + l)
        throw InadmissibleError(
            "inadmissible: each group must be at least twice the first hole plus the second");
    GddSpec spec;
    spec.v = 3 * n;
    spec.lambda = lambda;
    for (int gi = 0; gi < 3; ++gi) {
        std::vector<int> grp;
        for (int j = 0; j < n; ++j) grp.push_back(gi * n + j);
        spec.groups.push_back(std::move(grp));
        for (int j = 0; j < m; ++j) spec.hole1.push_back(gi * n + j);
        for (int j = 0; j < l; ++j) spec.hole2.push_back(gi * n + m + j);
    }
    auto wrap = [&](BlockMultiset blocks, const std::string& note) {
        StructuredDesign d;
        d.kind = DesignKind::igdd;
        d.gdd = spec;
        d.blocks = std::move(blocks);
        d.trace.push_back(note);
        return d;
    };
    if (n == 0) return wrap({}, "degenerate type");
    IngredientKey key = IngredientKey::igdd_3part(n, m, l, lambda);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& tac) -> std::optional<StructuredDesign> {
        switch (tac.kind) {
            case ProviderTactic::Kind::direct:
                if (lambda > 1) {
                    StructuredDesign base = get_igdd_3part(n, m, l, 1);
                    StructuredDesign out = scale_copies(base, lambda);
                    out.gdd = spec;
                    return out;
                }
                return std::nullopt;
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                auto opts = search_options(tac, 400000 + 500LL * spec.v * spec.v, 40);
                auto sol = solve_cover(CoverProblem::from_gdd(spec), opts);
                if (!sol) return std::nullopt;
                return wrap(std::move(*sol), "pair cover search");
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the holey three-group design " + key.canonical());
}

StructuredDesign get_frame(int g, int n, int lambda) {
    if (g < 1 || n < 0 || lambda < 1) throw std::invalid_argument("sizes must be positive");
    if (n < 4) throw InadmissibleError("inadmissible: a frame needs at least four groups");
    if (static_cast<long long>(lambda) * g % 2 != 0)
        throw InadmissibleError("inadmissible: index times group size must be even");
    if (static_cast<long long>(g) * (n - 1) % 3 != 0)
        throw InadmissibleError(
            "inadmissible: group size times one less than the group count must be a multiple of "
            "three");
    GddSpec spec;
    spec.v = g * n;
    spec.lambda = lambda;
    spec.groups = block_groups(g, n, 0);
    int per_group = lambda * g / 2;
    IngredientKey key = IngredientKey::frame(g, n, lambda);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& tac) -> std::optional<StructuredDesign> {
        switch (tac.kind) {
            case ProviderTactic::Kind::direct: {
                if (lambda == 2) return cyclic_frame(g, n);
                if (lambda % 2 == 0) {
                    try {
                        return scale_copies(get_frame(g, n, 2), lambda / 2);
                    } catch (const NoPathError&) {
                        return std::nullopt;
                    }
                }
                return std::nullopt;
            }
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                ClassCoverProblem prob;
                prob.n = spec.v;
                prob.target = CoverProblem::from_gdd(spec).target;
                for (int i = 0; i < n; ++i) {
                    auto allowed = complement_of(spec.groups[i], spec.v);
                    for (int j = 0; j < per_group; ++j) prob.slots.push_back({1, allowed});
                }
                auto opts = search_options(tac, 800000 + 2000LL * spec.v * spec.v, 40);
                auto sol = solve_class_cover(prob, opts);
                if (!sol) return std::nullopt;
                StructuredDesign d;
                d.kind = DesignKind::frame;
                d.gdd = spec;
                int slot = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < per_group; ++j) {
                        DesignClass c;
                        c.label = "g" + std::to_string(i) + "c" + std::to_string(j);
                        c.alpha = 1;
                        c.group = i;
                        c.blocks = std::move((*sol)[slot++]);
                        d.blocks.add(c.blocks);
                        d.classes.push_back(std::move(c));
                    }
                d.trace.push_back("class cover search");
                return d;
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the frame " + key.canonical());
}

StructuredDesign get_td5(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n < 4 || n == 6 || n == 10)
        throw InadmissibleError("inadmissible: no five-group transversal design of order " +
                                std::to_string(n));
    IngredientKey key = IngredientKey::td5(n);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& tac) -> std::optional<StructuredDesign> {
        switch (tac.kind) {
            case ProviderTactic::Kind::direct: {
                auto rows = td_rows(n);  // throws NoPathError when out of reach
                StructuredDesign d;
                d.kind = DesignKind::td;
                d.gdd.v = 5 * n;
                d.gdd.lambda = 1;
                d.gdd.groups = block_groups(n, 5, 0);
                for (const auto& r : rows) {
                    std::array<int, 5> row{};
                    for (int i = 0; i < 5; ++i) row[i] = i * n + r[i];
                    d.td_blocks.push_back(row);
                }
                d.trace.push_back("field and product construction");
                return d;
            }
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search:
                return std::nullopt;
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "no construction route for the transversal design " + key.canonical());
}

StructuredDesign get_eframe31(int n, int m) {
    if (m != 2 && m != 4 && m != 8)
        throw std::invalid_argument("final group size must be 2, 4, or 8");
    if (m == 8) {
        if (n != 9)
            throw InadmissibleError(
                "inadmissible: the final group of size eight is only provided at nine full "
                "groups");
    } else {
        static const std::set<int> excluded = {5, 6, 8, 10, 11, 14, 17};
        if (n < 4 || excluded.count(n))
            throw InadmissibleError("inadmissible: no eframe at this group count");
    }
    GddSpec spec;
    spec.v = 6 * n + m;
    spec.lambda = 1;
    spec.groups = block_groups(6, n, m);
    IngredientKey key = IngredientKey::eframe31(n, m);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& tac) -> std::optional<StructuredDesign> {
        switch (tac.kind) {
            case ProviderTactic::Kind::direct:
                return std::nullopt;
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                ClassCoverProblem prob;
                prob.n = spec.v;
                prob.target = CoverProblem::from_gdd(spec).target;
                for (int i = 0; i < n; ++i)
                    prob.slots.push_back({3, complement_of(spec.groups[i], spec.v)});
                auto tail = complement_of(spec.groups[n], spec.v);
                for (int j = 0; j < m / 2; ++j) prob.slots.push_back({1, tail});
                auto opts = search_options(tac, 2000000 + 4000LL * spec.v * spec.v, 60);
                auto sol = solve_class_cover(prob, opts);
                if (!sol) return std::nullopt;
                StructuredDesign d;
                d.kind = DesignKind::eframe;
                d.gdd = spec;
                for (int i = 0; i < n; ++i) {
                    DesignClass c;
                    c.label = "g" + std::to_string(i);
                    c.alpha = 3;
                    c.group = i;
                    c.blocks = std::move((*sol)[i]);
                    d.blocks.add(c.blocks);
                    d.classes.push_back(std::move(c));
                }
                for (int j = 0; j < m / 2; ++j) {
                    DesignClass c;
                    c.label = "t" + std::to_string(j);
                    c.alpha = 1;
                    c.group = n;
                    c.blocks = std::move((*sol)[n + j]);
                    d.blocks.add(c.blocks);
                    d.classes.push_back(std::move(c));
                }
                d.trace.push_back("class cover search");
                return d;
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the eframe " + key.canonical());
}

StructuredDesign get_lambda1_its(int v, int w, int u) {
    if (v < 0 || w < 0 || u < 0) throw std::invalid_argument("sizes must be nonnegative");
    if (w + u > v) throw std::invalid_argument("holes exceed the point set");
    if (v % 2 == 0 || w % 2 == 0 || u % 2 == 0)
        throw InadmissibleError("inadmissible: the order and both holes must be odd");
    if (v < w + u + std::max(w, u))
        throw InadmissibleError("inadmissible: order too small for these holes");
    if ((choose2(v) - choose2(w) - choose2(u)) % 3 != 0)
        throw InadmissibleError("inadmissible: covered pair count is not divisible by three");
    ItsSpec spec;
    spec.v = v;
    spec.lambda = 1;
    std::vector<int> first, second;
    for (int i = v - w; i < v; ++i) first.push_back(i);
    for (int i = v - w - u; i < v - w; ++i) second.push_back(i);
    spec.holes = {first, second};
    IngredientKey key = IngredientKey::lambda1_its(v, w, u);
    auto check = [&](const StructuredDesign& d) { return check_for_key(key, d); };
    auto attempt = [&](const ProviderTactic& tac) -> std::optional<StructuredDesign> {
        switch (tac.kind) {
            case ProviderTactic::Kind::direct:
                return std::nullopt;
            case ProviderTactic::Kind::catalog:
                return catalog_lookup(key);
            case ProviderTactic::Kind::search: {
                auto opts = search_options(tac, 400000 + 500LL * v * v, 40);
                auto sol = solve_cover(CoverProblem::from_its(spec), opts);
                if (!sol) return std::nullopt;
                StructuredDesign d;
                d.kind = DesignKind::its;
                d.its = spec;
                d.blocks = std::move(*sol);
                d.trace.push_back("pair cover search");
                return d;
            }
        }
        return std::nullopt;
    };
    return provide(key, check, attempt,
                   "search budget exhausted for the two-hole system " + key.canonical());
}

}  // namespace triholes
