#include "triholes/model.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace triholes {

Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("block with a repeated point");
    if (t[0] < 0)
        throw std::invalid_argument("negative point label");
    return t;
}

void BlockMultiset::add(const Triple& t, int count) {
    if (count <= 0) throw std::invalid_argument("nonpositive block count");
    if (t[0] >= t[1] || t[1] >= t[2])
        throw std::invalid_argument("unsorted block");
    entries_[t] += count;
    total_ += count;
}

void BlockMultiset::add(const BlockMultiset& other) {
    for (const auto& [t, c] : other.entries_) add(t, c);
}

void BlockMultiset::remove(const Triple& t, int count) {
    auto it = entries_.find(t);
    if (it == entries_.end() || it->second < count)
        throw std::logic_error("removing a block that is not present");
    it->second -= count;
    total_ -= count;
    if (it->second == 0) entries_.erase(it);
}

int BlockMultiset::count(const Triple& t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? 0 : it->second;
}

long long BlockMultiset::size() const { return total_; }

void MultiGraph::add_edge(int x, int y, int count) {
    if (x == y) throw std::invalid_argument("loop edge");
    if (count <= 0) throw std::invalid_argument("nonpositive edge count");
    adj_.at(x)[y] += count;
    adj_.at(y)[x] += count;
    deg_[x] += count;
    deg_[y] += count;
    edges_ += count;
}

void MultiGraph::remove_edge(int x, int y, int count) {
    auto it = adj_.at(x).find(y);
    if (it == adj_.at(x).end() || it->second < count)
        throw std::logic_error("removing an edge that is not present");
    it->second -= count;
    if (it->second == 0) adj_[x].erase(it);
    auto jt = adj_.at(y).find(x);
    jt->second -= count;
    if (jt->second == 0) adj_[y].erase(jt);
    deg_[x] -= count;
    deg_[y] -= count;
    edges_ -= count;
}

int MultiGraph::multiplicity(int x, int y) const {
    auto it = adj_.at(x).find(y);
    return it == adj_.at(x).end() ? 0 : it->second;
}

int MultiGraph::max_degree() const {
    int d = 0;
    for (int x : deg_) d = std::max(d, x);
    return d;
}

int MultiGraph::max_multiplicity() const {
    int m = 0;
    for (const auto& nb : adj_)
        for (const auto& [y, c] : nb) m = std::max(m, c);
    return m;
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> sa(a.begin(), a.end());
    int n = 0;
    for (int x : b) n += sa.count(x);
    return n;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

VerifyResult fail(std::string detail) {
    VerifyResult r;
    r.detail = std::move(detail);
    return r;
}

VerifyResult fail_pair(int x, int y, int observed, int expected) {
    VerifyResult r;
    r.x = x;
    r.y = y;
    r.observed = observed;
    r.expected = expected;
    r.detail = "pair {" + std::to_string(x) + "," + std::to_string(y) + "} covered " +
               std::to_string(observed) + " times, expected " + std::to_string(expected);
    return r;
}

VerifyResult ok_result() {
    VerifyResult r;
    r.ok = true;
    return r;
}

// Shared exact pair-coverage check against a target multiplicity matrix.
VerifyResult check_pair_counts(int v, const BlockMultiset& blocks,
                               const std::vector<int>& target) {
    std::vector<int> cnt(static_cast<size_t>(v) * v, 0);
    for (const auto& [t, c] : blocks.entries()) {
        if (t[2] >= v) return fail("block point out of range");
        cnt[static_cast<size_t>(t[0]) * v + t[1]] += c;
        cnt[static_cast<size_t>(t[0]) * v + t[2]] += c;
        cnt[static_cast<size_t>(t[1]) * v + t[2]] += c;
    }
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            size_t i = static_cast<size_t>(x) * v + y;
            if (cnt[i] != target[i]) return fail_pair(x, y, cnt[i], target[i]);
        }
    return ok_result();
}

bool valid_point_set(const std::vector<int>& s, int v) {
    std::set<int> seen;
    for (int x : s) {
        if (x < 0 || x >= v || !seen.insert(x).second) return false;
    }
    return true;
}

void zero_within(std::vector<int>& target, const std::vector<int>& hole, int v) {
    for (size_t i = 0; i < hole.size(); ++i)
        for (size_t j = i + 1; j < hole.size(); ++j) {
            int a = std::min(hole[i], hole[j]);
            int b = std::max(hole[i], hole[j]);
            target[static_cast<size_t>(a) * v + b] = 0;
        }
}

}  // namespace

int ItsSpec::z() const {
    return holes.size() >= 2 ? intersection_size(holes[0], holes[1]) : 0;
}

int ItsSpec::z1() const {
    return holes.size() >= 3 ? intersection_size(holes[0], holes[2]) : 0;
}

int ItsSpec::z2() const {
    return holes.size() >= 3 ? intersection_size(holes[1], holes[2]) : 0;
}

long long pair_target_count(const ItsSpec& spec) {
    long long p = choose2(spec.v);
    for (size_t i = 0; i < spec.holes.size(); ++i) p -= choose2(spec.hole_size(i));
    for (size_t i = 0; i < spec.holes.size(); ++i)
        for (size_t j = i + 1; j < spec.holes.size(); ++j)
            p += choose2(intersection_size(spec.holes[i], spec.holes[j]));
    return p;
}

long long block_count(const ItsSpec& spec) {
    long long pairs = spec.lambda * pair_target_count(spec);
    if (pairs % 3 != 0)
        throw InadmissibleError("inadmissible: covered pair count " + std::to_string(pairs) +
                                " is not divisible by 3");
    return pairs / 3;
}

VerifyResult verify_its(const StructuredDesign& design) {
    const ItsSpec& spec = design.its;
    int v = spec.v;
    if (design.kind != DesignKind::its) return fail("not a holey triple system");
    if (v < 0 || spec.lambda < 1) return fail("bad order or index");
    if (spec.holes.size() < 2 || spec.holes.size() > 3) return fail("need 2 or 3 holes");
    for (const auto& h : spec.holes)
        if (!valid_point_set(h, v)) return fail("hole is not a subset of the point set");
    if (spec.holes.size() == 3 && spec.z() != 0)
        return fail("first two holes must be disjoint when a third hole is present");

    std::vector<int> target(static_cast<size_t>(v) * v, spec.lambda);
    for (const auto& h : spec.holes) zero_within(target, h, v);
    return check_pair_counts(v, design.blocks, target);
}

VerifyResult verify_gdd_igdd(const StructuredDesign& design) {
    const GddSpec& spec = design.gdd;
    int v = spec.v;
    if (design.kind == DesignKind::its) return fail("not a group divisible design");
    std::vector<int> owner(v, -1);
    for (size_t g = 0; g < spec.groups.size(); ++g) {
        if (!valid_point_set(spec.groups[g], v)) return fail("group is not a valid point set");
        for (int x : spec.groups[g]) {
            if (owner[x] != -1) return fail("groups overlap at point " + std::to_string(x));
            owner[x] = static_cast<int>(g);
        }
    }
    for (int x = 0; x < v; ++x)
        if (owner[x] == -1) return fail("point " + std::to_string(x) + " lies in no group");
    if (!valid_point_set(spec.hole1, v) || !valid_point_set(spec.hole2, v))
        return fail("hole is not a valid point set");
    if (intersection_size(spec.hole1, spec.hole2) != 0) return fail("holes overlap");

    std::vector<int> target(static_cast<size_t>(v) * v, spec.lambda);
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (owner[x] == owner[y]) target[static_cast<size_t>(x) * v + y] = 0;
    zero_within(target, spec.hole1, v);
    zero_within(target, spec.hole2, v);
    return check_pair_counts(v, design.blocks, target);
}

VerifyResult verify_classes(const StructuredDesign& design, ClassKind kind) {
    if (design.classes.empty()) return fail("design carries no class partition");
    int v = design.v();

    BlockMultiset unioned;
    for (const auto& cls : design.classes) unioned.add(cls.blocks);
    if (!(unioned == design.blocks))
        return fail("classes do not partition the block multiset");

    const auto& groups = design.gdd.groups;
    std::vector<int> owner(v, -1);
    for (size_t g = 0; g < groups.size(); ++g)
        for (int x : groups[g]) owner[x] = static_cast<int>(g);

    for (const auto& cls : design.classes) {
        if (kind == ClassKind::alpha_resolvable && cls.group != -1)
            return fail("class " + cls.label + " is tied to a group");
        if (kind != ClassKind::alpha_resolvable &&
            (cls.group < 0 || cls.group >= static_cast<int>(groups.size())))
            return fail("class " + cls.label + " has no valid group");
        std::vector<int> cover(v, 0);
        for (const auto& [t, c] : cls.blocks.entries())
            for (int x : t) cover.at(x) += c;
        for (int x = 0; x < v; ++x) {
            int want = (cls.group >= 0 && owner[x] == cls.group) ? 0 : cls.alpha;
            if (cover[x] != want)
                return fail("class " + cls.label + " covers point " + std::to_string(x) + " " +
                            std::to_string(cover[x]) + " times, expected " + std::to_string(want));
        }
    }

    int lambda = design.lambda();
    if (kind != ClassKind::alpha_resolvable) {
        std::vector<int> per_group(groups.size(), 0);
        for (const auto& cls : design.classes) per_group.at(cls.group)++;
        int special = static_cast<int>(groups.size()) - 1;
        for (size_t g = 0; g < groups.size(); ++g) {
            int gsize = static_cast<int>(groups[g].size());
            int want_count;
            int want_alpha;
            if (kind == ClassKind::frame) {
                want_count = lambda * gsize / 2;
                want_alpha = 1;
            } else if (kind == ClassKind::condensed) {
                // one class per group, covering the outside lambda*g/2 times
                want_count = 1;
                want_alpha = lambda * gsize / 2;
            } else if (static_cast<int>(g) == special) {
                want_count = lambda * gsize / 2;
                want_alpha = 1;
            } else if (lambda == 1) {
                // index-one flavor: one half-weight class per full group
                want_count = 1;
                want_alpha = gsize / 2;
            } else {
                want_count = lambda / 2;
                want_alpha = gsize;
            }
            if (per_group[g] != want_count)
                return fail("group " + std::to_string(g) + " has " +
                            std::to_string(per_group[g]) + " classes, expected " +
                            std::to_string(want_count));
            for (const auto& cls : design.classes)
                if (cls.group == static_cast<int>(g) && cls.alpha != want_alpha)
                    return fail("class " + cls.label + " has alpha " +
                                std::to_string(cls.alpha) + ", expected " +
                                std::to_string(want_alpha));
        }
    }
    return ok_result();
}

StructuredDesign its_to_gdd(const StructuredDesign& design) {
    const ItsSpec& spec = design.its;
    if (design.kind != DesignKind::its || spec.holes.size() != 2)
        throw std::invalid_argument("expected a two-hole triple system");
    if (spec.z() != 0) throw std::invalid_argument("holes must be disjoint");

    StructuredDesign out;
    out.kind = DesignKind::gdd;
    out.gdd.v = spec.v;
    out.gdd.lambda = spec.lambda;
    std::vector<bool> used(spec.v, false);
    for (const auto& h : spec.holes) {
        if (h.empty()) continue;
        auto g = h;
        std::sort(g.begin(), g.end());
        for (int x : g) used[x] = true;
        out.gdd.groups.push_back(std::move(g));
    }
    for (int x = 0; x < spec.v; ++x)
        if (!used[x]) out.gdd.groups.push_back({x});
    out.blocks = design.blocks;
    out.trace = design.trace;
    return out;
}

std::string kind_name(DesignKind k) {
    switch (k) {
        case DesignKind::its: return "its";
        case DesignKind::gdd: return "gdd";
        case DesignKind::igdd: return "igdd";
        case DesignKind::frame: return "frame";
        case DesignKind::eframe: return "eframe";
        case DesignKind::td: return "td";
        case DesignKind::resolvable: return "resolvable";
    }
    throw std::logic_error("unknown design kind");
}

DesignKind kind_from_name(const std::string& s) {
    if (s == "its") return DesignKind::its;
    if (s == "gdd") return DesignKind::gdd;
    if (s == "igdd") return DesignKind::igdd;
    if (s == "frame") return DesignKind::frame;
    if (s == "eframe") return DesignKind::eframe;
    if (s == "td") return DesignKind::td;
    if (s == "resolvable") return DesignKind::resolvable;
    throw std::runtime_error("unknown design kind: " + s);
}

using ojson = nlohmann::ordered_json;

std::string design_to_json_string(const StructuredDesign& design, int indent) {
    ojson j;
    j["kind"] = kind_name(design.kind);
    j["v"] = design.v();
    j["lambda"] = design.lambda();

    ojson holes = ojson::array();
    if (design.kind == DesignKind::its) {
        for (const auto& h : design.its.holes) holes.push_back(h);
    } else if (!design.gdd.hole1.empty() || !design.gdd.hole2.empty()) {
        holes.push_back(design.gdd.hole1);
        holes.push_back(design.gdd.hole2);
    }
    j["holes"] = holes;
    j["groups"] = design.gdd.groups;

    ojson rows = ojson::array();
    auto push_rows = [&rows](const BlockMultiset& bm) {
        std::vector<size_t> indices;
        for (const auto& [t, c] : bm.entries()) {
            ojson row = ojson::array({t[0], t[1], t[2]});
            if (c > 1) row.push_back(c);
            indices.push_back(rows.size());
            rows.push_back(std::move(row));
        }
        return indices;
    };

    if (design.kind == DesignKind::td) {
        for (const auto& b : design.td_blocks) rows.push_back(b);
    } else if (design.classes.empty()) {
        push_rows(design.blocks);
    } else {
        ojson classes = ojson::array();
        for (const auto& cls : design.classes) {
            ojson cj;
            cj["label"] = cls.label;
            cj["alpha"] = cls.alpha;
            cj["group"] = cls.group;
            cj["blocks"] = push_rows(cls.blocks);
            classes.push_back(std::move(cj));
        }
        j["classes"] = std::move(classes);
    }
    j["blocks"] = std::move(rows);
    j["trace"] = design.trace;
    return j.dump(indent);
}

StructuredDesign design_from_json_string(const std::string& text) {
    ojson j = ojson::parse(text);
    StructuredDesign d;
    d.kind = kind_from_name(j.at("kind").get<std::string>());
    int v = j.at("v").get<int>();
    int lambda = j.at("lambda").get<int>();
    auto holes = j.at("holes").get<std::vector<std::vector<int>>>();
    auto groups = j.value("groups", std::vector<std::vector<int>>{});
    if (d.kind == DesignKind::its) {
        d.its = ItsSpec{v, lambda, holes};
    } else {
        d.gdd.v = v;
        d.gdd.lambda = lambda;
        d.gdd.groups = groups;
        if (!holes.empty()) d.gdd.hole1 = holes[0];
        if (holes.size() > 1) d.gdd.hole2 = holes[1];
    }

    struct Row {
        Triple t;
        int count;
    };
    std::vector<Row> parsed;
    for (const auto& row : j.at("blocks")) {
        if (row.size() == 5) {
            d.td_blocks.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                                   row[3].get<int>(), row[4].get<int>()});
            continue;
        }
        if (row.size() != 3 && row.size() != 4)
            throw std::runtime_error("block row must have 3, 4 or 5 entries");
        Triple t = make_triple(row[0].get<int>(), row[1].get<int>(), row[2].get<int>());
        int c = row.size() == 4 ? row[3].get<int>() : 1;
        parsed.push_back({t, c});
        d.blocks.add(t, c);
    }

    if (j.contains("classes")) {
        for (const auto& cj : j.at("classes")) {
            DesignClass cls;
            cls.label = cj.at("label").get<std::string>();
            cls.alpha = cj.at("alpha").get<int>();
            cls.group = cj.at("group").get<int>();
            for (size_t i : cj.at("blocks").get<std::vector<size_t>>())
                cls.blocks.add(parsed.at(i).t, parsed.at(i).count);
            d.classes.push_back(std::move(cls));
        }
    }
    d.trace = j.value("trace", std::vector<std::string>{});
    return d;
}

}  // namespace triholes
