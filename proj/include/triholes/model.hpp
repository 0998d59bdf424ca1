#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace triholes {

// A block is a 3-subset of points, stored sorted ascending.
using Triple = std::array<int, 3>;

Triple make_triple(int a, int b, int c);

// Requested parameters fail an arithmetic necessary condition.
struct InadmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters pass the arithmetic checks but no construction route is available.
struct NoPathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A constructed object failed its own certification. Always a bug.
struct VerifyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BlockMultiset {
public:
    void add(const Triple& t, int count = 1);
    void add(const BlockMultiset& other);
    void remove(const Triple& t, int count = 1);
    int count(const Triple& t) const;
    long long size() const;
    bool empty() const { return entries_.empty(); }
    const std::map<Triple, int>& entries() const { return entries_; }
    bool operator==(const BlockMultiset&) const = default;

private:
    std::map<Triple, int> entries_;
    long long total_ = 0;
};

// Loopless multigraph on vertices 0..n-1 with edge multiplicities.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : adj_(n), deg_(n, 0) {}

    int n() const { return static_cast<int>(adj_.size()); }
    void add_edge(int x, int y, int count = 1);
    void remove_edge(int x, int y, int count = 1);
    int multiplicity(int x, int y) const;
    int degree(int x) const { return deg_.at(x); }
    int max_degree() const;
    int max_multiplicity() const;
    long long edge_count() const { return edges_; }
    const std::map<int, int>& neighbors(int x) const { return adj_.at(x); }
    bool operator==(const MultiGraph&) const = default;

private:
    std::vector<std::map<int, int>> adj_;
    std::vector<int> deg_;
    long long edges_ = 0;
};

// Triple system of order v and index lambda with 2 or 3 holes.
// Two holes may overlap; with a third hole Y, the first two are disjoint
// and may each overlap Y. Pairs inside any one hole are left uncovered.
struct ItsSpec {
    int v = 0;
    int lambda = 1;
    std::vector<std::vector<int>> holes;

    int w() const { return hole_size(0); }
    int u() const { return hole_size(1); }
    int y() const { return hole_size(2); }
    int z() const;   // |holes[0] ∩ holes[1]|
    int z1() const;  // |holes[0] ∩ holes[2]|
    int z2() const;  // |holes[1] ∩ holes[2]|
    int hole_size(size_t i) const {
        return i < holes.size() ? static_cast<int>(holes[i].size()) : 0;
    }
};

// Group divisible design, optionally with two disjoint holes (an IGDD).
// Pairs inside a group or inside a hole are left uncovered.
struct GddSpec {
    int v = 0;
    int lambda = 1;
    std::vector<std::vector<int>> groups;
    std::vector<int> hole1;
    std::vector<int> hole2;
};

// One labeled class of a resolution: covers every point outside the
// associated group exactly alpha times. group == -1 means no group is
// excluded and the class covers every point of the design.
struct DesignClass {
    std::string label;
    int alpha = 1;
    int group = -1;
    BlockMultiset blocks;
};

enum class DesignKind { its, gdd, igdd, frame, eframe, td, resolvable };

std::string kind_name(DesignKind k);
DesignKind kind_from_name(const std::string& s);

struct StructuredDesign {
    DesignKind kind = DesignKind::its;
    ItsSpec its;  // meaningful when kind == its
    GddSpec gdd;  // meaningful for the group-based kinds
    BlockMultiset blocks;
    std::vector<DesignClass> classes;
    std::vector<std::array<int, 5>> td_blocks;  // kind == td only
    std::vector<std::string> trace;

    int v() const { return kind == DesignKind::its ? its.v : gdd.v; }
    int lambda() const { return kind == DesignKind::its ? its.lambda : gdd.lambda; }
};

struct VerifyResult {
    bool ok = false;
    int x = -1;
    int y = -1;
    int observed = -1;
    int expected = -1;
    std::string detail;
    explicit operator bool() const { return ok; }
};

// Number of cross pairs the design must cover, counted once (ignoring lambda).
long long pair_target_count(const ItsSpec& spec);

// Exact number of blocks a system with this spec must contain.
// Throws InadmissibleError when the pair count is not divisible by 3.
long long block_count(const ItsSpec& spec);

VerifyResult verify_its(const StructuredDesign& design);
VerifyResult verify_gdd_igdd(const StructuredDesign& design);

enum class ClassKind { frame, eframe, condensed, alpha_resolvable };

VerifyResult verify_classes(const StructuredDesign& design, ClassKind kind);

// Reads a certified two-hole system with disjoint holes as a group divisible
// design whose groups are the holes plus singletons.
StructuredDesign its_to_gdd(const StructuredDesign& design);

std::string design_to_json_string(const StructuredDesign& design, int indent = 2);
StructuredDesign design_from_json_string(const std::string& text);

}  // namespace triholes
