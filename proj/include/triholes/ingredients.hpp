#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triholes/catalog_data.hpp"
#include "triholes/model.hpp"

namespace triholes {

// Canonical identity of one provided design. The parameter tuple is
// injective per kind, so the canonical string doubles as a cache key.
struct IngredientKey {
    std::string kind;
    std::vector<long long> params;

    std::string canonical() const;
    std::string filename() const;  // kind plus a stable 64-bit hash, ".json"

    static IngredientKey ts(int v, int lambda);
    static IngredientKey one_hole_its(int v, int w, int lambda);
    static IngredientKey three_resolvable_ts(int v, int lambda);
    static IngredientKey gdd(int g, int t, int w, int lambda);
    static IngredientKey igdd_3part(int n, int m, int l, int lambda);
    static IngredientKey frame(int g, int n, int lambda);
    static IngredientKey td5(int n);
    static IngredientKey eframe31(int n, int m);
    static IngredientKey eframe(int h, int n, int m, int lambda);
    static IngredientKey lambda1_its(int v, int w, int u);
    // Full hole signature of an embedded holey system: w, u and an optional
    // third hole of size y meeting the first two in z1 and z2 points.
    static IngredientKey its(int v, int lambda, int w, int u, int y, int z1, int z2);
};

// One way to satisfy a request: a deterministic recipe, the embedded
// catalog, or randomized search under an explicit budget and seed.
struct ProviderTactic {
    enum class Kind { direct, catalog, search };
    Kind kind = Kind::direct;
    long long budget = 0;  // search steps per restart; 0 picks a size-based default
    std::uint64_t seed = 1;
    int restarts = 0;  // 0 picks a default
};

struct ProviderStrategy {
    std::vector<ProviderTactic> tactics;
};

// Mutable per-kind strategy table, preloaded with direct -> catalog -> search.
ProviderStrategy& provider_strategy(const std::string& kind);
void reset_provider_strategies();
// Override the budget and seed of every search tactic in the table.
void set_search_overrides(long long budget, std::uint64_t seed);

// Disk cache location; empty disables the disk layer (memory stays on).
// Initialized from TRIHOLES_CACHE_DIR when first consulted.
void set_cache_root(const std::string& dir);
std::string cache_root();
void clear_memory_cache();

// Providers. Each result is certified before it is cached or returned.
StructuredDesign get_ts(int v, int lambda);
StructuredDesign get_one_hole_its(int v, int w, int lambda);
StructuredDesign get_three_resolvable_ts(int v, int lambda);
StructuredDesign get_gdd(int g, int t, int w, int lambda);
StructuredDesign get_igdd_3part(int n, int m, int l, int lambda);
StructuredDesign get_frame(int g, int n, int lambda);
StructuredDesign get_td5(int n);
StructuredDesign get_eframe31(int n, int m);
StructuredDesign get_lambda1_its(int v, int w, int u);

using BaseBlockOrbit = cat::OrbitEntry;

// Expand base blocks under the listed permutation action into the full
// block multiset with its labeled classes.
StructuredDesign develop_orbit(const BaseBlockOrbit& o);

// Embedded-data lookup by key; absent keys return nullopt.
std::optional<StructuredDesign> catalog_lookup(const IngredientKey& key);

// lambda disjoint copies of a unit-index design (blocks and classes).
StructuredDesign scale_copies(const StructuredDesign& base, int lambda);

// lambda copies of a unit-index eframe, with the full-group classes merged
// in pairs so the class shape matches the even-index definition.
StructuredDesign eframe_multiply(const StructuredDesign& base, int lambda);

VerifyResult verify_td(const StructuredDesign& design);

}  // namespace triholes
