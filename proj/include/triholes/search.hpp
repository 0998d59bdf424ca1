#pragma once

#include <cstdint>
#include <optional>

#include "triholes/model.hpp"

namespace triholes {

// Exact pair-coverage problem: find a triple multiset covering each pair
// {x,y} exactly target[x*n+y] times. A zero target forbids the pair from
// appearing in any block at all.
struct CoverProblem {
    int n = 0;
    std::vector<int> target;

    static CoverProblem all_pairs(int n, int lambda);
    static CoverProblem from_its(const ItsSpec& spec);
    static CoverProblem from_gdd(const GddSpec& spec);

    int at(int x, int y) const {
        return target[static_cast<size_t>(std::min(x, y)) * n + std::max(x, y)];
    }
    void set(int x, int y, int t) {
        target[static_cast<size_t>(std::min(x, y)) * n + std::max(x, y)] = t;
    }
    long long total() const;
};

struct SearchOptions {
    std::uint64_t seed = 1;
    long long max_steps = 2'000'000;  // per restart
    int restarts = 30;
};

// Randomized hill climb (Stinson style, generalized to multiplicity
// targets). Deterministic for a fixed seed. nullopt when the budget runs
// out without a solution.
std::optional<BlockMultiset> solve_cover(const CoverProblem& prob, const SearchOptions& opts);

struct ExhaustiveResult {
    bool exists = false;
    bool decided = false;  // false when the node budget ran out first
    long long nodes = 0;
};

// Complete depth-first enumeration; proves nonexistence on small instances.
ExhaustiveResult exhaustive_cover(const CoverProblem& prob, long long node_budget);

// One resolution class to be filled: must cover every point in `allowed`
// exactly alpha times and no other point.
struct ClassSlot {
    int alpha = 1;
    std::vector<int> allowed;
};

struct ClassCoverProblem {
    int n = 0;
    std::vector<int> target;
    std::vector<ClassSlot> slots;

    int at(int x, int y) const {
        return target[static_cast<size_t>(std::min(x, y)) * n + std::max(x, y)];
    }
};

// Hill climb over class-partitioned covers (resolvable designs, frames,
// eframes). Returns one block multiset per slot.
std::optional<std::vector<BlockMultiset>> solve_class_cover(const ClassCoverProblem& prob,
                                                            const SearchOptions& opts);

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace triholes
