#pragma once

#include <array>
#include <vector>

// Embedded design catalog: explicit small systems plus base-block orbits
// that develop into eframes and class-carrying group divisible designs.
namespace triholes::cat {

struct ItsEntry {
    int v;
    int lambda;
    std::vector<std::vector<int>> holes;
    std::vector<std::array<int, 4>> blocks;  // a, b, c, multiplicity
};

enum class OrbitKind { Eframe, GddWithClasses };

// Base blocks plus the development rule. The first n_first base blocks
// develop under perm into first_len-orbit classes (jointly when
// joint_first, else one class per base block); the remaining base blocks
// are first expanded by the listed powers of perm, then each of
// n_translates consecutive powers yields one class.
struct OrbitEntry {
    OrbitKind kind;
    int lambda;
    int h;        // size of the ordinary groups
    int n;        // number of ordinary groups
    int m;        // size of the final group
    int npoints;
    std::vector<std::vector<int>> groups;
    std::vector<int> perm;
    int first_len;
    int n_first;
    bool joint_first;
    int first_alpha;
    std::vector<int> pre_powers;
    int n_translates;
    int rest_alpha;
    std::vector<std::array<int, 3>> base;
};

const std::vector<ItsEntry>& its_entries();
const std::vector<OrbitEntry>& orbit_entries();

}  // namespace triholes::cat
