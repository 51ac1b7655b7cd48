#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagmono/matroid.hpp"

namespace flagmono {

inline constexpr int kDefaultEnumCap = 7;

struct CatalogEntry {
    std::string name;
    std::string provenance;  // named | enumerated | random-linear | file
    Matroid m;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
};

// All labeled matroids of rank r on [n], by DFS over candidate basis
// families with exchange propagation.  Deterministic order.
std::vector<Matroid> enumerate_basis_families(int n, int r);

Catalog enumerate_matroids(int n, int r, int cap = kDefaultEnumCap);

// Every labeled matroid on every ground set [0..n_max], all ranks.
Catalog exhaustive_catalog(int n_max, int cap = kDefaultEnumCap);

struct WeakPair {
    int a_index = 0;
    int b_index = 0;
    bool rank_preserving = false;
};

// Ordered pairs (A, B) with a weak map A -> B, within equal ground sets.
std::vector<WeakPair> find_weak_pairs(const Catalog& cat, bool rank_preserving_only,
                                      bool include_identity = true);

// Column matroid of a uniformly random d x n matrix over GF(p).
Matroid random_linear(int p, int d, int n, std::uint64_t seed);

// Lexicographically smallest relabeling, for isomorphism deduplication.
std::vector<Subset> canonical_basis_key(const Matroid& m);

}  // namespace flagmono
