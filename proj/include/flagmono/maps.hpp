#pragma once

#include <optional>
#include <vector>

#include "flagmono/chains.hpp"
#include "flagmono/lattice.hpp"
#include "flagmono/matroid.hpp"

namespace flagmono {

enum class MapKind { strong, weak, rank_preserving_weak, none };

struct MapWitness {
    MapKind kind = MapKind::none;
    // For a failed weak test: a basis of B dependent in A.
    // For a failed strong test: a flat of B that is not a flat of A.
    std::optional<Subset> violation;
    bool holds() const { return kind != MapKind::none; }
};

// Weak map A -> B: every basis of B independent in A (equivalent to
// I(B) <= I(A) by downward closure).
MapWitness is_weak_map(const Matroid& a, const Matroid& b);

// Strong map A -> B: every flat of B is a flat of A.
MapWitness is_strong_map(const Matroid& a, const Matroid& b);

// The strong-map leg T = truncation(A, rk B) of the weak-map decomposition;
// A -> T is strong and T -> B is a rank-preserving weak map.
Matroid decompose_weak_map(const Matroid& a, const Matroid& b);

// Closure map on chains: apply closure_B to each flat, drop images equal to
// 0_B or E, remove duplicates.
Chain phi_chain(const Matroid& b, const Chain& c);

// Lattice of the auxiliary pseudo-matroid A': flats F of A whose B-closure
// keeps their rank, graded by rk_A.  Not a matroid lattice in general.
struct PseudoMatroidLattice {
    FlatLattice lattice;
    Matroid a;
    Matroid b;
};

PseudoMatroidLattice pseudo_matroid(const Matroid& a, const Matroid& b);

struct FlagSurjectivityReport {
    bool ok = false;
    std::size_t chains_checked = 0;
    // (B-chain, A-chain preimage) for every chain of Delta(B).
    std::vector<std::pair<Chain, Chain>> witness_map;
    std::vector<Chain> failures;
};

// For every B-chain C of every flag, construct an A-chain D with the same
// flag and phi_chain(B, D) == C, per the prefix-closure construction.
FlagSurjectivityReport check_flag_surjectivity(const Matroid& a, const Matroid& b);

}  // namespace flagmono
