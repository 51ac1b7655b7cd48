#pragma once

#include <cstdint>
#include <vector>

#include "flagmono/lattice.hpp"
#include "flagmono/matroid.hpp"

namespace flagmono {

// A chain of proper flats (0_M and E excluded), strictly increasing.  The
// empty chain is valid and has flag 0.
using Chain = std::vector<Subset>;

// Set of ranks; bit i-1 stands for rank i in [r].
using RankSet = std::uint32_t;

// Jordan-Hoelder string b_1 ... b_{r+1} of a full chain.
using JHString = std::vector<int>;

struct FlagVector {
    int r = 0;
    std::vector<long long> v;  // size 1 << r, indexed by RankSet
    long long at(RankSet s) const { return v.at(s); }
};

RankSet flag_of(const FlatLattice& L, const Chain& c);

// All chains of flag exactly s, in lexicographic chain order.
std::vector<Chain> chains_of_flag(const FlatLattice& L, RankSet s);
long long count_chains_of_flag(const FlatLattice& L, RankSet s);
std::vector<Chain> full_chains(const FlatLattice& L);

FlagVector flag_f_vector(const FlatLattice& L);
FlagVector flag_h_vector(const FlatLattice& L);
FlagVector h_from_f(const FlagVector& f);  // inclusion-exclusion transform
FlagVector f_from_h(const FlagVector& h);  // inverse: f_S = sum over T <= S

struct CoarseVectors {
    std::vector<long long> f, h;
};

// Coarse vectors from the flag f-vector: f_k and h_k as sums over |S| = k.
// Cross-checks the h <-> f polynomial identity and throws on mismatch.
CoarseVectors coarse_vectors(const FlagVector& flag_f);

// h-vector from an f-vector via sum h_i x^(r-i) = sum f_i (x-1)^(r-i).
std::vector<long long> coarse_h_from_f(const std::vector<long long>& f, int r);

std::vector<long long> independence_f_vector(const Matroid& m);
std::vector<long long> independence_h_vector(const Matroid& m);

// b_i = min(F_i \ F_{i-1}) along a full chain, with F_0 = 0_M, F_{r+1} = E.
JHString jh_string(const FlatLattice& L, const Chain& full);

// Positions i with b_i > b_{i+1}.
RankSet descent_set(const JHString& s);

// True iff the letters are a basis and each b_i is the minimum of the
// successive closure difference (so the string corresponds to a full chain).
bool is_valid_string(const Matroid& m, const JHString& s);

// The unique full chain extending c with no descents outside fl(c).
Chain minimal_completion(const FlatLattice& L, const Chain& c);

// Restriction of a chain to the flats with ranks in s (the map nu).
Chain restrict_to_ranks(const FlatLattice& L, const Chain& c, RankSet s);

// True iff no flat of c is minimal in the interval of its neighbors.
bool is_essential(const FlatLattice& L, const Chain& c);

// Lexicographic chain order; requires equal flags.  Returns -1, 0 or 1.
int lex_compare(const FlatLattice& L, const Chain& a, const Chain& b);

}  // namespace flagmono
