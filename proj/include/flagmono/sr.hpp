#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagmono/chains.hpp"
#include "flagmono/exact_rank.hpp"
#include "flagmono/maps.hpp"

namespace flagmono {

// Degree-S component of the theta ideal: one row per generator theta_i * x_C
// (i in S, C of flag S \ {i}), one column per chain of flag S in lex order;
// entry 1 exactly where the column chain extends the row chain at rank i.
struct RelationMatrix {
    RankSet degree = 0;
    std::vector<Chain> columns;
    std::vector<std::pair<int, Chain>> rows;
    IntMat mat;
};

RelationMatrix theta_relations(const FlatLattice& L, RankSet s);

// dim of the degree-S component of k[L]/Theta: #chains minus relation rank.
// Equals h_S for matroid lattices; a bare dimension for pseudo-matroids.
int quotient_dim(const FlatLattice& L, RankSet s);

// Linear functional on the degree-S chain space, coefficients aligned with
// chains_of_flag(L, degree).
struct Functional {
    RankSet degree = 0;
    std::vector<BigInt> coeffs;
};

// Basis of the annihilator of Theta in degree S (integer kernel of the
// relation matrix); its size equals quotient_dim(L, s).
std::vector<Functional> annihilator_basis(const FlatLattice& L, RankSet s);

// Matrix of psi in degree s: rows are A'-chains of flag s, columns B-chains
// of flag s, entry 1 where phi_B maps the row chain to the column chain.
// Asserts surjectivity by flag (no zero column).
IntMat psi_matrix(const PseudoMatroidLattice& ap, const FlatLattice& bl, RankSet s);

// f_C = sum over sigma in H of sgn(sigma) eps_{nu(C_sigma)}, where C is a
// full chain of Delta(B) with descent set s and H is generated by the
// adjacent transpositions indexed by s.  Verifies triangularity, the +1
// diagonal coefficient and membership in the annihilator.
Functional dual_functional_fC(const FlatLattice& bl, const Chain& c, RankSet s);

// Same construction through A-closures; every flat must land in F(A').
// Verifies membership in the A'-annihilator.
Functional dual_functional_gC(const PseudoMatroidLattice& ap, const Chain& c, RankSet s);

struct SurjectivityReport {
    RankSet degree = 0;
    long long h_B = 0;
    long long h_A = 0;
    long long functional_count = 0;
    long long rank_fC = 0;
    long long dim_Aprime = 0;
    bool count_ok = false;
    bool annihilator_ok = false;
    bool triangular_ok = false;
    bool independent_ok = false;
    bool preimage_ok = false;
    bool dim_chain_ok = false;
    std::string detail;

    bool ok() const {
        return count_ok && annihilator_ok && triangular_ok && independent_ok && preimage_ok &&
               dim_chain_ok;
    }
};

SurjectivityReport verify_surjectivity(const Matroid& a, const Matroid& b, RankSet s);
std::vector<SurjectivityReport> verify_surjectivity_all(const Matroid& a, const Matroid& b);

struct DimChainEntry {
    RankSet degree = 0;
    long long h_A = 0;
    long long dim_Aprime = 0;
    long long h_B = 0;
    bool ok = false;
};

struct DimChainReport {
    std::vector<DimChainEntry> entries;
    bool ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
};

// h_S(A) >= dim (R_{A'})_S >= h_S(B) for every S.
DimChainReport verify_injectivity_chain(const Matroid& a, const Matroid& b);

}  // namespace flagmono
