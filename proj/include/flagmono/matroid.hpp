#pragma once

#include <cstdint>
#include <vector>

#include "flagmono/subset.hpp"

namespace flagmono {

// A matroid on [n], stored by its (validated) family of bases.  All derived
// data (independence, rank and closure of every subset) is precomputed at
// construction, so queries are table lookups.  Instances are immutable and
// safe to share between threads.
class Matroid {
public:
    // Validates the basis family: equal cardinality plus basis exchange
    // (checked through the rank-function axioms, which are equivalent).
    static Matroid from_bases(int n, std::vector<Subset> bases);

    // All r-subsets of [n].
    static Matroid uniform(int r, int n);

    // Rank-3 matroid on [n] with {1,...,n-1} a line and n a point off it;
    // bases are exactly the sets {a,b,n} with a < b <= n-1.
    static Matroid near_pencil(int n);

    // Column matroid of the given vectors over GF(p).
    static Matroid linear_matroid(int p, const std::vector<std::vector<int>>& columns);

    int ground_size() const { return n_; }
    int rank() const { return rank_; }  // = r+1, the common basis size
    const std::vector<Subset>& bases() const { return bases_; }

    bool is_independent(Subset g) const {
        return (indep_bits_[g >> 6] >> (g & 63)) & 1u;
    }
    int rank_of(Subset g) const { return rank_table_[g]; }
    Subset closure(Subset g) const { return closure_table_[g]; }
    Subset loops() const { return closure_table_[0]; }

    // Independent sets of M of size <= k; a strong-map image of M.
    Matroid truncation(int k) const;

    // perm[e-1] is the image of element e; perm must be a bijection of [n].
    Matroid relabel(const std::vector<int>& perm) const;

    // Indicator of independent subsets, bit g of word g/64.  Exposes the
    // downward closure of the bases for fast containment tests.
    const std::vector<std::uint64_t>& independence_bits() const { return indep_bits_; }

    bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }
    bool operator!=(const Matroid& o) const { return !(*this == o); }

private:
    Matroid(int n, std::vector<Subset> bases);
    void build_tables();
    void validate();

    int n_ = 0;
    int rank_ = 0;
    std::vector<Subset> bases_;               // flat-lex sorted
    std::vector<std::uint64_t> indep_bits_;   // 2^n bits
    std::vector<std::uint8_t> rank_table_;    // 2^n entries
    std::vector<Subset> closure_table_;       // 2^n entries
};

Matroid truncation(const Matroid& m, int k);

}  // namespace flagmono
