#pragma once

#include <unordered_map>
#include <vector>

#include "flagmono/matroid.hpp"
#include "flagmono/subset.hpp"

namespace flagmono {

// A graded lattice of flats: flats grouped by rank (each group flat-lex
// sorted), cover relations, and rank lookup.  Built either from a matroid
// (with the matroid-lattice invariants verified) or from a pre-ranked family
// of flats (the pseudo-matroid case, where the caller checks gradedness).
class FlatLattice {
public:
    static FlatLattice of_matroid(const Matroid& m);
    static FlatLattice from_ranked_flats(int n, std::vector<std::vector<Subset>> flats_by_rank);

    int ground_size() const { return n_; }
    int top_rank() const { return top_rank_; }              // matroid rank r+1
    int proper_rank() const { return top_rank_ > 0 ? top_rank_ - 1 : 0; }  // r

    const std::vector<Subset>& flats_of_rank(int k) const { return flats_[k]; }
    Subset zero_flat() const { return flats_[0][0]; }
    Subset top_flat() const { return flats_[top_rank_][0]; }
    std::size_t flat_count() const;

    bool is_flat(Subset f) const { return where_.count(f) != 0; }
    int rank_of_flat(Subset f) const;           // throws Error if not a flat
    int index_of(int rank, Subset f) const;     // position within flats_of_rank(rank)

    // Indices (within rank k+1) of the flats covering flats_of_rank(k)[i].
    const std::vector<int>& covers_above(int k, int i) const { return covers_[k][i]; }

    // Smallest flat of the lattice containing g (intersection of all flats
    // containing g).  Equals the matroid closure for matroid lattices.
    Subset lattice_closure(Subset g) const;

private:
    FlatLattice() = default;
    void index_and_covers();
    void verify_matroid_invariants() const;

    int n_ = 0;
    int top_rank_ = 0;
    std::vector<std::vector<Subset>> flats_;                  // by rank
    std::vector<std::vector<std::vector<int>>> covers_;       // [k][i] -> indices at k+1
    std::unordered_map<Subset, std::pair<int, int>> where_;   // flat -> (rank, index)
};

FlatLattice flat_lattice(const Matroid& m);

}  // namespace flagmono
