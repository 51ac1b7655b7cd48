#include "flagmono/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagmono/errors.hpp"

namespace flagmono {

FlatLattice FlatLattice::of_matroid(const Matroid& m) {
    const int n = m.ground_size();
    std::unordered_set<Subset> flats;
    if (n <= 12) {
        // closure of every subset, deduplicated
        const std::size_t cnt = std::size_t{1} << n;
        for (Subset g = 0; g < cnt; ++g) flats.insert(m.closure(g));
    } else {
        // covering BFS from the zero flat: closures of F + x are exactly the
        // covers of F, so this reaches every flat
        std::vector<Subset> frontier{m.loops()};
        flats.insert(m.loops());
        while (!frontier.empty()) {
            std::vector<Subset> next;
            for (Subset f : frontier) {
                for (int x = 1; x <= n; ++x) {
                    if (contains(f, x)) continue;
                    Subset g = m.closure(f | element_bit(x));
                    if (flats.insert(g).second) next.push_back(g);
                }
            }
            frontier = std::move(next);
        }
    }

    FlatLattice L;
    L.n_ = n;
    L.top_rank_ = m.rank();
    L.flats_.assign(m.rank() + 1, {});
    for (Subset f : flats) L.flats_[m.rank_of(f)].push_back(f);
    for (auto& level : L.flats_) std::sort(level.begin(), level.end(), flat_lex_less);
    L.index_and_covers();
    L.verify_matroid_invariants();
    return L;
}

FlatLattice FlatLattice::from_ranked_flats(int n, std::vector<std::vector<Subset>> flats_by_rank) {
    FlatLattice L;
    L.n_ = n;
    L.top_rank_ = static_cast<int>(flats_by_rank.size()) - 1;
    L.flats_ = std::move(flats_by_rank);
    for (auto& level : L.flats_) {
        std::sort(level.begin(), level.end(), flat_lex_less);
        if (level.empty()) throw Error("ranked flat family has an empty rank level");
    }
    if (L.flats_[0].size() != 1 || L.flats_[L.top_rank_].size() != 1)
        throw Error("ranked flat family needs unique bottom and top");
    L.index_and_covers();
    return L;
}

void FlatLattice::index_and_covers() {
    where_.clear();
    for (int k = 0; k <= top_rank_; ++k)
        for (int i = 0; i < static_cast<int>(flats_[k].size()); ++i)
            where_.emplace(flats_[k][i], std::make_pair(k, i));
    // in a graded lattice, covers are exactly the containments with rank gap 1
    covers_.assign(top_rank_ + 1, {});
    for (int k = 0; k < top_rank_; ++k) {
        covers_[k].assign(flats_[k].size(), {});
        for (int i = 0; i < static_cast<int>(flats_[k].size()); ++i)
            for (int j = 0; j < static_cast<int>(flats_[k + 1].size()); ++j)
                if (subset_of(flats_[k][i], flats_[k + 1][j])) covers_[k][i].push_back(j);
    }
    covers_[top_rank_].assign(flats_[top_rank_].size(), {});
}

std::size_t FlatLattice::flat_count() const {
    std::size_t c = 0;
    for (const auto& level : flats_) c += level.size();
    return c;
}

int FlatLattice::rank_of_flat(Subset f) const {
    auto it = where_.find(f);
    if (it == where_.end()) throw Error(flagmono::to_string(f) + " is not a flat of this lattice");
    return it->second.first;
}

int FlatLattice::index_of(int rank, Subset f) const {
    auto it = where_.find(f);
    if (it == where_.end() || it->second.first != rank)
        throw Error(flagmono::to_string(f) + " is not a rank-" + std::to_string(rank) + " flat");
    return it->second.second;
}

Subset FlatLattice::lattice_closure(Subset g) const {
    Subset out = top_flat();
    for (const auto& level : flats_)
        for (Subset f : level)
            if (subset_of(g, f)) out &= f;
    return out;
}

void FlatLattice::verify_matroid_invariants() const {
    if (flats_[0].size() != 1 || flats_[top_rank_].size() != 1 || flats_[top_rank_][0] != full_set(n_))
        throw Error("flat lattice: bottom or top level malformed");
    // intersection of any two flats is a flat
    std::vector<Subset> all;
    for (const auto& level : flats_) all.insert(all.end(), level.begin(), level.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!where_.count(all[i] & all[j]))
                throw Error("flat lattice: intersection " + flagmono::to_string(all[i] & all[j]) + " is not a flat");
    // every x outside a flat F lies in exactly one cover of F
    for (int k = 0; k < top_rank_; ++k) {
        for (int i = 0; i < static_cast<int>(flats_[k].size()); ++i) {
            Subset f = flats_[k][i];
            std::vector<int> hit(n_ + 1, 0);
            for (int j : covers_[k][i])
                for (int e : elements(flats_[k + 1][j] & ~f)) ++hit[e];
            for (int e = 1; e <= n_; ++e)
                if (!contains(f, e) && hit[e] != 1)
                    throw Error("flat lattice: element " + std::to_string(e) + " outside " +
                                flagmono::to_string(f) + " lies in " + std::to_string(hit[e]) + " covers");
        }
    }
}

FlatLattice flat_lattice(const Matroid& m) { return FlatLattice::of_matroid(m); }

}  // namespace flagmono
