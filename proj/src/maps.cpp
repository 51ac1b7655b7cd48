#include "flagmono/maps.hpp"

#include <algorithm>

#include "flagmono/errors.hpp"

namespace flagmono {

namespace {

void check_same_ground(const Matroid& a, const Matroid& b) {
    if (a.ground_size() != b.ground_size())
        throw GroundSetMismatch("matroids live on ground sets of size " + std::to_string(a.ground_size()) +
                                " and " + std::to_string(b.ground_size()));
}

void check_rank_preserving_weak(const Matroid& a, const Matroid& b) {
    if (!is_weak_map(a, b).holds()) throw NotRankPreservingWeak("not a weak map");
    if (a.rank() != b.rank()) throw NotRankPreservingWeak("weak map does not preserve rank");
}

}  // namespace

MapWitness is_weak_map(const Matroid& a, const Matroid& b) {
    check_same_ground(a, b);
    for (Subset basis : b.bases())
        if (!a.is_independent(basis)) return {MapKind::none, basis};
    return {a.rank() == b.rank() ? MapKind::rank_preserving_weak : MapKind::weak, std::nullopt};
}

MapWitness is_strong_map(const Matroid& a, const Matroid& b) {
    check_same_ground(a, b);
    FlatLattice lb = flat_lattice(b);
    for (int k = 0; k <= lb.top_rank(); ++k)
        for (Subset f : lb.flats_of_rank(k))
            if (a.closure(f) != f) return {MapKind::none, f};
    return {MapKind::strong, std::nullopt};
}

Matroid decompose_weak_map(const Matroid& a, const Matroid& b) {
    if (!is_weak_map(a, b).holds()) throw NotAWeakMap("cannot decompose: not a weak map");
    Matroid t = a.truncation(b.rank());
    if (!is_strong_map(a, t).holds() || is_weak_map(t, b).kind != MapKind::rank_preserving_weak)
        throw TheoremViolation("truncation decomposition failed");
    return t;
}

Chain phi_chain(const Matroid& b, const Chain& c) {
    Chain out;
    const Subset zero = b.loops();
    const Subset top = full_set(b.ground_size());
    for (Subset f : c) {
        Subset img = b.closure(f);
        if (img == zero || img == top) continue;
        if (out.empty() || out.back() != img) out.push_back(img);
    }
    return out;
}

PseudoMatroidLattice pseudo_matroid(const Matroid& a, const Matroid& b) {
    check_rank_preserving_weak(a, b);
    FlatLattice la = flat_lattice(a);
    std::vector<std::vector<Subset>> kept(la.top_rank() + 1);
    for (int k = 0; k <= la.top_rank(); ++k) {
        for (Subset f : la.flats_of_rank(k)) {
            bool rank_kept = b.rank_of(b.closure(f)) == k;
            // cross-check: F keeps its rank iff it has a basis independent in B
            bool has_b_independent_basis = false;
            for (Subset s = f;; s = (s - 1) & f) {
                if (set_size(s) == k && a.is_independent(s) && b.is_independent(s)) {
                    has_b_independent_basis = true;
                    break;
                }
                if (s == 0) break;
            }
            if (rank_kept != has_b_independent_basis)
                throw TheoremViolation("pseudo-matroid membership tests disagree on " + flagmono::to_string(f));
            if (rank_kept) kept[k].push_back(f);
        }
    }
    if (kept[0].empty() || kept[la.top_rank()].empty())
        throw TheoremViolation("pseudo-matroid lost its bottom or top flat");
    FlatLattice lattice = FlatLattice::from_ranked_flats(a.ground_size(), std::move(kept));
    // gradedness: every comparable pair with rank gap >= 2 has an intermediate
    for (int k = 0; k <= lattice.top_rank(); ++k) {
        for (int l = k + 2; l <= lattice.top_rank(); ++l) {
            for (Subset f : lattice.flats_of_rank(k)) {
                for (Subset g : lattice.flats_of_rank(l)) {
                    if (!subset_of(f, g)) continue;
                    bool found = false;
                    for (int mid = k + 1; mid < l && !found; ++mid)
                        for (Subset h : lattice.flats_of_rank(mid))
                            if (subset_of(f, h) && subset_of(h, g)) { found = true; break; }
                    if (!found)
                        throw TheoremViolation("pseudo-matroid lattice not graded between " +
                                               flagmono::to_string(f) + " and " + flagmono::to_string(g));
                }
            }
        }
    }
    return {std::move(lattice), a, b};
}

FlagSurjectivityReport check_flag_surjectivity(const Matroid& a, const Matroid& b) {
    check_rank_preserving_weak(a, b);
    FlatLattice lb = flat_lattice(b);
    FlagSurjectivityReport report;
    report.ok = true;
    const int r = lb.proper_rank();
    for (RankSet s = 0; s < (RankSet{1} << r); ++s) {
        std::vector<int> ranks = elements(s);
        for (const Chain& c : chains_of_flag(lb, s)) {
            JHString letters = jh_string(lb, minimal_completion(lb, c));
            Chain d;
            Subset prefix = 0;
            std::size_t next = 0;
            for (int k = 1; k <= static_cast<int>(letters.size()) && next < ranks.size(); ++k) {
                prefix |= element_bit(letters[k - 1]);
                if (k == ranks[next]) {
                    d.push_back(a.closure(prefix));
                    ++next;
                }
            }
            bool good = d.size() == ranks.size();
            for (std::size_t j = 0; good && j < d.size(); ++j) {
                if (a.rank_of(d[j]) != ranks[j]) good = false;
                if (j > 0 && !subset_of(d[j - 1], d[j])) good = false;
            }
            good = good && phi_chain(b, d) == c;
            ++report.chains_checked;
            if (good) {
                report.witness_map.emplace_back(c, d);
            } else {
                report.ok = false;
                report.failures.push_back(c);
            }
        }
    }
    return report;
}

}  // namespace flagmono
