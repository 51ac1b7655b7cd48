#include "flagmono/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagmono/errors.hpp"

namespace flagmono {

namespace {

// Enumerate all k-subsets of [n] in flat-lex order.
std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    Subset all = full_set(n);
    for (Subset g = 0; ; ++g) {
        if (set_size(g) == k) out.push_back(g);
        if (g == all) break;
    }
    std::sort(out.begin(), out.end(), flat_lex_less);
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Rank of a set of columns over GF(p), by elimination.
int gf_rank(int p, std::vector<std::vector<int>> cols) {
    if (cols.empty()) return 0;
    std::size_t d = cols[0].size();
    for (auto& col : cols)
        for (int& v : col) v = ((v % p) + p) % p;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols.size() && row < d; ++c) {
        // find pivot in column c at or below `row`
        std::size_t pr = row;
        while (pr < d && cols[c][pr] % p == 0) ++pr;
        if (pr == d) continue;
        std::swap(cols[c][pr], cols[c][row]);
        for (std::size_t j = c + 1; j < cols.size(); ++j) std::swap(cols[j][pr], cols[j][row]);
        // normalize pivot to 1
        int piv = ((cols[c][row] % p) + p) % p;
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (t * piv % p == 1) { inv = t; break; }
        for (std::size_t j = c; j < cols.size(); ++j)
            cols[j][row] = cols[j][row] % p * inv % p;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row) continue;
            int f = ((cols[c][i] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols.size(); ++j)
                cols[j][i] = (((cols[j][i] - f * cols[j][row]) % p) + p * p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

Matroid::Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
    if (n_ < 0 || n_ > kMaxGround)
        throw GroundSetTooLarge("ground set size must be between 0 and 16, got " + std::to_string(n_));
    if (bases_.empty()) throw EmptyBases("matroid must have at least one basis");
    std::sort(bases_.begin(), bases_.end(), flat_lex_less);
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = set_size(bases_[0]);
    const Subset all = full_set(n_);
    for (Subset b : bases_) {
        if (!subset_of(b, all))
            throw NotAMatroid("basis " + flagmono::to_string(b) + " not contained in [" + std::to_string(n_) + "]", b, 0);
        if (set_size(b) != rank_)
            throw NotAMatroid("bases have unequal cardinality: " + flagmono::to_string(b), b, 0);
    }
    build_tables();
    validate();
}

void Matroid::build_tables() {
    const std::size_t m = std::size_t{1} << n_;
    indep_bits_.assign((m + 63) / 64, 0);
    // downward closure of the bases
    for (Subset b : bases_) {
        for (Subset s = b; ; s = (s - 1) & b) {
            indep_bits_[s >> 6] |= std::uint64_t{1} << (s & 63);
            if (s == 0) break;
        }
    }
    // rank(G) = size of the largest independent subset of G
    rank_table_.assign(m, 0);
    for (Subset g = 1; g < m; ++g) {
        if (is_independent(g)) {
            rank_table_[g] = static_cast<std::uint8_t>(set_size(g));
        } else {
            std::uint8_t best = 0;
            for (Subset t = g; t != 0; t &= t - 1) {
                Subset without = g & ~(t & (~t + 1u));
                best = std::max(best, rank_table_[without]);
            }
            rank_table_[g] = best;
        }
    }
    // closure(G) = {x : rank(G + x) = rank(G)}
    closure_table_.assign(m, 0);
    for (Subset g = 0; g < m; ++g) {
        Subset cl = g;
        for (int e = 1; e <= n_; ++e) {
            if (contains(g, e)) continue;
            if (rank_table_[g | element_bit(e)] == rank_table_[g]) cl |= element_bit(e);
        }
        closure_table_[g] = cl;
    }
}

void Matroid::validate() {
    // The family is a matroid basis family iff its rank function (max
    // intersection with a basis) is submodular; monotonicity and unit
    // increase hold for any family.  Checking the local form suffices.
    const std::size_t m = std::size_t{1} << n_;
    for (Subset g = 0; g < m; ++g) {
        for (int x = 1; x <= n_; ++x) {
            if (contains(g, x)) continue;
            for (int y = x + 1; y <= n_; ++y) {
                if (contains(g, y)) continue;
                int lhs = rank_table_[g | element_bit(x)] + rank_table_[g | element_bit(y)];
                int rhs = rank_table_[g | element_bit(x) | element_bit(y)] + rank_table_[g];
                if (lhs < rhs) goto not_a_matroid;
            }
        }
    }
    return;

not_a_matroid:
    // Produce the exchange witness the caller expects: a pair (B1, x) such
    // that no y in B2\B1 makes B1 - x + y a basis.
    {
        std::unordered_set<Subset> basis_set(bases_.begin(), bases_.end());
        for (Subset b1 : bases_) {
            for (Subset b2 : bases_) {
                if (b1 == b2) continue;
                for (Subset t = b1 & ~b2; t != 0; t &= t - 1) {
                    Subset xbit = t & (~t + 1u);
                    bool found = false;
                    for (Subset u = b2 & ~b1; u != 0; u &= u - 1) {
                        Subset ybit = u & (~u + 1u);
                        if (basis_set.count((b1 & ~xbit) | ybit)) { found = true; break; }
                    }
                    if (!found) {
                        int x = min_element(xbit);
                        throw NotAMatroid("basis exchange fails for B1=" + flagmono::to_string(b1) +
                                              ", x=" + std::to_string(x) + " against B2=" + flagmono::to_string(b2),
                                          b1, x);
                    }
                }
            }
        }
        throw NotAMatroid("rank function not submodular but no exchange witness found", 0, 0);
    }
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
    return Matroid(n, std::move(bases));
}

Matroid Matroid::uniform(int r, int n) {
    if (n < 0 || n > kMaxGround)
        throw GroundSetTooLarge("ground set size must be between 0 and 16, got " + std::to_string(n));
    if (r < 0 || r > n)
        throw InvalidRank("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) + ", n=" + std::to_string(n));
    return Matroid(n, k_subsets(n, r));
}

Matroid Matroid::near_pencil(int n) {
    if (n < 3) throw TooSmall("near-pencil needs n >= 3, got " + std::to_string(n));
    if (n > kMaxGround) throw GroundSetTooLarge("ground set size must be at most 16");
    std::vector<Subset> bases;
    for (int a = 1; a <= n - 1; ++a)
        for (int b = a + 1; b <= n - 1; ++b)
            bases.push_back(element_bit(a) | element_bit(b) | element_bit(n));
    return Matroid(n, std::move(bases));
}

Matroid Matroid::linear_matroid(int p, const std::vector<std::vector<int>>& columns) {
    if (!is_prime(p)) throw NotPrime("GF(p) needs p prime, got " + std::to_string(p));
    const int n = static_cast<int>(columns.size());
    if (n > kMaxGround) throw GroundSetTooLarge("too many columns: " + std::to_string(n));
    for (const auto& c : columns)
        if (c.size() != columns[0].size())
            throw Error("linear_matroid: columns of unequal dimension");
    const int r = gf_rank(p, columns);
    std::vector<Subset> bases;
    for (Subset g : k_subsets(n, r)) {
        std::vector<std::vector<int>> sel;
        for (int e : elements(g)) sel.push_back(columns[e - 1]);
        if (gf_rank(p, sel) == r) bases.push_back(g);
    }
    return Matroid(n, std::move(bases));
}

Matroid Matroid::truncation(int k) const {
    if (k < 0 || k > rank_)
        throw InvalidRank("truncation rank " + std::to_string(k) + " outside 0.." + std::to_string(rank_));
    std::vector<Subset> bases;
    const std::size_t m = std::size_t{1} << n_;
    for (Subset g = 0; g < m; ++g)
        if (set_size(g) == k && is_independent(g)) bases.push_back(g);
    return Matroid(n_, std::move(bases));
}

Matroid Matroid::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw NotAPermutation("permutation has wrong length");
    Subset seen = 0;
    for (int v : perm) {
        if (v < 1 || v > n_ || contains(seen, v))
            throw NotAPermutation("not a bijection of [" + std::to_string(n_) + "]");
        seen |= element_bit(v);
    }
    std::vector<Subset> bases;
    bases.reserve(bases_.size());
    for (Subset b : bases_) {
        Subset img = 0;
        for (int e : elements(b)) img |= element_bit(perm[e - 1]);
        bases.push_back(img);
    }
    return Matroid(n_, std::move(bases));
}

Matroid truncation(const Matroid& m, int k) { return m.truncation(k); }

}  // namespace flagmono
