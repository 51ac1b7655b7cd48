#include "flagmono/catalog.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "flagmono/errors.hpp"
#include "flagmono/maps.hpp"

namespace flagmono {

namespace {

std::vector<Subset> sorted_k_subsets(int n, int k) {
    std::vector<Subset> out;
    const Subset all = full_set(n);
    for (Subset g = 0;; ++g) {
        if (set_size(g) == k) out.push_back(g);
        if (g == all) break;
    }
    std::sort(out.begin(), out.end(), flat_lex_less);
    return out;
}

// DFS over include/exclude decisions for each candidate basis.  Every
// exchange condition among the chosen bases is tracked as a requirement
// watching one witness candidate that is not yet excluded; excluding the
// watched candidate forces a rewatch or, when no witness is left, a dead
// branch.  At a leaf all requirements watch chosen candidates, so the chosen
// family satisfies basis exchange exactly.
class FamilySearch {
public:
    FamilySearch(int n, int r) : cand_(sorted_k_subsets(n, r)) {
        for (std::size_t i = 0; i < cand_.size(); ++i) index_[cand_[i]] = static_cast<int>(i);
        decision_.assign(cand_.size(), kUndecided);
        watchers_.assign(cand_.size(), {});
    }

    std::vector<std::vector<Subset>> run() {
        results_.clear();
        dfs(0);
        return std::move(results_);
    }

private:
    static constexpr std::int8_t kUndecided = 0, kIn = 1, kOut = 2;

    struct Requirement {
        std::vector<int> witnesses;
        std::uint64_t stamp = 0;
    };

    void dfs(std::size_t k) {
        if (k == cand_.size()) {
            if (!chosen_.empty()) {
                std::vector<Subset> family;
                family.reserve(chosen_.size());
                for (int i : chosen_) family.push_back(cand_[i]);
                std::sort(family.begin(), family.end(), flat_lex_less);
                results_.push_back(std::move(family));
            }
            return;
        }

        // include cand_[k]
        decision_[k] = kIn;
        chosen_.push_back(static_cast<int>(k));
        const std::size_t arena_mark = arena_.size();
        if (add_requirements(static_cast<int>(k))) dfs(k + 1);
        arena_.resize(arena_mark);
        chosen_.pop_back();
        decision_[k] = kUndecided;

        // exclude cand_[k]
        decision_[k] = kOut;
        if (rewatch_all(static_cast<int>(k))) dfs(k + 1);
        decision_[k] = kUndecided;
    }

    // Exchange requirements for the pairs formed with the newly chosen basis.
    bool add_requirements(int k) {
        for (int j : chosen_) {
            if (j == k) continue;
            if (!add_pair(k, j) || !add_pair(j, k)) return false;
        }
        return true;
    }

    // For each x in B1 \ B2: some y in B2 \ B1 must have B1 - x + y chosen.
    bool add_pair(int i1, int i2) {
        const Subset b1 = cand_[i1], b2 = cand_[i2];
        for (Subset t = b1 & ~b2; t != 0; t &= t - 1) {
            const Subset xbit = t & (~t + 1u);
            std::vector<int> witnesses;
            bool satisfied = false;
            int watch = -1;
            for (Subset u = b2 & ~b1; u != 0; u &= u - 1) {
                const Subset ybit = u & (~u + 1u);
                const int w = index_.at((b1 & ~xbit) | ybit);
                if (decision_[w] == kIn) {
                    satisfied = true;  // witness chosen earlier; stays chosen while this pair is alive
                    break;
                }
                if (decision_[w] == kUndecided && watch < 0) watch = w;
                witnesses.push_back(w);
            }
            if (satisfied) continue;
            if (watch < 0) return false;  // all witnesses excluded
            arena_.push_back({std::move(witnesses), ++stamp_});
            watchers_[watch].emplace_back(static_cast<int>(arena_.size()) - 1, stamp_);
        }
        return true;
    }

    // Candidate w was excluded: every live requirement watching it needs a
    // new witness that is chosen or undecided.
    bool rewatch_all(int w) {
        auto& list = watchers_[w];
        std::size_t out = 0;
        bool ok = true;
        for (std::size_t i = 0; i < list.size(); ++i) {
            auto [slot, stamp] = list[i];
            if (slot >= static_cast<int>(arena_.size()) || arena_[slot].stamp != stamp)
                continue;  // stale: the creating inclusion was undone
            int next = -1;
            for (int cand : arena_[slot].witnesses)
                if (decision_[cand] != kOut) { next = cand; break; }
            if (next < 0) {
                // keep remaining entries (including this one) and fail
                for (std::size_t j = i; j < list.size(); ++j) list[out++] = list[j];
                ok = false;
                break;
            }
            watchers_[next].emplace_back(slot, stamp);
        }
        if (ok) out = 0;
        list.resize(ok ? 0 : out);
        return ok;
    }

    std::vector<Subset> cand_;
    std::unordered_map<Subset, int> index_;
    std::vector<std::int8_t> decision_;
    std::vector<int> chosen_;
    std::vector<Requirement> arena_;
    std::vector<std::vector<std::pair<int, std::uint64_t>>> watchers_;
    std::uint64_t stamp_ = 0;
    std::vector<std::vector<Subset>> results_;
};

}  // namespace

std::vector<Matroid> enumerate_basis_families(int n, int r) {
    FamilySearch search(n, r);
    auto families = search.run();
    std::sort(families.begin(), families.end(),
              [](const std::vector<Subset>& a, const std::vector<Subset>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                      flat_lex_less);
              });
    std::vector<Matroid> out;
    out.reserve(families.size());
    for (auto& f : families) out.push_back(Matroid::from_bases(n, std::move(f)));
    return out;
}

Catalog enumerate_matroids(int n, int r, int cap) {
    if (n > cap)
        throw CapExceeded("ground set size " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(cap));
    if (n < 0 || r < 0 || r > n) throw InvalidRank("need 0 <= r <= n");
    Catalog cat;
    auto ms = enumerate_basis_families(n, r);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::string name = "n" + std::to_string(n) + "r" + std::to_string(r) + "#" + std::to_string(i);
        cat.entries.push_back({std::move(name), "enumerated", std::move(ms[i])});
    }
    return cat;
}

Catalog exhaustive_catalog(int n_max, int cap) {
    Catalog cat;
    for (int n = 0; n <= n_max; ++n)
        for (int r = 0; r <= n; ++r) {
            Catalog part = enumerate_matroids(n, r, cap);
            for (auto& e : part.entries) cat.entries.push_back(std::move(e));
        }
    return cat;
}

std::vector<WeakPair> find_weak_pairs(const Catalog& cat, bool rank_preserving_only,
                                      bool include_identity) {
    std::vector<WeakPair> out;
    const auto& es = cat.entries;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto& bits_a = es[i].m.independence_bits();
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (!include_identity && i == j) continue;
            if (es[i].m.ground_size() != es[j].m.ground_size()) continue;
            const bool rank_preserving = es[i].m.rank() == es[j].m.rank();
            if (rank_preserving_only && !rank_preserving) continue;
            const auto& bits_b = es[j].m.independence_bits();
            bool weak = true;
            for (std::size_t w = 0; w < bits_a.size() && weak; ++w)
                weak = (bits_b[w] & ~bits_a[w]) == 0;
            if (weak) out.push_back({static_cast<int>(i), static_cast<int>(j), rank_preserving});
        }
    }
    return out;
}

Matroid random_linear(int p, int d, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, p - 1);
    std::vector<std::vector<int>> cols(n, std::vector<int>(d));
    for (auto& col : cols)
        for (int& v : col) v = dist(rng);
    return Matroid::linear_matroid(p, cols);
}

std::vector<Subset> canonical_basis_key(const Matroid& m) {
    const int n = m.ground_size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<Subset> best;
    do {
        std::vector<Subset> mapped;
        mapped.reserve(m.bases().size());
        for (Subset b : m.bases()) {
            Subset img = 0;
            for (int e : elements(b)) img |= element_bit(perm[e - 1]);
            mapped.push_back(img);
        }
        std::sort(mapped.begin(), mapped.end(), flat_lex_less);
        if (best.empty() ||
            std::lexicographical_compare(mapped.begin(), mapped.end(), best.begin(), best.end(),
                                         flat_lex_less))
            best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace flagmono
