#include "flagmono/suite.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

#include "flagmono/chains.hpp"
#include "flagmono/errors.hpp"
#include "flagmono/io.hpp"
#include "flagmono/maps.hpp"
#include "flagmono/parallel.hpp"
#include "flagmono/sr.hpp"

namespace flagmono {

namespace {

constexpr std::size_t kWitnessCap = 50;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Profile {
    const CatalogEntry* entry = nullptr;
    FlatLattice lattice;
    FlagVector flag_f, flag_h;
    CoarseVectors coarse;
    std::vector<long long> indep_h;
    std::vector<Chain> fulls;
    std::vector<JHString> strings;
    std::vector<RankSet> descents;
    std::vector<long long> descent_count;      // by RankSet
    std::vector<std::uint64_t> flat_bits;      // indicator over subsets

    explicit Profile(const CatalogEntry& e) : entry(&e), lattice(flat_lattice(e.m)) {
        flag_f = flag_f_vector(lattice);
        flag_h = h_from_f(flag_f);
        coarse = coarse_vectors(flag_f);
        indep_h = independence_h_vector(e.m);
        fulls = full_chains(lattice);
        descent_count.assign(flag_f.v.size(), 0);
        for (const Chain& c : fulls) {
            strings.push_back(jh_string(lattice, c));
            descents.push_back(descent_set(strings.back()));
            ++descent_count[descents.back()];
        }
        const std::size_t words = ((std::size_t{1} << e.m.ground_size()) + 63) / 64;
        flat_bits.assign(words, 0);
        for (int k = 0; k <= lattice.top_rank(); ++k)
            for (Subset f : lattice.flats_of_rank(k))
                flat_bits[f >> 6] |= std::uint64_t{1} << (f & 63);
    }
};

bool bits_subset(const std::vector<std::uint64_t>& inner, const std::vector<std::uint64_t>& outer) {
    for (std::size_t w = 0; w < inner.size(); ++w)
        if (inner[w] & ~outer[w]) return false;
    return true;
}

struct BasesKey {
    int n = 0;
    std::vector<Subset> bases;
    bool operator==(const BasesKey& o) const { return n == o.n && bases == o.bases; }
};

struct BasesKeyHash {
    std::size_t operator()(const BasesKey& k) const {
        std::size_t h = splitmix64(static_cast<std::uint64_t>(k.n));
        for (Subset b : k.bases) h = splitmix64(h ^ b);
        return h;
    }
};

// Shared state for one suite run.
struct Run {
    const Catalog& cat;
    int jobs;
    std::uint64_t seed;
    std::vector<std::unique_ptr<Profile>> profiles;
    std::vector<WeakPair> weak_pairs;              // all weak pairs
    std::vector<WeakPair> rp_pairs;                // the rank-preserving ones
    std::vector<std::pair<int, int>> strong_pairs;
    std::unordered_map<BasesKey, int, BasesKeyHash> by_bases;

    explicit Run(const Catalog& c, int j, std::uint64_t s) : cat(c), jobs(j), seed(s) {
        profiles.resize(cat.entries.size());
        parallel_for(cat.entries.size(), jobs,
                     [&](std::size_t i) { profiles[i] = std::make_unique<Profile>(cat.entries[i]); });
        for (std::size_t i = 0; i < cat.entries.size(); ++i)
            by_bases.emplace(BasesKey{cat.entries[i].m.ground_size(), cat.entries[i].m.bases()},
                             static_cast<int>(i));
        weak_pairs = find_weak_pairs(cat, false, true);
        for (const WeakPair& p : weak_pairs)
            if (p.rank_preserving) rp_pairs.push_back(p);
        for (std::size_t i = 0; i < cat.entries.size(); ++i)
            for (std::size_t j2 = 0; j2 < cat.entries.size(); ++j2) {
                if (cat.entries[i].m.ground_size() != cat.entries[j2].m.ground_size()) continue;
                if (bits_subset(profiles[j2]->flat_bits, profiles[i]->flat_bits))
                    strong_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j2));
            }
    }

    int lookup(const Matroid& m) const {
        auto it = by_bases.find(BasesKey{m.ground_size(), m.bases()});
        return it == by_bases.end() ? -1 : it->second;
    }
};

// Accumulates items/violations across parallel tasks.
struct Collector {
    std::atomic<long long> items{0};
    std::atomic<long long> violations{0};
    std::mutex mutex;
    std::vector<nlohmann::json> witnesses;

    void item(long long k = 1) { items.fetch_add(k, std::memory_order_relaxed); }
    void violation(nlohmann::json w) {
        violations.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mutex);
        if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(w));
    }
};

// criterion 1: inclusion-exclusion, descent counting, essential-chain
// counting and the Stanley-Reisner quotient dimension agree on every h_S
void check_h_routes(Run& run, Collector& col) {
    parallel_for(run.profiles.size(), run.jobs, [&](std::size_t i) {
        const Profile& p = *run.profiles[i];
        for (RankSet s = 0; s < p.flag_h.v.size(); ++s) {
            const long long via_transform = p.flag_h.at(s);
            const long long via_descents = p.descent_count[s];
            long long via_essential = 0;
            for (const Chain& c : chains_of_flag(p.lattice, s))
                if (is_essential(p.lattice, c)) ++via_essential;
            const long long via_sr = quotient_dim(p.lattice, s);
            col.item();
            if (via_transform < 0 || via_transform != via_descents || via_transform != via_essential ||
                via_transform != via_sr)
                col.violation({{"matroid", p.entry->name},
                               {"S", rank_set_to_json(s)},
                               {"inclusion_exclusion", via_transform},
                               {"descent_count", via_descents},
                               {"essential_count", via_essential},
                               {"sr_dim", via_sr}});
        }
    });
}

// criterion 2: the fixed strong map U(2,2) -> U(1,2) and its independence
// h-vectors, where monotonicity genuinely fails
void check_independence_example(Run&, Collector& col) {
    Matroid a = Matroid::uniform(2, 2);
    Matroid b = Matroid::uniform(1, 2);
    auto ha = independence_h_vector(a);
    auto hb = independence_h_vector(b);
    col.item(3);
    if (ha != std::vector<long long>{1, 0, 0})
        col.violation({{"case", "hI(U(2,2))"}, {"got", ha}});
    if (hb != std::vector<long long>{1, 1}) col.violation({{"case", "hI(U(1,2))"}, {"got", hb}});
    if (!is_strong_map(a, b).holds() || !(ha[1] < hb[1]))
        col.violation({{"case", "U(2,2)->U(1,2) strong map with h1I(A) < h1I(B)"},
                       {"h1I_A", ha[1]},
                       {"h1I_B", hb[1]}});
}

// criterion 3: flag h-vectors are monotone under rank-preserving weak maps
// (plus the weaker flag f comparison as a sanity layer)
void check_flag_monotone(Run& run, Collector& col) {
    parallel_for(run.rp_pairs.size(), run.jobs, [&](std::size_t t) {
        const WeakPair& p = run.rp_pairs[t];
        const Profile& a = *run.profiles[p.a_index];
        const Profile& b = *run.profiles[p.b_index];
        col.item();
        for (RankSet s = 0; s < a.flag_h.v.size(); ++s) {
            if (a.flag_h.at(s) < b.flag_h.at(s))
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"S", rank_set_to_json(s)},
                               {"h_a", a.flag_h.at(s)},
                               {"h_b", b.flag_h.at(s)}});
            if (a.flag_f.at(s) < b.flag_f.at(s))
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"S", rank_set_to_json(s)},
                               {"f_a", a.flag_f.at(s)},
                               {"f_b", b.flag_f.at(s)}});
        }
    });
}

// criterion 4: coarse h/f monotonicity for every weak pair, through the
// truncation decomposition and the strong leg
void check_weak_coarse(Run& run, Collector& col) {
    parallel_for(run.weak_pairs.size(), run.jobs, [&](std::size_t t) {
        const WeakPair& p = run.weak_pairs[t];
        const Profile& a = *run.profiles[p.a_index];
        const Profile& b = *run.profiles[p.b_index];
        col.item();
        const int rank_b = b.entry->m.rank();

        Matroid trunc = a.entry->m.truncation(rank_b);
        const int ti = run.lookup(trunc);
        std::vector<std::uint64_t> t_flats;
        CoarseVectors t_coarse;
        if (ti >= 0) {
            t_flats = run.profiles[ti]->flat_bits;
            t_coarse = run.profiles[ti]->coarse;
        } else {
            FlatLattice lt = flat_lattice(trunc);
            t_flats.assign(a.flat_bits.size(), 0);
            for (int k = 0; k <= lt.top_rank(); ++k)
                for (Subset f : lt.flats_of_rank(k)) t_flats[f >> 6] |= std::uint64_t{1} << (f & 63);
            t_coarse = coarse_vectors(flag_f_vector(lt));
        }

        auto fail = [&](const char* what) {
            col.violation({{"a", a.entry->name}, {"b", b.entry->name}, {"failure", what}});
        };
        if (!bits_subset(t_flats, a.flat_bits)) return fail("A -> T not strong");
        if (trunc.rank() != rank_b) return fail("truncation rank mismatch");
        if (!bits_subset(b.entry->m.independence_bits(), trunc.independence_bits()))
            return fail("T -> B not weak");

        auto coarse_at = [](const std::vector<long long>& v, int i) {
            return i < static_cast<int>(v.size()) ? v[i] : 0;
        };
        for (int i = 0; i <= rank_b - 1; ++i) {
            long long va = coarse_at(a.coarse.h, i), vt = coarse_at(t_coarse.h, i),
                      vb = coarse_at(b.coarse.h, i);
            if (va < vt || vt < vb)
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"k", i},
                               {"h_a", va},
                               {"h_T", vt},
                               {"h_b", vb}});
        }
        for (int i = 0; i <= rank_b; ++i) {
            long long va = coarse_at(a.coarse.f, i), vt = coarse_at(t_coarse.f, i),
                      vb = coarse_at(b.coarse.f, i);
            if (va < vt || vt < vb)
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"k", i},
                               {"f_a", va},
                               {"f_T", vt},
                               {"f_b", vb}});
        }
    });
}

// criterion 5: h-monotonicity on every strong pair, truncation pairs included
void check_strong_monotone(Run& run, Collector& col) {
    parallel_for(run.strong_pairs.size(), run.jobs, [&](std::size_t t) {
        const auto& [ai, bi] = run.strong_pairs[t];
        const Profile& a = *run.profiles[ai];
        const Profile& b = *run.profiles[bi];
        col.item();
        for (int k = 0; k <= b.entry->m.rank() - 1; ++k) {
            long long va = k < static_cast<int>(a.coarse.h.size()) ? a.coarse.h[k] : 0;
            long long vb = k < static_cast<int>(b.coarse.h.size()) ? b.coarse.h[k] : 0;
            if (va < vb)
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"k", k},
                               {"h_a", va},
                               {"h_b", vb}});
        }
    });
    // truncation pairs, verified through the strong-map operation itself
    parallel_for(run.profiles.size(), run.jobs, [&](std::size_t i) {
        const Profile& a = *run.profiles[i];
        for (int k = 1; k <= a.entry->m.rank(); ++k) {
            Matroid t = a.entry->m.truncation(k);
            col.item();
            if (!is_strong_map(a.entry->m, t).holds()) {
                col.violation({{"a", a.entry->name}, {"k", k}, {"failure", "truncation not strong"}});
                continue;
            }
            auto ht = coarse_vectors(flag_f_vector(flat_lattice(t))).h;
            for (int j = 0; j <= k - 1; ++j) {
                long long va = j < static_cast<int>(a.coarse.h.size()) ? a.coarse.h[j] : 0;
                long long vt = j < static_cast<int>(ht.size()) ? ht[j] : 0;
                if (va < vt)
                    col.violation({{"a", a.entry->name},
                                   {"truncation_rank", k},
                                   {"k", j},
                                   {"h_a", va},
                                   {"h_T", vt}});
            }
        }
    });
}

// criterion 6: independence-complex h-monotonicity on rank-preserving pairs
void check_independence_monotone(Run& run, Collector& col) {
    parallel_for(run.rp_pairs.size(), run.jobs, [&](std::size_t t) {
        const WeakPair& p = run.rp_pairs[t];
        const Profile& a = *run.profiles[p.a_index];
        const Profile& b = *run.profiles[p.b_index];
        col.item();
        for (std::size_t k = 0; k < b.indep_h.size(); ++k)
            if (a.indep_h[k] < b.indep_h[k])
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"k", k},
                               {"hI_a", a.indep_h[k]},
                               {"hI_b", b.indep_h[k]}});
    });
}

// criterion 7: the full duality machinery per rank-preserving pair
void check_duality(Run& run, Collector& col) {
    parallel_for(run.rp_pairs.size(), run.jobs, [&](std::size_t t) {
        const WeakPair& p = run.rp_pairs[t];
        const Profile& a = *run.profiles[p.a_index];
        const Profile& b = *run.profiles[p.b_index];
        col.item();
        try {
            for (const SurjectivityReport& rep : verify_surjectivity_all(a.entry->m, b.entry->m)) {
                if (rep.ok()) continue;
                col.violation({{"a", a.entry->name},
                               {"b", b.entry->name},
                               {"S", rank_set_to_json(rep.degree)},
                               {"detail", rep.detail},
                               {"h_A", rep.h_A},
                               {"dim_Aprime", rep.dim_Aprime},
                               {"h_B", rep.h_B},
                               {"functionals", rep.functional_count},
                               {"rank_fC", rep.rank_fC}});
            }
        } catch (const Error& e) {
            col.violation({{"a", a.entry->name}, {"b", b.entry->name}, {"exception", e.what()}});
        }
    });
}

// criterion 8: mu/nu round-trips and the full-chain <-> valid-string bijection
void check_bijections(Run& run, Collector& col) {
    parallel_for(run.profiles.size(), run.jobs, [&](std::size_t i) {
        const Profile& p = *run.profiles[i];
        const int r = p.lattice.proper_rank();
        for (RankSet s = 0; s < (RankSet{1} << r); ++s) {
            for (const Chain& c : chains_of_flag(p.lattice, s)) {
                Chain mu = minimal_completion(p.lattice, c);
                col.item();
                if ((descent_set(jh_string(p.lattice, mu)) & ~s) != 0 ||
                    restrict_to_ranks(p.lattice, mu, s) != c)
                    col.violation({{"matroid", p.entry->name},
                                   {"S", rank_set_to_json(s)},
                                   {"failure", "nu(mu(C)) != C or descents escape S"}});
            }
        }
        for (std::size_t ci = 0; ci < p.fulls.size(); ++ci) {
            const RankSet desc = p.descents[ci];
            const RankSet free = full_set(r) & ~desc;
            RankSet extra = free;
            while (true) {  // all supersets of the descent set
                RankSet s = desc | extra;
                col.item();
                if (minimal_completion(p.lattice, restrict_to_ranks(p.lattice, p.fulls[ci], s)) !=
                    p.fulls[ci])
                    col.violation({{"matroid", p.entry->name},
                                   {"S", rank_set_to_json(s)},
                                   {"failure", "mu(nu(D)) != D"}});
                if (extra == 0) break;
                extra = (extra - 1) & free;
            }
        }
        // every ordering of every basis that passes is_valid_string is the
        // string of exactly one full chain
        std::vector<JHString> valid;
        for (Subset basis : p.entry->m.bases()) {
            auto els = elements(basis);
            std::sort(els.begin(), els.end());
            do {
                if (is_valid_string(p.entry->m, els)) valid.push_back(els);
            } while (std::next_permutation(els.begin(), els.end()));
        }
        std::vector<JHString> from_chains = p.strings;
        std::sort(valid.begin(), valid.end());
        std::sort(from_chains.begin(), from_chains.end());
        col.item();
        if (valid != from_chains ||
            std::adjacent_find(from_chains.begin(), from_chains.end()) != from_chains.end())
            col.violation({{"matroid", p.entry->name},
                           {"failure", "valid strings do not biject with full chains"},
                           {"valid", valid.size()},
                           {"full_chains", from_chains.size()}});
    });
}

// criterion 9: flag vectors are invariant under relabeling
void check_relabel(Run& run, Collector& col) {
    parallel_for(run.profiles.size(), run.jobs, [&](std::size_t i) {
        const Profile& p = *run.profiles[i];
        const int n = p.entry->m.ground_size();
        std::mt19937_64 rng(splitmix64(run.seed ^ splitmix64(i)));
        std::vector<int> perm(n);
        for (int e = 0; e < n; ++e) perm[e] = e + 1;
        for (int trial = 0; trial < 50; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Matroid rel = p.entry->m.relabel(perm);
            FlagVector f = flag_f_vector(flat_lattice(rel));
            col.item();
            if (f.v != p.flag_f.v || h_from_f(f).v != p.flag_h.v)
                col.violation({{"matroid", p.entry->name},
                               {"perm", perm},
                               {"failure", "flag vectors changed under relabeling"}});
        }
    });
}

// criterion 10: the uniform matroid dominates every matroid of its rank/size
void check_uniform_max(Run& run, Collector& col) {
    parallel_for(run.profiles.size(), run.jobs, [&](std::size_t i) {
        const Profile& p = *run.profiles[i];
        Matroid u = Matroid::uniform(p.entry->m.rank(), p.entry->m.ground_size());
        int ui = run.lookup(u);
        FlagVector hu = ui >= 0 ? run.profiles[ui]->flag_h : flag_h_vector(flat_lattice(u));
        col.item();
        if (!is_weak_map(u, p.entry->m).holds()) {
            col.violation({{"matroid", p.entry->name}, {"failure", "no weak map from uniform"}});
            return;
        }
        for (RankSet s = 0; s < p.flag_h.v.size(); ++s)
            if (p.flag_h.at(s) > hu.at(s))
                col.violation({{"matroid", p.entry->name},
                               {"S", rank_set_to_json(s)},
                               {"h_M", p.flag_h.at(s)},
                               {"h_U", hu.at(s)}});
    });
}

}  // namespace

const std::vector<std::pair<CheckId, std::string>>& all_checks() {
    static const std::vector<std::pair<CheckId, std::string>> table = {
        {CheckId::h_routes, "h-route-agreement"},
        {CheckId::independence_example, "independence-example"},
        {CheckId::flag_monotone, "flag-h-monotonicity"},
        {CheckId::weak_coarse_monotone, "weak-map-coarse-monotonicity"},
        {CheckId::strong_monotone, "strong-map-h-monotonicity"},
        {CheckId::independence_monotone, "independence-h-monotonicity"},
        {CheckId::duality, "duality-machinery"},
        {CheckId::bijections, "bijection-round-trips"},
        {CheckId::relabel_invariance, "relabel-invariance"},
        {CheckId::uniform_max, "uniform-maximality"},
    };
    return table;
}

std::set<CheckId> parse_checks(const std::string& csv) {
    std::set<CheckId> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "all") {
            for (const auto& [id, name] : all_checks()) out.insert(id);
            continue;
        }
        bool found = false;
        for (const auto& [id, name] : all_checks())
            if (name == tok) {
                out.insert(id);
                found = true;
            }
        if (!found) throw ParseError("unknown check: " + tok);
    }
    return out;
}

SuiteReport run_suite(const Catalog& cat, const std::set<CheckId>& checks, int jobs,
                      std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    Run run(cat, jobs, seed);

    SuiteReport report;
    report.catalog_size = cat.entries.size();
    report.seed = seed;
    report.weak_pairs = static_cast<long long>(run.weak_pairs.size());
    report.rank_preserving_pairs = static_cast<long long>(run.rp_pairs.size());
    report.strong_pairs = static_cast<long long>(run.strong_pairs.size());

    const std::unordered_map<CheckId, void (*)(Run&, Collector&)> impls = {
        {CheckId::h_routes, check_h_routes},
        {CheckId::independence_example, check_independence_example},
        {CheckId::flag_monotone, check_flag_monotone},
        {CheckId::weak_coarse_monotone, check_weak_coarse},
        {CheckId::strong_monotone, check_strong_monotone},
        {CheckId::independence_monotone, check_independence_monotone},
        {CheckId::duality, check_duality},
        {CheckId::bijections, check_bijections},
        {CheckId::relabel_invariance, check_relabel},
        {CheckId::uniform_max, check_uniform_max},
    };

    for (const auto& [id, name] : all_checks()) {
        if (!checks.count(id)) continue;
        Collector col;
        const auto c0 = clock::now();
        try {
            impls.at(id)(run, col);
        } catch (const std::exception& e) {
            col.violation({{"check", name}, {"exception", e.what()}});
        }
        CheckResult res;
        res.id = id;
        res.name = name;
        res.items = col.items.load();
        res.violations = col.violations.load();
        res.witnesses = std::move(col.witnesses);
        res.ms = std::chrono::duration<double, std::milli>(clock::now() - c0).count();
        report.checks.push_back(std::move(res));
    }
    report.total_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return report;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"name", c.name},
                               {"items", c.items},
                               {"violations", c.violations},
                               {"passed", c.passed()},
                               {"ms", c.ms},
                               {"witnesses", c.witnesses}});
    return {{"catalog_size", catalog_size},
            {"seed", seed},
            {"weak_pairs", weak_pairs},
            {"rank_preserving_pairs", rank_preserving_pairs},
            {"strong_pairs", strong_pairs},
            {"checks", checks_json},
            {"all_passed", all_passed()},
            {"total_ms", total_ms}};
}

std::string SuiteReport::to_csv() const {
    std::ostringstream out;
    out << "check,items,violations,passed,ms\n";
    for (const auto& c : checks)
        out << c.name << "," << c.items << "," << c.violations << "," << (c.passed() ? 1 : 0) << ","
            << c.ms << "\n";
    return out.str();
}

}  // namespace flagmono
