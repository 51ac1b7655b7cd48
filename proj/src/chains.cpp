#include "flagmono/chains.hpp"

#include <algorithm>
#include <functional>

#include "flagmono/errors.hpp"

namespace flagmono {

namespace {

void check_rank_set(const FlatLattice& L, RankSet s) {
    if ((s & ~full_set(L.proper_rank())) != 0)
        throw RankOutOfRange("rank set not contained in [" + std::to_string(L.proper_rank()) + "]");
}

void check_chain(const FlatLattice& L, const Chain& c) {
    int prev_rank = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int k = L.rank_of_flat(c[i]);  // throws if not a flat
        if (k <= (i == 0 ? 0 : prev_rank) || k >= L.top_rank())
            throw Error("not a chain of proper flats");
        if (i > 0 && !subset_of(c[i - 1], c[i]))
            throw Error("chain flats not nested");
        prev_rank = k;
    }
}

}  // namespace

RankSet flag_of(const FlatLattice& L, const Chain& c) {
    check_chain(L, c);
    RankSet s = 0;
    for (Subset f : c) s |= RankSet{1} << (L.rank_of_flat(f) - 1);
    return s;
}

std::vector<Chain> chains_of_flag(const FlatLattice& L, RankSet s) {
    check_rank_set(L, s);
    std::vector<int> ranks = elements(s);
    std::vector<Chain> out;
    Chain cur;
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == ranks.size()) {
            out.push_back(cur);
            return;
        }
        for (Subset f : L.flats_of_rank(ranks[depth])) {
            if (!cur.empty() && !subset_of(cur.back(), f)) continue;
            cur.push_back(f);
            rec(depth + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

long long count_chains_of_flag(const FlatLattice& L, RankSet s) {
    check_rank_set(L, s);
    if (s == 0) return 1;
    std::vector<int> ranks = elements(s);
    const auto& first = L.flats_of_rank(ranks[0]);
    std::vector<long long> cnt(first.size(), 1);
    for (std::size_t step = 1; step < ranks.size(); ++step) {
        const auto& lo = L.flats_of_rank(ranks[step - 1]);
        const auto& hi = L.flats_of_rank(ranks[step]);
        std::vector<long long> next(hi.size(), 0);
        for (std::size_t j = 0; j < hi.size(); ++j)
            for (std::size_t i = 0; i < lo.size(); ++i)
                if (subset_of(lo[i], hi[j])) next[j] += cnt[i];
        cnt = std::move(next);
    }
    long long total = 0;
    for (long long c : cnt) total += c;
    return total;
}

std::vector<Chain> full_chains(const FlatLattice& L) {
    return chains_of_flag(L, full_set(L.proper_rank()));
}

FlagVector flag_f_vector(const FlatLattice& L) {
    FlagVector out;
    out.r = L.proper_rank();
    out.v.resize(std::size_t{1} << out.r);
    for (RankSet s = 0; s < out.v.size(); ++s) out.v[s] = count_chains_of_flag(L, s);
    return out;
}

FlagVector h_from_f(const FlagVector& f) {
    FlagVector h;
    h.r = f.r;
    h.v.assign(f.v.size(), 0);
    for (RankSet s = 0; s < h.v.size(); ++s) {
        long long acc = 0;
        RankSet t = s;
        while (true) {  // all submasks of s
            int sign = (set_size(s) - set_size(t)) % 2 == 0 ? 1 : -1;
            acc += sign * f.v[t];
            if (t == 0) break;
            t = (t - 1) & s;
        }
        h.v[s] = acc;
    }
    return h;
}

FlagVector f_from_h(const FlagVector& h) {
    FlagVector f;
    f.r = h.r;
    f.v.assign(h.v.size(), 0);
    for (RankSet s = 0; s < f.v.size(); ++s) {
        long long acc = 0;
        RankSet t = s;
        while (true) {
            acc += h.v[t];
            if (t == 0) break;
            t = (t - 1) & s;
        }
        f.v[s] = acc;
    }
    return f;
}

FlagVector flag_h_vector(const FlatLattice& L) { return h_from_f(flag_f_vector(L)); }

std::vector<long long> coarse_h_from_f(const std::vector<long long>& f, int r) {
    // binomial table up to r
    std::vector<std::vector<long long>> c(r + 1, std::vector<long long>(r + 1, 0));
    for (int i = 0; i <= r; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    std::vector<long long> h(r + 1, 0);
    for (int k = 0; k <= r; ++k)
        for (int i = 0; i <= k; ++i) {
            long long term = c[r - i][k - i] * f[i];
            h[k] += (k - i) % 2 == 0 ? term : -term;
        }
    return h;
}

CoarseVectors coarse_vectors(const FlagVector& flag_f) {
    CoarseVectors out;
    out.f.assign(flag_f.r + 1, 0);
    out.h.assign(flag_f.r + 1, 0);
    FlagVector flag_h = h_from_f(flag_f);
    for (RankSet s = 0; s < flag_f.v.size(); ++s) {
        out.f[set_size(s)] += flag_f.v[s];
        out.h[set_size(s)] += flag_h.v[s];
    }
    if (coarse_h_from_f(out.f, flag_f.r) != out.h)
        throw Error("coarse h-vector identity violated");
    return out;
}

std::vector<long long> independence_f_vector(const Matroid& m) {
    std::vector<long long> f(m.rank() + 1, 0);
    const std::size_t cnt = std::size_t{1} << m.ground_size();
    for (Subset g = 0; g < cnt; ++g)
        if (m.is_independent(g)) ++f[set_size(g)];
    return f;
}

std::vector<long long> independence_h_vector(const Matroid& m) {
    return coarse_h_from_f(independence_f_vector(m), m.rank());
}

JHString jh_string(const FlatLattice& L, const Chain& full) {
    if (flag_of(L, full) != full_set(L.proper_rank()))
        throw NotFullChain("chain flag is not [" + std::to_string(L.proper_rank()) + "]");
    if (L.top_rank() == 0) return {};
    JHString s;
    Subset prev = L.zero_flat();
    for (std::size_t i = 0; i <= full.size(); ++i) {
        Subset cur = i < full.size() ? full[i] : L.top_flat();
        s.push_back(min_element(cur & ~prev));
        prev = cur;
    }
    return s;
}

RankSet descent_set(const JHString& s) {
    RankSet d = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] > s[i]) d |= RankSet{1} << (i - 1);
    return d;
}

bool is_valid_string(const Matroid& m, const JHString& s) {
    if (static_cast<int>(s.size()) != m.rank()) return false;
    Subset mask = 0;
    for (int b : s) {
        if (b < 1 || b > m.ground_size() || contains(mask, b)) return false;
        mask |= element_bit(b);
    }
    if (m.rank_of(mask) != m.rank()) return false;  // not a basis
    Subset prev = m.loops(), pmask = 0;
    for (int b : s) {
        pmask |= element_bit(b);
        Subset cur = m.closure(pmask);
        if (min_element(cur & ~prev) != b) return false;
        prev = cur;
    }
    return true;
}

Chain minimal_completion(const FlatLattice& L, const Chain& c) {
    check_chain(L, c);
    Chain out;
    Subset cur = L.zero_flat();
    for (std::size_t i = 0; i <= c.size(); ++i) {
        Subset next = i < c.size() ? c[i] : L.top_flat();
        int next_rank = i < c.size() ? L.rank_of_flat(next) : L.top_rank();
        int cur_rank = L.rank_of_flat(cur);
        while (cur_rank + 1 < next_rank) {
            int x = min_element(next & ~cur);
            Subset step = L.lattice_closure(cur | element_bit(x));
            if (L.rank_of_flat(step) != cur_rank + 1 || !subset_of(step, next))
                throw TheoremViolation("interpolation step failed in minimal completion");
            out.push_back(step);
            cur = step;
            ++cur_rank;
        }
        if (i < c.size()) out.push_back(next);
        cur = next;
    }
    return out;
}

Chain restrict_to_ranks(const FlatLattice& L, const Chain& c, RankSet s) {
    Chain out;
    for (Subset f : c)
        if (s & (RankSet{1} << (L.rank_of_flat(f) - 1))) out.push_back(f);
    return out;
}

bool is_essential(const FlatLattice& L, const Chain& c) {
    check_chain(L, c);
    if (c.empty()) return true;
    std::vector<Subset> seq;
    seq.push_back(L.zero_flat());
    seq.insert(seq.end(), c.begin(), c.end());
    seq.push_back(L.top_flat());
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        Subset low = seq[i - 1];
        const Subset high = seq[i + 1];
        const int steps = L.rank_of_flat(seq[i]) - L.rank_of_flat(low);
        for (int t = 0; t < steps; ++t) {
            int x = min_element(high & ~low);
            low = L.lattice_closure(low | element_bit(x));
        }
        if (low == seq[i]) return false;  // seq[i] is minimal in its interval
    }
    return true;
}

int lex_compare(const FlatLattice& L, const Chain& a, const Chain& b) {
    if (flag_of(L, a) != flag_of(L, b)) throw FlagMismatch("chains have different flags");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return flat_lex_less(a[i], b[i]) ? -1 : 1;
    }
    return 0;
}

}  // namespace flagmono
