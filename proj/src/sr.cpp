#include "flagmono/sr.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "flagmono/errors.hpp"

namespace flagmono {

namespace {

struct ChainHash {
    std::size_t operator()(const Chain& c) const {
        std::size_t h = 1469598103934665603ull;
        for (Subset f : c) {
            h ^= f;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using ChainIndex = std::unordered_map<Chain, int, ChainHash>;

ChainIndex index_chains(const std::vector<Chain>& chains) {
    ChainIndex idx;
    idx.reserve(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) idx.emplace(chains[i], static_cast<int>(i));
    return idx;
}

void check_rank_set(const FlatLattice& L, RankSet s) {
    if ((s & ~full_set(L.proper_rank())) != 0)
        throw RankOutOfRange("rank set not contained in [" + std::to_string(L.proper_rank()) + "]");
}

// Relation matrix without the row descriptions.
IntMat theta_matrix(const FlatLattice& L, RankSet s, const std::vector<Chain>& cols,
                    std::vector<std::pair<int, Chain>>* row_desc) {
    std::vector<int> ranks = elements(s);
    std::vector<ChainIndex> sub_index(ranks.size());
    std::vector<int> row_offset(ranks.size(), 0);
    int total_rows = 0;
    for (std::size_t t = 0; t < ranks.size(); ++t) {
        auto subs = chains_of_flag(L, s & ~(RankSet{1} << (ranks[t] - 1)));
        sub_index[t] = index_chains(subs);
        row_offset[t] = total_rows;
        total_rows += static_cast<int>(subs.size());
        if (row_desc)
            for (auto& c : subs) row_desc->emplace_back(ranks[t], std::move(c));
    }
    IntMat mat(total_rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const Chain& d = cols[j];
        for (std::size_t t = 0; t < ranks.size(); ++t) {
            Chain c = d;
            c.erase(c.begin() + static_cast<long>(t));
            mat.at(row_offset[t] + sub_index[t].at(c), j) = 1;
        }
    }
    return mat;
}

// Permutations of H (the Young subgroup generated by the transpositions
// (i, i+1) for i in s) as position arrays with signs.
std::vector<std::pair<std::vector<int>, int>> subgroup_H(RankSet s, int length) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= length - 1; ++i) {
        if (!(s & (RankSet{1} << (i - 1)))) continue;
        if (!blocks.empty() && blocks.back().back() == i) {
            blocks.back().push_back(i + 1);
        } else {
            blocks.push_back({i, i + 1});
        }
    }
    std::vector<std::pair<std::vector<int>, int>> out;
    std::vector<int> identity(length);
    for (int k = 0; k < length; ++k) identity[k] = k + 1;
    out.emplace_back(identity, 1);
    for (const auto& block : blocks) {
        std::vector<int> arrangement = block;
        std::vector<std::pair<std::vector<int>, int>> next;
        do {
            int inversions = 0;
            for (std::size_t x = 0; x < arrangement.size(); ++x)
                for (std::size_t y = x + 1; y < arrangement.size(); ++y)
                    if (arrangement[x] > arrangement[y]) ++inversions;
            int sign = inversions % 2 == 0 ? 1 : -1;
            for (const auto& [base, base_sign] : out) {
                std::vector<int> perm = base;
                for (std::size_t x = 0; x < block.size(); ++x) perm[block[x] - 1] = arrangement[x];
                next.emplace_back(std::move(perm), base_sign * sign);
            }
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        out = std::move(next);
    }
    return out;
}

// nu(C_sigma): closures of permuted string prefixes, restricted to ranks in s.
Chain permuted_prefix_chain(const std::vector<int>& perm, const JHString& letters, RankSet s,
                            const std::function<Subset(Subset)>& close) {
    Chain out;
    Subset prefix = 0;
    for (int k = 1; k <= static_cast<int>(letters.size()); ++k) {
        prefix |= element_bit(letters[perm[k - 1] - 1]);
        if (k <= static_cast<int>(letters.size()) - 1 && (s & (RankSet{1} << (k - 1))))
            out.push_back(close(prefix));
    }
    return out;
}

struct FunctionalBuild {
    Functional fn;
    int diag = -1;  // column of nu(C); -1 disables the triangularity checks
    bool triangular = true;
    bool diag_one = true;
};

FunctionalBuild build_functional(const JHString& letters, RankSet s, const ChainIndex& col_index,
                                 std::size_t col_count, int diag_col,
                                 const std::function<Subset(Subset)>& close) {
    FunctionalBuild b;
    b.fn.degree = s;
    b.fn.coeffs.assign(col_count, 0);
    b.diag = diag_col;
    for (const auto& [perm, sign] : subgroup_H(s, static_cast<int>(letters.size()))) {
        Chain chain = permuted_prefix_chain(perm, letters, s, close);
        auto it = col_index.find(chain);
        if (it == col_index.end()) throw TheoremViolation("permuted prefix chain left the degree");
        if (diag_col >= 0 && it->second > diag_col) b.triangular = false;
        b.fn.coeffs[it->second] += sign;
    }
    if (diag_col >= 0 && b.fn.coeffs[diag_col] != 1) b.diag_one = false;
    return b;
}

bool annihilates(const IntMat& relations, const Functional& f) {
    for (int i = 0; i < relations.rows; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < relations.cols; ++j)
            if (relations.at(i, j) != 0) acc += f.coeffs[j];
        if (acc != 0) return false;
    }
    return true;
}

JHString jh_string_of_full_b_chain(const Matroid& b, const Chain& c) {
    const int r = b.rank() > 0 ? b.rank() - 1 : 0;
    if (static_cast<int>(c.size()) != r) throw NotFullChain("chain is not full in Delta(B)");
    if (b.rank() == 0) return {};
    JHString letters;
    Subset prev = b.loops();
    for (std::size_t i = 0; i <= c.size(); ++i) {
        Subset cur = i < c.size() ? c[i] : full_set(b.ground_size());
        if (i < c.size() && (b.closure(cur) != cur || b.rank_of(cur) != static_cast<int>(i) + 1))
            throw NotFullChain("chain entry is not a rank-" + std::to_string(i + 1) + " flat of B");
        if (!subset_of(prev, cur) || prev == cur) throw NotFullChain("chain flats not strictly nested");
        letters.push_back(min_element(cur & ~prev));
        prev = cur;
    }
    return letters;
}

struct PairContext {
    FlatLattice la, lb;
    FlagVector h_a, h_b;
    PseudoMatroidLattice ap;
    std::vector<Chain> fulls;
    std::vector<JHString> strings;
    std::vector<RankSet> descents;
};

PairContext make_pair_context(const Matroid& a, const Matroid& b) {
    if (is_weak_map(a, b).kind != MapKind::rank_preserving_weak)
        throw NotRankPreservingWeak("pair is not a rank-preserving weak map");
    PairContext ctx{flat_lattice(a), flat_lattice(b), {}, {}, pseudo_matroid(a, b), {}, {}, {}};
    ctx.h_a = flag_h_vector(ctx.la);
    ctx.h_b = flag_h_vector(ctx.lb);
    ctx.fulls = full_chains(ctx.lb);
    for (const Chain& c : ctx.fulls) {
        ctx.strings.push_back(jh_string(ctx.lb, c));
        ctx.descents.push_back(descent_set(ctx.strings.back()));
    }
    return ctx;
}

SurjectivityReport run_degree(const PairContext& ctx, RankSet s) {
    SurjectivityReport rep;
    rep.degree = s;
    rep.h_B = ctx.h_b.at(s);
    rep.h_A = ctx.h_a.at(s);

    auto cols_b = chains_of_flag(ctx.lb, s);
    auto colidx_b = index_chains(cols_b);
    auto cols_a = chains_of_flag(ctx.ap.lattice, s);
    auto colidx_a = index_chains(cols_a);
    IntMat rel_b = theta_matrix(ctx.lb, s, cols_b, nullptr);
    IntMat rel_a = theta_matrix(ctx.ap.lattice, s, cols_a, nullptr);
    rep.dim_Aprime = static_cast<long long>(cols_a.size()) - exact_rank(rel_a);
    rep.dim_chain_ok = rep.h_A >= rep.dim_Aprime && rep.dim_Aprime >= rep.h_B;
    if (!rep.dim_chain_ok) rep.detail = "dimension chain violated";

    // psi in degree s, rows = A'-chains, cols = B-chains
    IntMat psi(static_cast<int>(cols_a.size()), static_cast<int>(cols_b.size()));
    for (std::size_t i = 0; i < cols_a.size(); ++i) {
        Chain img;
        for (Subset f : cols_a[i]) img.push_back(ctx.ap.b.closure(f));
        auto it = colidx_b.find(img);
        if (it == colidx_b.end()) throw TheoremViolation("psi image is not a B-chain of the degree");
        psi.at(static_cast<int>(i), it->second) = 1;
    }

    auto close_b = [&](Subset g) { return ctx.ap.b.closure(g); };
    auto close_a = [&](Subset g) { return ctx.ap.a.closure(g); };

    rep.annihilator_ok = rep.triangular_ok = rep.preimage_ok = true;
    std::vector<Functional> fs;
    for (std::size_t i = 0; i < ctx.fulls.size(); ++i) {
        if (ctx.descents[i] != s) continue;
        Chain nu_c = restrict_to_ranks(ctx.lb, ctx.fulls[i], s);
        FunctionalBuild fb = build_functional(ctx.strings[i], s, colidx_b,
                                              cols_b.size(), colidx_b.at(nu_c), close_b);
        if (!fb.triangular || !fb.diag_one) {
            rep.triangular_ok = false;
            rep.detail = "triangularity failed";
        }
        if (!annihilates(rel_b, fb.fn)) {
            rep.annihilator_ok = false;
            rep.detail = "f_C not in the B-annihilator";
        }

        // preimage through A-closures; flats must lie in F(A')
        FunctionalBuild gb = build_functional(ctx.strings[i], s, colidx_a, cols_a.size(), -1, close_a);
        if (!annihilates(rel_a, gb.fn)) {
            rep.preimage_ok = false;
            rep.detail = "g_C not in the A'-annihilator";
        }
        for (int j = 0; j < psi.cols; ++j) {
            BigInt acc = 0;
            for (int t = 0; t < psi.rows; ++t)
                if (psi.at(t, j) != 0) acc += gb.fn.coeffs[t];
            if (acc != fb.fn.coeffs[j]) {
                rep.preimage_ok = false;
                rep.detail = "pi(g_C) != f_C";
                break;
            }
        }
        fs.push_back(std::move(fb.fn));
    }
    rep.functional_count = static_cast<long long>(fs.size());
    rep.count_ok = rep.functional_count == rep.h_B;
    if (!rep.count_ok && rep.detail.empty()) rep.detail = "descent-chain count differs from h_S(B)";

    IntMat stacked(static_cast<int>(fs.size()), static_cast<int>(cols_b.size()));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < cols_b.size(); ++j)
            stacked.at(static_cast<int>(i), static_cast<int>(j)) = fs[i].coeffs[j].convert_to<long long>();
    rep.rank_fC = exact_rank(stacked);
    rep.independent_ok = rep.rank_fC == static_cast<long long>(fs.size());
    if (!rep.independent_ok && rep.detail.empty()) rep.detail = "f_C family not linearly independent";
    return rep;
}

}  // namespace

RelationMatrix theta_relations(const FlatLattice& L, RankSet s) {
    check_rank_set(L, s);
    RelationMatrix rel;
    rel.degree = s;
    rel.columns = chains_of_flag(L, s);
    rel.mat = theta_matrix(L, s, rel.columns, &rel.rows);
    return rel;
}

int quotient_dim(const FlatLattice& L, RankSet s) {
    check_rank_set(L, s);
    auto cols = chains_of_flag(L, s);
    IntMat mat = theta_matrix(L, s, cols, nullptr);
    return static_cast<int>(cols.size()) - exact_rank(mat);
}

std::vector<Functional> annihilator_basis(const FlatLattice& L, RankSet s) {
    RelationMatrix rel = theta_relations(L, s);
    std::vector<Functional> out;
    for (auto& vec : kernel_basis(rel.mat)) out.push_back({s, std::move(vec)});
    return out;
}

IntMat psi_matrix(const PseudoMatroidLattice& ap, const FlatLattice& bl, RankSet s) {
    check_rank_set(bl, s);
    auto cols_b = chains_of_flag(bl, s);
    auto colidx_b = index_chains(cols_b);
    auto cols_a = chains_of_flag(ap.lattice, s);
    IntMat psi(static_cast<int>(cols_a.size()), static_cast<int>(cols_b.size()));
    for (std::size_t i = 0; i < cols_a.size(); ++i) {
        Chain img;
        for (Subset f : cols_a[i]) img.push_back(ap.b.closure(f));
        auto it = colidx_b.find(img);
        if (it == colidx_b.end()) throw TheoremViolation("psi image is not a B-chain of the degree");
        psi.at(static_cast<int>(i), it->second) = 1;
    }
    for (int j = 0; j < psi.cols; ++j) {
        bool nonzero = false;
        for (int i = 0; i < psi.rows && !nonzero; ++i) nonzero = psi.at(i, j) != 0;
        if (!nonzero) throw TheoremViolation("psi has a zero column; surjectivity by flag failed");
    }
    return psi;
}

Functional dual_functional_fC(const FlatLattice& bl, const Chain& c, RankSet s) {
    check_rank_set(bl, s);
    JHString letters = jh_string(bl, c);
    if (descent_set(letters) != s) throw NotDescentChain("descent set of the chain is not the given degree");
    auto cols = chains_of_flag(bl, s);
    auto colidx = index_chains(cols);
    Chain nu_c = restrict_to_ranks(bl, c, s);
    auto close = [&](Subset g) { return bl.lattice_closure(g); };
    FunctionalBuild fb = build_functional(letters, s, colidx, cols.size(), colidx.at(nu_c), close);
    if (!fb.triangular) throw TheoremViolation("some nu(C_sigma) exceeds nu(C) lexicographically");
    if (!fb.diag_one) throw TheoremViolation("coefficient at nu(C) is not 1");
    if (!annihilates(theta_matrix(bl, s, cols, nullptr), fb.fn))
        throw TheoremViolation("f_C fails the annihilator condition");
    return std::move(fb.fn);
}

Functional dual_functional_gC(const PseudoMatroidLattice& ap, const Chain& c, RankSet s) {
    check_rank_set(ap.lattice, s);
    JHString letters = jh_string_of_full_b_chain(ap.b, c);
    if (descent_set(letters) != s) throw NotDescentChain("descent set of the chain is not the given degree");
    auto cols = chains_of_flag(ap.lattice, s);
    auto colidx = index_chains(cols);
    auto close = [&](Subset g) { return ap.a.closure(g); };
    FunctionalBuild gb = build_functional(letters, s, colidx, cols.size(), -1, close);
    if (!annihilates(theta_matrix(ap.lattice, s, cols, nullptr), gb.fn))
        throw TheoremViolation("g_C fails the A'-annihilator condition");
    return std::move(gb.fn);
}

SurjectivityReport verify_surjectivity(const Matroid& a, const Matroid& b, RankSet s) {
    PairContext ctx = make_pair_context(a, b);
    check_rank_set(ctx.lb, s);
    return run_degree(ctx, s);
}

std::vector<SurjectivityReport> verify_surjectivity_all(const Matroid& a, const Matroid& b) {
    PairContext ctx = make_pair_context(a, b);
    std::vector<SurjectivityReport> out;
    for (RankSet s = 0; s < (RankSet{1} << ctx.lb.proper_rank()); ++s) out.push_back(run_degree(ctx, s));
    return out;
}

DimChainReport verify_injectivity_chain(const Matroid& a, const Matroid& b) {
    if (is_weak_map(a, b).kind != MapKind::rank_preserving_weak)
        throw NotRankPreservingWeak("pair is not a rank-preserving weak map");
    FlagVector h_a = flag_h_vector(flat_lattice(a));
    FlagVector h_b = flag_h_vector(flat_lattice(b));
    PseudoMatroidLattice ap = pseudo_matroid(a, b);
    DimChainReport rep;
    for (RankSet s = 0; s < (RankSet{1} << h_b.r); ++s) {
        DimChainEntry e;
        e.degree = s;
        e.h_A = h_a.at(s);
        e.dim_Aprime = quotient_dim(ap.lattice, s);
        e.h_B = h_b.at(s);
        e.ok = e.h_A >= e.dim_Aprime && e.dim_Aprime >= e.h_B;
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace flagmono
