#include "flagmono/maps.hpp"

#include <set>

#include "doctest.h"
#include "flagmono/catalog.hpp"
#include "flagmono/errors.hpp"
#include "oracles.hpp"

using namespace flagmono;

namespace {

Subset mk(std::initializer_list<int> es) {
    Subset s = 0;
    for (int e : es) s |= element_bit(e);
    return s;
}

Matroid parallel34() {  // U(3,4) with 3 and 4 made parallel
    return Matroid::from_bases(4, {mk({1, 2, 3}), mk({1, 2, 4})});
}

std::set<Subset> flat_set(const Matroid& m) {
    std::set<Subset> out;
    FlatLattice L = flat_lattice(m);
    for (int k = 0; k <= L.top_rank(); ++k)
        for (Subset f : L.flats_of_rank(k)) out.insert(f);
    return out;
}

}  // namespace

TEST_CASE("weak map detection") {
    Matroid u23 = Matroid::uniform(2, 3);
    Matroid par = Matroid::from_bases(3, {mk({1, 2}), mk({1, 3})});

    MapWitness w = is_weak_map(u23, par);
    CHECK(w.kind == MapKind::rank_preserving_weak);
    CHECK(!w.violation);

    CHECK(is_weak_map(par, par).holds());

    MapWitness bad = is_weak_map(par, u23);
    CHECK(bad.kind == MapKind::none);
    CHECK(bad.violation == mk({2, 3}));  // dependent in the parallel matroid

    CHECK(is_weak_map(Matroid::uniform(3, 4), Matroid::uniform(2, 4)).kind == MapKind::weak);
    CHECK_THROWS_AS(is_weak_map(u23, Matroid::uniform(2, 4)), GroundSetMismatch);
}

TEST_CASE("strong map detection") {
    Matroid u34 = Matroid::uniform(3, 4);
    CHECK(is_strong_map(u34, u34.truncation(2)).kind == MapKind::strong);
    CHECK(is_strong_map(u34, u34).holds());

    Matroid u23 = Matroid::uniform(2, 3);
    Matroid par = Matroid::from_bases(3, {mk({1, 2}), mk({1, 3})});
    MapWitness w = is_strong_map(u23, par);
    CHECK(w.kind == MapKind::none);
    CHECK(w.violation == mk({2, 3}));  // flat of B, not closed in A
}

TEST_CASE("strong implies weak on every small pair") {
    std::vector<Matroid> ms;
    for (int r = 0; r <= 4; ++r)
        for (Matroid& m : enumerate_basis_families(4, r)) ms.push_back(std::move(m));
    for (const Matroid& a : ms)
        for (const Matroid& b : ms)
            if (is_strong_map(a, b).holds()) CHECK(is_weak_map(a, b).holds());
}

TEST_CASE("weak-map decomposition through truncation") {
    Matroid u34 = Matroid::uniform(3, 4);
    Matroid u24 = Matroid::uniform(2, 4);
    CHECK(decompose_weak_map(u34, u24) == u24);

    Matroid par = parallel34();
    CHECK(decompose_weak_map(u34, par) == u34);  // equal rank: strong leg is the identity

    Matroid b = Matroid::from_bases(4, {mk({1, 2}), mk({1, 3})});
    Matroid t = decompose_weak_map(u34, b);
    CHECK(t == u24);
    CHECK(is_weak_map(t, b).kind == MapKind::rank_preserving_weak);

    CHECK_THROWS_AS(decompose_weak_map(b, u34), NotAWeakMap);
}

TEST_CASE("rank comparison under weak maps, exhaustively") {
    // rk_A(G) >= rk_B(G) for all subsets, and phi_B does not raise flat ranks
    std::vector<Matroid> ms;
    for (int r = 0; r <= 4; ++r)
        for (Matroid& m : enumerate_basis_families(4, r)) ms.push_back(std::move(m));
    for (const Matroid& a : ms) {
        for (const Matroid& b : ms) {
            if (!is_weak_map(a, b).holds()) continue;
            for (Subset g = 0; g < (Subset{1} << 4); ++g) CHECK(a.rank_of(g) >= b.rank_of(g));
            for (Subset f : flat_set(a)) CHECK(b.rank_of(b.closure(f)) <= a.rank_of(f));
        }
    }

    // a larger single pair, over every subset of an 8-element ground set
    Matroid big_a = Matroid::uniform(4, 8);
    Matroid big_b = Matroid::near_pencil(8);
    REQUIRE(is_weak_map(big_a, big_b).kind == MapKind::weak);
    for (Subset g = 0; g < (Subset{1} << 8); ++g) CHECK(big_a.rank_of(g) >= big_b.rank_of(g));
}

TEST_CASE("phi on chains") {
    Matroid b = parallel34();
    CHECK(phi_chain(b, {mk({3}), mk({1, 3})}) == Chain{mk({3, 4}), mk({1, 3, 4})});
    CHECK(phi_chain(b, {}) == Chain{});
    CHECK(phi_chain(b, {mk({3}), mk({3, 4})}) == Chain{mk({3, 4})});  // duplicates collapse

    // images that hit 0_B or E are dropped
    Matroid loopy = Matroid::from_bases(3, {mk({1, 2})});  // 3 is a loop
    CHECK(phi_chain(loopy, {mk({3})}) == Chain{});
}

TEST_CASE("pseudo-matroid lattice") {
    Matroid a = Matroid::uniform(3, 4);
    Matroid b = parallel34();
    PseudoMatroidLattice ap = pseudo_matroid(a, b);
    CHECK(ap.lattice.flats_of_rank(1).size() == 4);
    CHECK(ap.lattice.flats_of_rank(2).size() == 5);  // {3,4} dropped
    CHECK(!ap.lattice.is_flat(mk({3, 4})));

    // identity map keeps the whole lattice
    PseudoMatroidLattice same = pseudo_matroid(a, a);
    CHECK(same.lattice.flat_count() == flat_lattice(a).flat_count());

    // all singletons keep rank 1 here
    Matroid u23 = Matroid::uniform(2, 3);
    Matroid par = Matroid::from_bases(3, {mk({1, 2}), mk({1, 3})});
    PseudoMatroidLattice ap2 = pseudo_matroid(u23, par);
    CHECK(ap2.lattice.flat_count() == flat_lattice(u23).flat_count());

    CHECK_THROWS_AS(pseudo_matroid(Matroid::uniform(3, 4), Matroid::uniform(2, 4)),
                    NotRankPreservingWeak);
    CHECK_THROWS_AS(pseudo_matroid(par, u23), NotRankPreservingWeak);
}

TEST_CASE("flag surjectivity construction") {
    Matroid a = Matroid::uniform(3, 4);
    Matroid b = parallel34();
    FlagSurjectivityReport rep = check_flag_surjectivity(a, b);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());

    // the witness for [{3,4}] is a rank-1 A-flat mapping onto it
    bool found = false;
    for (const auto& [c, d] : rep.witness_map)
        if (c == Chain{mk({3, 4})}) {
            found = true;
            CHECK(d.size() == 1);
            CHECK(b.closure(d[0]) == mk({3, 4}));
        }
    CHECK(found);

    // identity map: the constructed preimage is the chain itself
    FlagSurjectivityReport self = check_flag_surjectivity(a, a);
    CHECK(self.ok);
    for (const auto& [c, d] : self.witness_map) CHECK(c == d);

    // total chain count = sum of f_S
    FlagVector f = flag_f_vector(flat_lattice(b));
    long long total = 0;
    for (long long v : f.v) total += v;
    CHECK(static_cast<long long>(rep.chains_checked) == total);
}

TEST_CASE("flag surjectivity across all small rank-preserving pairs") {
    std::vector<Matroid> ms;
    for (int r = 0; r <= 4; ++r)
        for (Matroid& m : enumerate_basis_families(4, r)) ms.push_back(std::move(m));
    for (const Matroid& a : ms)
        for (const Matroid& b : ms)
            if (is_weak_map(a, b).kind == MapKind::rank_preserving_weak)
                CHECK(check_flag_surjectivity(a, b).ok);
}
