#include <catch2/catch_amalgamated.hpp>

#include "bq/extquot.hpp"
#include "bq/oracles.hpp"

using namespace bq;

namespace {
std::vector<std::vector<int>> natural_action(const FiniteGroup& g, int npoints) {
    const auto* perms = g.permutations();
    REQUIRE(perms != nullptr);
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(npoints));
    for (int e = 0; e < g.order(); ++e)
        for (int x = 0; x < npoints; ++x) act[e][x] = (*perms)[e][x];
    return act;
}
std::vector<std::vector<int>> trivial_action(const FiniteGroup& g, int npoints) {
    std::vector<std::vector<int>> act(g.order(), std::vector<int>(npoints));
    for (int e = 0; e < g.order(); ++e)
        for (int x = 0; x < npoints; ++x) act[e][x] = x;
    return act;
}
Cocycle klein_nontrivial(const FiniteGroup&) {
    std::vector<std::vector<int>> exps;
    for (int i = 0; i < 4; ++i) exps.push_back({i / 2, i % 2});
    std::vector<std::vector<Angle>> form(2, std::vector<Angle>(2));
    form[0][1] = Angle(1, 2);
    return cocycle_from_bilinear({2, 2}, form, exps);
}
} // namespace

TEST_CASE("extended quotient: trivial group, point mod S_3, free swap") {
    auto t = FiniteGroup::trivial();
    GammaSet a(t, trivial_action(t, 3), Cocycle::trivial(t));
    REQUIRE(extended_quotient(a).size() == 3);

    auto s3 = FiniteGroup::symmetric(3);
    GammaSet b(s3, trivial_action(s3, 1), Cocycle::trivial(s3));
    auto eq = extended_quotient(b);
    REQUIRE(eq.size() == 3);
    std::vector<long long> dims;
    for (auto& p : eq) dims.push_back(p.rho_dim);
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<long long>{1, 1, 2});

    auto z2 = FiniteGroup::cyclic(2);
    GammaSet c(z2, {{0, 1}, {1, 0}}, Cocycle::trivial(z2));
    REQUIRE(extended_quotient(c).size() == 1);
}

TEST_CASE("crossed product spectrum and the squared-dimension identity") {
    auto s3 = FiniteGroup::symmetric(3);
    GammaSet pt(s3, trivial_action(s3, 1), Cocycle::trivial(s3));
    REQUIRE(crossed_product_spectrum(pt) == std::vector<long long>{1, 1, 2});

    GammaSet nat(s3, natural_action(s3, 3), Cocycle::trivial(s3));
    auto dims = crossed_product_spectrum(nat);
    REQUIRE(dims == std::vector<long long>{3, 3});
    long long sq = 0;
    for (auto d : dims) sq += d * d;
    REQUIRE(sq == 18);

    auto z2 = FiniteGroup::cyclic(2);
    GammaSet fr(z2, {{0, 1}, {1, 0}}, Cocycle::trivial(z2));
    REQUIRE(crossed_product_spectrum(fr) == std::vector<long long>{2});
}

TEST_CASE("isotropy groups of coordinate swaps") {
    auto s2 = FiniteGroup::symmetric(2);
    GammaSet eq(s2, {{0, 1}, {0, 1}}, Cocycle::trivial(s2)); // both points fixed
    REQUIRE(eq.stabilizer(0).group.order() == 2);
    GammaSet ne(s2, {{0, 1}, {1, 0}}, Cocycle::trivial(s2));
    REQUIRE(ne.stabilizer(0).group.order() == 1);

    // S_3 fixing point 2 of {0,1,2}: the stabilizer of 2 is S_2 on {0,1}
    auto s3 = FiniteGroup::symmetric(3);
    GammaSet st(s3, natural_action(s3, 3), Cocycle::trivial(s3));
    REQUIRE(st.stabilizer(2).group.order() == 2);
}

TEST_CASE("invariant spectrum via Frobenius reciprocity") {
    auto s3 = FiniteGroup::symmetric(3);
    GammaSet pt(s3, trivial_action(s3, 1), Cocycle::trivial(s3));

    auto reg = ProjectiveRep::regular(s3, Cocycle::trivial(s3));
    REQUIRE(invariant_spectrum(pt, reg).size() == 3);

    // trivial one-dimensional representation: only the trivial module survives
    ProjectiveRep triv;
    triv.dim = 1;
    triv.cocycle = Cocycle::trivial(s3);
    triv.character.assign(6, Cyc::one());
    auto kept = invariant_spectrum(pt, triv);
    REQUIRE(kept.size() == 1);
    REQUIRE(kept[0].rho_dim == 1);
}

TEST_CASE("invariant spectrum retains the projective module with its class") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto kappa = klein_nontrivial(v4);
    // 2-dim projective representation: Pauli matrices give mu with cocycle kappa
    Cyc i = Cyc::zeta(1, 4);
    CycMatrix X, Z;
    X.n = 2;
    X.a = {{Cyc(), Cyc::one()}, {Cyc::one(), Cyc()}};
    Z.n = 2;
    Z.a = {{Cyc::one(), Cyc()}, {Cyc(), Cyc() - Cyc::one()}};
    (void)i;
    // elements indexed a*2+b: (a,b) -> X^a Z^b needs kappa((a,b),(c,d)) = b*c/2
    std::vector<std::vector<int>> exps;
    for (int j = 0; j < 4; ++j) exps.push_back({j / 2, j % 2});
    std::vector<std::vector<Angle>> form(2, std::vector<Angle>(2));
    form[1][0] = Angle(1, 2);
    auto kappa_xz = cocycle_from_bilinear({2, 2}, form, exps);
    auto mu = ProjectiveRep::from_generators(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)), kappa_xz,
        {{2, X}, {1, Z}});
    GammaSet pt(v4, trivial_action(v4, 1), kappa);
    // kappa and kappa_xz are cohomologous, so the adjusted restriction applies
    auto kept = invariant_spectrum(pt, mu);
    REQUIRE(kept.size() == 1);
    REQUIRE(kept[0].rho_dim == 2);
}

TEST_CASE("iterated quotient over a semidirect decomposition") {
    // S_3 = Z/3 x| Z/2 acting on a point
    auto s3 = FiniteGroup::symmetric(3);
    GammaSet pt(s3, trivial_action(s3, 1), Cocycle::trivial(s3));
    // find the cyclic normal subgroup and a complement
    std::vector<int> three, two{s3.identity()};
    for (int x = 0; x < 6; ++x) {
        if (s3.element_order(x) == 3 || x == s3.identity()) three.push_back(x);
        if (s3.element_order(x) == 2 && two.size() == 1) two.push_back(x);
    }
    std::sort(three.begin(), three.end());
    three.erase(std::unique(three.begin(), three.end()), three.end());
    auto cert = iterate_semidirect(pt, three, two);
    REQUIRE(cert.counts_agree());
    REQUIRE(cert.direct_count == 3);
    REQUIRE(cert.matching.size() == 3);

    // trivial outer factor: identity matching
    std::vector<int> all(6), only_id{s3.identity()};
    std::iota(all.begin(), all.end(), 0);
    auto cert2 = iterate_semidirect(pt, all, only_id);
    REQUIRE(cert2.counts_agree());
    REQUIRE(cert2.direct_count == 3);

    // free action: both sides reduce to the plain quotient
    auto z2 = FiniteGroup::cyclic(2);
    GammaSet fr(z2, {{0, 1}, {1, 0}}, Cocycle::trivial(z2));
    auto cert3 = iterate_semidirect(fr, {0}, {0, 1});
    REQUIRE(cert3.counts_agree());
    REQUIRE(cert3.direct_count == 1);
}

TEST_CASE("iterated quotient rejects a non-normal first factor") {
    auto s3 = FiniteGroup::symmetric(3);
    GammaSet pt(s3, trivial_action(s3, 1), Cocycle::trivial(s3));
    std::vector<int> two{s3.identity()};
    std::vector<int> three{s3.identity()};
    for (int x = 0; x < 6; ++x) {
        if (s3.element_order(x) == 2 && two.size() == 1) two.push_back(x);
        if (s3.element_order(x) == 3) three.push_back(x);
    }
    std::sort(three.begin(), three.end());
    REQUIRE_THROWS_AS(iterate_semidirect(pt, two, three), std::invalid_argument);
}

TEST_CASE("quotient counts are representative independent") {
    auto s3 = FiniteGroup::symmetric(3);
    GammaSet nat(s3, natural_action(s3, 3), Cocycle::trivial(s3));
    // fibers at the two non-canonical representatives transport to the fiber
    // at the canonical one with the same dimension multiset
    auto f0 = nat.fiber_at(0);
    for (int other = 1; other < 3; ++other) {
        auto f = nat.fiber_at(other);
        REQUIRE(f.size() == f0.size());
        int g = nat.transporter(other, 0);
        for (const auto& ti : f) {
            auto moved = nat.transport(g, other, ti.character);
            REQUIRE(find_twisted_irrep(f0, moved) >= 0);
        }
    }
}

TEST_CASE("raw-mode validation accepts consistent data and rejects bad phases") {
    auto z2 = FiniteGroup::cyclic(2);
    // two fixed points, trivial cocycles, trivial connectors: fine
    GammaSet::RawData raw;
    raw.point_cocycles = {Cocycle(2), Cocycle(2)};
    raw.connector = {
        {{Angle(), Angle()}, {Angle(), Angle()}},
        {{Angle(), Angle()}, {Angle(), Angle()}},
    };
    GammaSet ok(z2, {{0, 1}, {0, 1}}, raw);
    REQUIRE(extended_quotient(ok).size() == 4);

    // a connector that is not an algebra homomorphism must be rejected
    auto bad = raw;
    bad.connector[1][0][1] = Angle(1, 3);
    REQUIRE_THROWS_WITH((GammaSet(z2, {{0, 1}, {0, 1}}, bad)),
                        Catch::Matchers::ContainsSubstring("algebra homomorphism") ||
                            Catch::Matchers::ContainsSubstring("inner"));
}

TEST_CASE("extended quotient against the block-decomposition oracle") {
    struct Case {
        FiniteGroup g;
        std::vector<std::vector<int>> act;
        Cocycle c;
        int np;
    };
    std::vector<Case> cases;
    auto s3 = FiniteGroup::symmetric(3);
    cases.push_back({s3, natural_action(s3, 3), Cocycle::trivial(s3), 3});
    auto s4 = FiniteGroup::symmetric(4);
    cases.push_back({s4, natural_action(s4, 4), Cocycle::trivial(s4), 4});
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    cases.push_back({v4, trivial_action(v4, 2), klein_nontrivial(v4), 2});
    for (auto& cs : cases) {
        GammaSet xs(cs.g, cs.act, cs.c);
        auto primary = crossed_product_spectrum(xs);
        auto oracle = oracle_crossed_block_dims(cs.g, cs.act, cs.c, cs.np);
        REQUIRE(primary == oracle);
    }
}
