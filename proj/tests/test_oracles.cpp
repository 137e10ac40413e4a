#include <catch2/catch_amalgamated.hpp>

#include "bq/oracles.hpp"
#include "bq/twisted.hpp"

using namespace bq;

namespace {
std::vector<std::vector<int>> natural_action(const FiniteGroup& g, int npoints) {
    // permutation groups act on their points
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
} // namespace

TEST_CASE("oracle: point mod S_3 gives the group algebra blocks") {
    auto s3 = FiniteGroup::symmetric(3);
    auto dims = oracle_crossed_block_dims(s3, trivial_action(s3, 1), Cocycle::trivial(s3), 1);
    REQUIRE(dims == std::vector<long long>{1, 1, 2});
}

TEST_CASE("oracle: natural S_3 action on three points") {
    auto s3 = FiniteGroup::symmetric(3);
    auto dims = oracle_crossed_block_dims(s3, natural_action(s3, 3), Cocycle::trivial(s3), 3);
    REQUIRE(dims == std::vector<long long>{3, 3});
    long long sq = 0;
    for (auto d : dims) sq += d * d;
    REQUIRE(sq == 3 * 6);
}

TEST_CASE("oracle: free Z/2 action on two points is a matrix algebra") {
    auto z2 = FiniteGroup::cyclic(2);
    std::vector<std::vector<int>> act{{0, 1}, {1, 0}};
    auto dims = oracle_crossed_block_dims(z2, act, Cocycle::trivial(z2), 2);
    REQUIRE(dims == std::vector<long long>{2});
}

TEST_CASE("oracle: twisted dims of (Z/2)^2 nontrivial class") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    std::vector<std::vector<int>> exps;
    for (int i = 0; i < 4; ++i) exps.push_back({i / 2, i % 2});
    std::vector<std::vector<Angle>> form(2, std::vector<Angle>(2));
    form[0][1] = Angle(1, 2);
    auto kappa = cocycle_from_bilinear({2, 2}, form, exps);
    REQUIRE(oracle_twisted_dims(v4, kappa) == std::vector<long long>{2});
    REQUIRE(oracle_twisted_dims(v4, Cocycle::trivial(v4)) == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("oracle: cyclic groups are untwistable") {
    auto z4 = FiniteGroup::cyclic(4);
    std::vector<Angle> c{Angle(), Angle(1, 4), Angle(1, 2), Angle(1, 4)};
    auto db = Cocycle::coboundary(z4, c);
    REQUIRE(oracle_twisted_dims(z4, db) == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("oracle agrees with the Clifford-theoretic twisted dimensions") {
    auto s3 = FiniteGroup::symmetric(3);
    REQUIRE(oracle_twisted_dims(s3, Cocycle::trivial(s3)) == twisted_dims(s3, Cocycle::trivial(s3)));

    auto z2z4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
    std::vector<std::vector<int>> exps;
    for (int i = 0; i < 8; ++i) exps.push_back({i / 4, i % 4});
    std::vector<std::vector<Angle>> form(2, std::vector<Angle>(2));
    form[0][1] = Angle(1, 2);
    auto kappa = cocycle_from_bilinear({2, 4}, form, exps);
    validate_cocycle(z2z4, kappa);
    REQUIRE(oracle_twisted_dims(z2z4, kappa) == twisted_dims(z2z4, kappa));
}

TEST_CASE("oracle: larger symmetric action within the size bound") {
    auto s5 = FiniteGroup::symmetric(5);
    auto dims = oracle_crossed_block_dims(s5, natural_action(s5, 5), Cocycle::trivial(s5), 5);
    long long sq = 0;
    for (auto d : dims) sq += d * d;
    REQUIRE(sq == 5 * 120);
    // one orbit with stabilizer S_4: blocks are 5 * dim(irrep of S_4)
    REQUIRE(dims == std::vector<long long>{5, 5, 10, 15, 15});
}
