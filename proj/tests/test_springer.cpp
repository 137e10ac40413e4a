#include <catch2/catch_amalgamated.hpp>

#include "bq/springer.hpp"
#include "bq/twisted.hpp"

using namespace bq;

TEST_CASE("convention anchors: regular class is trivial, 1^n is sign") {
    for (int n = 2; n <= 6; ++n) {
        // chi^{(n)} is identically 1, chi^{(1^n)} is the sign character
        auto g = FiniteGroup::symmetric(n);
        auto t = character_table(g);
        Partition reg{std::vector<int>{n}};
        std::vector<int> ones(n, 1);
        Partition colm{ones};
        int row_triv = -1, row_sign = -1;
        for (int r = 0; r < t.num_rows(); ++r) {
            if (t.partition_labels[r][0] == springer_irrep_of_class(reg)) row_triv = r;
            if (t.partition_labels[r][0] == springer_irrep_of_class(colm)) row_sign = r;
        }
        REQUIRE(row_triv >= 0);
        REQUIRE(row_sign >= 0);
        for (int c = 0; c < t.num_classes(); ++c) {
            REQUIRE(t.rows[row_triv][c] == Cyc::one());
            Cyc v = t.rows[row_sign][c];
            REQUIRE((v == Cyc::one() || v == Cyc() - Cyc::one()));
        }
    }
}

TEST_CASE("springer map is a bijection for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        auto parts = all_partitions(n);
        std::vector<Partition> images;
        for (const auto& p : parts) {
            auto irr = springer_irrep_of_class(p);
            REQUIRE(springer_class_of_irrep(irr) == p);
            images.push_back(irr);
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        REQUIRE(images.size() == parts.size());
    }
}

TEST_CASE("a-value anchors and the two formulas") {
    REQUIRE(a_value(Partition{std::vector<int>(5, 1)}) == 10);
    REQUIRE(a_value(Partition{5}) == 0);
    REQUIRE(a_value(Partition{2, 1}) == 1);
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : all_partitions(n)) REQUIRE(a_value(p) == a_value_alt(p));
}

TEST_CASE("a-value is strictly decreasing along dominance steps") {
    for (int n = 2; n <= 8; ++n) {
        auto parts = all_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (a == b) continue;
                if (dominated_by(a, b)) REQUIRE(a_value(a) > a_value(b));
            }
    }
}

TEST_CASE("distinguished Levi shapes") {
    UnipotentClass reg{{Partition{4}}};
    auto s1 = distinguished_levi(reg);
    REQUIRE(s1.factors == std::vector<std::vector<std::pair<int, int>>>{{{4, 1}}});

    UnipotentClass ones{{Partition{1, 1, 1}}};
    auto s2 = distinguished_levi(ones);
    REQUIRE(s2.factors == std::vector<std::vector<std::pair<int, int>>>{{{1, 3}}});

    UnipotentClass mixed{{Partition{3, 1}}};
    auto s3 = distinguished_levi(mixed);
    REQUIRE(s3.factors == std::vector<std::vector<std::pair<int, int>>>{{{3, 1}, {1, 1}}});

    // injectivity on all classes of GL_6 and inverse round trip
    std::vector<LeviShape> seen;
    for (const auto& p : all_partitions(6)) {
        UnipotentClass u{{p}};
        auto s = distinguished_levi(u);
        REQUIRE(levi_regular_class(s) == u);
        REQUIRE(std::find(seen.begin(), seen.end(), s) == seen.end());
        seen.push_back(s);
        // regular-in-Levi: the class is regular in each factor, so the fiber
        // dimension inside the Levi vanishes
        long long inside = 0;
        for (auto [b, c] : s.factors[0]) inside += c * a_value(Partition{b});
        REQUIRE(inside == 0);
    }
}

TEST_CASE("restriction with trivial factor action recovers the class") {
    auto s3 = FiniteGroup::symmetric(3);
    auto t = character_table(s3);
    for (int r = 0; r < t.num_rows(); ++r) {
        std::vector<Cyc> rho(s3.order());
        for (int e = 0; e < s3.order(); ++e) rho[e] = t.value(r, e);
        auto u = restrict_and_identify(s3, rho, {{0, 1, 2}});
        REQUIRE(u.blocks.size() == 1);
        REQUIRE(u.blocks[0] == springer_class_of_irrep(t.partition_labels[r][0]));
    }
}

namespace {
// (S_2 x S_2) x| Z/2: permutations of {0,1}x{2,3} plus the block swap
FiniteGroup wreath22() {
    std::vector<std::vector<int>> gens = {
        {1, 0, 2, 3}, // swap inside first factor
        {0, 1, 3, 2}, // swap inside second factor
        {2, 3, 0, 1}, // swap the factors
    };
    return FiniteGroup::from_permutations(gens);
}
} // namespace

TEST_CASE("restriction of an induced character gives one conjugation orbit") {
    auto w = wreath22();
    REQUIRE(w.order() == 8);
    auto t = character_table(w);
    // the 2-dim irrep is induced from chi^{(2)} x chi^{(1,1)}; its restriction
    // decomposes into the two swapped tuples and the canonical class is the
    // lexicographically least
    int two_dim = -1;
    for (int r = 0; r < t.num_rows(); ++r)
        if (t.dims[r] == 2) two_dim = r;
    REQUIRE(two_dim >= 0);
    std::vector<Cyc> rho(w.order());
    for (int e = 0; e < w.order(); ++e) rho[e] = t.value(two_dim, e);
    auto u = restrict_and_identify(w, rho, {{0, 1}, {2, 3}});
    REQUIRE(u.blocks.size() == 2);
    REQUIRE(((u.blocks[0] == Partition{2} && u.blocks[1] == Partition{1, 1}) ||
             (u.blocks[0] == Partition{1, 1} && u.blocks[1] == Partition{2})));

    // an extension of triv x triv restricts irreducibly to the class ((2),(2))
    int ext_triv = -1;
    for (int r = 0; r < t.num_rows(); ++r) {
        if (t.dims[r] != 1) continue;
        bool on_wr = true;
        for (int e = 0; e < w.order(); ++e) {
            // restriction to the inner S_2 x S_2 must be trivial
            const auto& perm = (*w.permutations())[e];
            bool inner = perm[0] <= 1 && perm[2] >= 2;
            if (inner && !(t.value(r, e) == Cyc::one())) on_wr = false;
        }
        if (on_wr) {
            ext_triv = r;
            break;
        }
    }
    REQUIRE(ext_triv >= 0);
    std::vector<Cyc> rho2(w.order());
    for (int e = 0; e < w.order(); ++e) rho2[e] = t.value(ext_triv, e);
    auto u2 = restrict_and_identify(w, rho2, {{0, 1}, {2, 3}});
    REQUIRE(u2.blocks == std::vector<Partition>{Partition{2}, Partition{2}});
}

TEST_CASE("non-conjugate constituents are rejected") {
    // reducible character chi^{(2)} x chi^{(2)} + chi^{(1,1)} x chi^{(1,1)} on
    // S_2 x S_2 (no swap in the group): constituents are not conjugate
    auto g = FiniteGroup::symmetric_product({2, 2});
    auto t = character_table(g);
    std::vector<Cyc> rho(g.order());
    for (int r = 0; r < t.num_rows(); ++r) {
        bool both_triv = t.partition_labels[r][0] == Partition{2} &&
                         t.partition_labels[r][1] == Partition{2};
        bool both_sign = t.partition_labels[r][0] == Partition{1, 1} &&
                         t.partition_labels[r][1] == Partition{1, 1};
        if (both_triv || both_sign)
            for (int e = 0; e < g.order(); ++e) rho[e] += t.value(r, e);
    }
    REQUIRE_THROWS_WITH(restrict_and_identify(g, rho, {{0, 1}, {2, 3}}),
                        Catch::Matchers::ContainsSubstring("not conjugate"));
}
