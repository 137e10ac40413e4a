#include <catch2/catch_amalgamated.hpp>

#include "bq/charactertable.hpp"
#include "bq/cocycle.hpp"
#include "bq/group.hpp"
#include "bq/twisted.hpp"

using namespace bq;

TEST_CASE("conjugacy classes of small groups") {
    auto s3 = FiniteGroup::symmetric(3);
    REQUIRE(s3.order() == 6);
    auto classes = s3.conjugacy_classes();
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<std::size_t>{1, 2, 3});

    auto t = FiniteGroup::trivial();
    REQUIRE(t.conjugacy_classes().size() == 1);

    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    REQUIRE(v4.conjugacy_classes().size() == 4);
    for (const auto& c : v4.conjugacy_classes()) REQUIRE(c.size() == 1);
}

TEST_CASE("character table of S_3") {
    auto t = character_table(FiniteGroup::symmetric(3));
    std::vector<long long> dims = t.dims;
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<long long>{1, 1, 2});
}

TEST_CASE("character table of Z/4 has values in mu_4") {
    auto z4 = FiniteGroup::cyclic(4);
    auto t = character_table(z4);
    REQUIRE(t.num_rows() == 4);
    for (int r = 0; r < 4; ++r) {
        REQUIRE(t.dims[r] == 1);
        for (int c = 0; c < 4; ++c) {
            Cyc v = t.rows[r][c];
            REQUIRE(v * v * v * v == Cyc::one());
        }
    }
}

TEST_CASE("character table of S_2 x S_3 via tensor construction") {
    auto g = FiniteGroup::symmetric_product({2, 3});
    auto t = character_table(g);
    REQUIRE(t.num_rows() == 6);
    std::vector<long long> dims = t.dims;
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<long long>{1, 1, 1, 1, 2, 2});
    // cross-check every value against the class-matrix method
    auto d = character_table_dixon(g);
    REQUIRE(d.num_rows() == 6);
    // compare as multisets of rows (class order is identical)
    auto row_strings = [](const CharacterTable& ct) {
        std::vector<std::string> out;
        for (const auto& row : ct.rows) {
            std::string s;
            for (const auto& v : row) s += v.str() + ";";
            out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    REQUIRE(row_strings(t) == row_strings(d));
}

TEST_CASE("Murnaghan-Nakayama agrees with the class-matrix method on S_n") {
    for (int n = 2; n <= 5; ++n) {
        auto g = FiniteGroup::symmetric(n);
        auto mn = character_table(g);
        auto dx = character_table_dixon(g);
        auto row_strings = [](const CharacterTable& ct) {
            std::vector<std::string> out;
            for (const auto& row : ct.rows) {
                std::string s;
                for (const auto& v : row) s += v.str() + ";";
                out.push_back(s);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        REQUIRE(row_strings(mn) == row_strings(dx));
    }
}

TEST_CASE("twisted modules: trivial cocycle reduces to ordinary characters") {
    auto z2 = FiniteGroup::cyclic(2);
    auto irreps = twisted_irreps(z2, Cocycle::trivial(z2));
    REQUIRE(irreps.size() == 2);
    REQUIRE(irreps[0].dim == 1);
    REQUIRE(irreps[1].dim == 1);

    auto s3 = FiniteGroup::symmetric(3);
    auto tw = twisted_dims(s3, Cocycle::trivial(s3));
    REQUIRE(tw == std::vector<long long>{1, 1, 2});
}

namespace {
// The nontrivial class on (Z/2)^2: bilinear pairing kappa((a,b),(c,d)) = bd/2.
Cocycle klein_nontrivial(const FiniteGroup& v4) {
    // elements of cyclic(2) x cyclic(2) are indexed a*2+b
    std::vector<std::vector<int>> exps;
    for (int i = 0; i < 4; ++i) exps.push_back({i / 2, i % 2});
    std::vector<std::vector<Angle>> form(2, std::vector<Angle>(2));
    form[0][1] = Angle(1, 2);
    auto c = cocycle_from_bilinear({2, 2}, form, exps);
    validate_cocycle(v4, c);
    return c;
}
} // namespace

TEST_CASE("twisted modules of (Z/2)^2 with the nontrivial class") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto kappa = klein_nontrivial(v4);
    auto dims = twisted_dims(v4, kappa);
    REQUIRE(dims == std::vector<long long>{2});
}

TEST_CASE("cohomologous cocycles give the same twisted dimensions") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto kappa = klein_nontrivial(v4);
    // shift by the coboundary of an arbitrary cochain
    std::vector<Angle> c{Angle(), Angle(1, 4), Angle(1, 2), Angle(3, 4)};
    c[v4.identity()] = Angle();
    auto shifted = Cocycle::coboundary(v4, c);
    Cocycle kappa2(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) kappa2.set(a, b, kappa(a, b) + shifted(a, b));
    validate_cocycle(v4, kappa2);
    REQUIRE(twisted_dims(v4, kappa2) == twisted_dims(v4, kappa));

    auto witness = cocycle_cohomologous(v4, kappa2, kappa);
    REQUIRE(witness.has_value());
    auto db = Cocycle::coboundary(v4, *witness);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) REQUIRE(kappa2(a, b) - kappa(a, b) == db(a, b));
}

TEST_CASE("cohomology search: identity and negative cases") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto kappa = klein_nontrivial(v4);
    auto self = cocycle_cohomologous(v4, kappa, kappa);
    REQUIRE(self.has_value());
    for (const auto& a : *self) REQUIRE(a == (*self)[v4.identity()]);

    auto none = cocycle_cohomologous(v4, kappa, Cocycle::trivial(v4));
    REQUIRE_FALSE(none.has_value());
}

TEST_CASE("coboundary recovery up to a character") {
    auto z4 = FiniteGroup::cyclic(4);
    std::vector<Angle> c{Angle(), Angle(1, 8), Angle(1, 4), Angle(1, 8)};
    auto db = Cocycle::coboundary(z4, c);
    validate_cocycle(z4, db);
    auto rec = cocycle_cohomologous(z4, db, Cocycle::trivial(z4));
    REQUIRE(rec.has_value());
    // the recovered cochain differs from c by a character of Z/4
    std::vector<Angle> diff(4);
    for (int i = 0; i < 4; ++i) diff[i] = (*rec)[i] - c[i];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            REQUIRE(diff[z4.mul(a, b)] == diff[a] + diff[b]);
}

TEST_CASE("cyclic groups carry no projective twisting") {
    auto z4 = FiniteGroup::cyclic(4);
    std::vector<Angle> c{Angle(), Angle(1, 4), Angle(1, 2), Angle(1, 4)};
    auto db = Cocycle::coboundary(z4, c);
    REQUIRE(twisted_dims(z4, db) == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("projective representation validation and the regular module") {
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto kappa = klein_nontrivial(v4);
    auto reg = ProjectiveRep::regular(v4, kappa);
    REQUIRE(reg.dim == 4);
    REQUIRE(reg.character[v4.identity()] == Cyc(Rat(4)));
    // regular character decomposes with multiplicity dim against each irrep
    auto irreps = twisted_irreps(v4, kappa);
    auto mult = decompose_character(v4, irreps, reg.character);
    REQUIRE(mult.size() == 1);
    REQUIRE(mult[0] == 2);
}
