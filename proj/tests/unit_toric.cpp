#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "semicone/semicone.hpp"
#include "test_util.hpp"

using namespace semicone;
using testutil::bin;
using testutil::ex;
using testutil::numerical;
using testutil::planar;
using testutil::pt;
using testutil::same_binomials_up_to_sign;

static const TermOrder kDrl{OrderKind::DegRevLex, 0};

TEST_CASE("defining ideals of the small fixtures") {
    CHECK(toric_ideal(numerical({2, 3})) ==
          std::vector<Binomial>{bin({3, 0}, {0, 2})});
    CHECK(toric_ideal(numerical({4, 6, 9})) ==
          std::vector<Binomial>{bin({3, 0, 0}, {0, 2, 0}),
                                bin({0, 3, 0}, {0, 0, 2})});
    CHECK(toric_ideal(numerical({5, 6, 9})) ==
          std::vector<Binomial>{bin({3, 0, 0}, {0, 1, 1}),
                                bin({0, 3, 0}, {0, 0, 2})});
    CHECK(toric_ideal(planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}})) ==
          std::vector<Binomial>{bin({0, 0, 0, 2}, {0, 1, 1, 0}),
                                bin({3, 0, 0, 0}, {0, 0, 2, 0})});
    // Chain of consecutive relations for a geometric progression.
    CHECK(same_binomials_up_to_sign(
        toric_ideal(numerical({8, 12, 18, 27})),
        {bin({3, 0, 0, 0}, {0, 2, 0, 0}), bin({0, 3, 0, 0}, {0, 0, 2, 0}),
         bin({0, 0, 3, 0}, {0, 0, 0, 2})}));
}

TEST_CASE("minimal generator counts") {
    CHECK(toric_ideal(numerical({2, 3})).size() == 1);
    CHECK(toric_ideal(numerical({4, 6, 9})).size() == 2);
    CHECK(toric_ideal(numerical({4, 5, 11})).size() == 3);
    CHECK(toric_ideal(numerical({8, 12, 18, 27})).size() == 3);
}

TEST_CASE("every basis element is S-degree balanced") {
    auto balanced = [](const AffineSemigroup& s, const TermOrder& o) {
        for (const Binomial& f : toric_groebner(s, o)) {
            REQUIRE_FALSE(f.is_monomial());
            CHECK(oracle::s_degree_of(s.generators(), f.plus) ==
                  oracle::s_degree_of(s.generators(), *f.minus));
        }
    };
    TermOrder lex{OrderKind::Lex, 0};
    for (const AffineSemigroup& s :
         {numerical({4, 6, 9}), numerical({5, 6, 9}), numerical({4, 5, 11}),
          planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}})}) {
        balanced(s, kDrl);
        balanced(s, lex);
    }
}

TEST_CASE("groebner basis captures every balanced binomial") {
    AffineSemigroup s = numerical({4, 6, 9});
    std::vector<Binomial> gb = toric_groebner(s, kDrl);
    for (std::int64_t v = 0; v <= 48; ++v) {
        std::vector<Exponents> ms =
            oracle::monomials_of_degree(s.generators(), pt({v}));
        for (std::size_t i = 0; i < ms.size(); ++i) {
            for (std::size_t j = i + 1; j < ms.size(); ++j) {
                std::optional<Binomial> f = make_binomial(ms[i], ms[j], kDrl);
                REQUIRE(f);
                CHECK(normal_form(*f, gb, kDrl) == std::nullopt);
            }
        }
    }
}

TEST_CASE("groebner basis captures balanced binomials in dimension two") {
    AffineSemigroup s = planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}});
    std::vector<Binomial> gb = toric_groebner(s, kDrl);
    for (std::int64_t x = 0; x <= 8; ++x) {
        for (std::int64_t y = 0; y <= 10; ++y) {
            std::vector<Exponents> ms =
                oracle::monomials_of_degree(s.generators(), pt({x, y}));
            for (std::size_t i = 0; i < ms.size(); ++i) {
                for (std::size_t j = i + 1; j < ms.size(); ++j) {
                    std::optional<Binomial> f =
                        make_binomial(ms[i], ms[j], kDrl);
                    REQUIRE(f);
                    CHECK(normal_form(*f, gb, kDrl) == std::nullopt);
                }
            }
        }
    }
}

TEST_CASE("basis elements lie in the span of the minimal generators") {
    for (const AffineSemigroup& s :
         {numerical({4, 6, 9}), numerical({5, 6, 9}), numerical({4, 5, 11})}) {
        std::vector<oracle::SliceBinomial> gens;
        for (const Binomial& f : toric_ideal(s))
            gens.push_back({f.plus, *f.minus});
        for (const Binomial& f : toric_groebner(s, kDrl)) {
            CHECK(oracle::slice_member(f.plus, *f.minus, gens, s.generators()));
        }
    }
}

TEST_CASE("ideal is independent of the term order") {
    AffineSemigroup s = numerical({5, 6, 9});
    TermOrder lex{OrderKind::Lex, 0};
    std::vector<Binomial> drl = toric_groebner(s, kDrl);
    std::vector<Binomial> lx = toric_groebner(s, lex);
    for (const Binomial& f : drl)
        CHECK(normal_form(f, lx, lex) == std::nullopt);
    for (const Binomial& f : lx) CHECK(normal_form(f, drl, kDrl) == std::nullopt);
}

TEST_CASE("construction is permutation invariant") {
    std::vector<Point> gens = {pt({0, 2}), pt({2, 1}), pt({0, 3}), pt({1, 2})};
    std::vector<Binomial> reference =
        toric_ideal(AffineSemigroup::create(2, gens));
    std::sort(gens.begin(), gens.end());
    do {
        CHECK(toric_ideal(AffineSemigroup::create(2, gens)) == reference);
    } while (std::next_permutation(gens.begin(), gens.end()));
}

TEST_CASE("codimension check certifies the defining ideal") {
    AffineSemigroup s = numerical({4, 6, 9});
    std::vector<Binomial> j = toric_ideal(s);

    GastingerCheck c0 = gastinger_check(j, s, 0);
    CHECK(c0.matches);
    CHECK(c0.expected == 4);
    REQUIRE(c0.dimension);
    CHECK(*c0.dimension == 4);

    GastingerCheck c1 = gastinger_check(j, s, 1);
    CHECK(c1.matches);
    CHECK(*c1.dimension == 6);
}

TEST_CASE("codimension check flags a proper subideal") {
    AffineSemigroup s = numerical({4, 6, 9});
    // Dropping the second relation leaves z3 free: infinite quotient.
    GastingerCheck c = gastinger_check({bin({3, 0, 0}, {0, 2, 0})}, s, 0);
    CHECK_FALSE(c.matches);
    CHECK(c.infinite_dimensional);
    CHECK_FALSE(c.dimension);
}

TEST_CASE("codimension check validates its input") {
    AffineSemigroup s = numerical({4, 6, 9});
    std::vector<Binomial> j = toric_ideal(s);
    CHECK_THROWS_AS(gastinger_check(j, s, 3), InvalidInput);
    CHECK_THROWS_AS(gastinger_check(j, s, -1), InvalidInput);
    // An unbalanced binomial cannot be a member of the toric ideal.
    CHECK_THROWS_AS(gastinger_check({bin({1, 0, 0}, {0, 1, 0})}, s, 0),
                    InvalidInput);
    // gcd(4, 6) = 2: not a numerical semigroup.
    CHECK_THROWS_AS(
        gastinger_check({bin({3, 0}, {0, 2})}, numerical({4, 6}), 0),
        InvalidInput);
    // Not one-dimensional at all.
    AffineSemigroup p = planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}});
    CHECK_THROWS_AS(gastinger_check(toric_ideal(p), p, 0), InvalidInput);
}

TEST_CASE("resource limits abort the toric computation") {
    Limits tiny;
    tiny.max_basis_elements = 1;
    CHECK_THROWS_AS(toric_groebner(numerical({4, 6, 9}), kDrl, tiny),
                    ResourceBound);
}
