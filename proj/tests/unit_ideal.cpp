#include <catch2/catch_amalgamated.hpp>

#include "semicone/semicone.hpp"
#include "test_util.hpp"

using namespace semicone;
using testutil::bin;
using testutil::ex;

static const TermOrder kDrl{OrderKind::DegRevLex, 0};

namespace {

std::vector<Binomial> monomial_ideal(
    std::initializer_list<std::initializer_list<std::int64_t>> leads) {
    std::vector<Binomial> out;
    for (const auto& m : leads) out.push_back(make_monomial(Exponents(m)));
    return out;
}

}  // namespace

TEST_CASE("binomial helpers") {
    Binomial f = *make_binomial(ex({3, 0}), ex({0, 2}), kDrl);
    CHECK(f.plus == ex({3, 0}));  // z1^3 has the higher degree
    CHECK(ecart(f) == -1);        // tail degree 2 minus lead degree 3
    CHECK_FALSE(is_standard_homogeneous(f));
    CHECK(is_standard_homogeneous(bin({1, 1}, {2, 0})));
    CHECK(make_binomial(ex({1, 1}), ex({1, 1}), kDrl) == std::nullopt);
    CHECK(binomial_string(f) == "z1^3 - z2^2");
    CHECK(binomial_support(f) == std::vector<int>{0, 1});
}

TEST_CASE("ecart under the local order") {
    TermOrder local = local_order();
    Binomial f = *make_binomial(ex({3, 0}), ex({0, 2}), local);
    CHECK(f.plus == ex({0, 2}));  // lower degree leads locally
    CHECK(ecart(f) == 1);
}

TEST_CASE("s-pairs cancel leads exactly") {
    Binomial f = bin({3, 0, 0}, {0, 2, 0});
    Binomial g = bin({0, 3, 0}, {0, 0, 2});
    std::optional<Binomial> sp = s_pair(f, g, kDrl);
    REQUIRE(sp);
    // lcm(z1^3, z2^3): f-side multiplies by z2^3/..., both leads cancel.
    CHECK(sp->plus != mono_lcm(f.plus, g.plus));
}

TEST_CASE("buchberger output reduces all its s-pairs to zero") {
    std::vector<Binomial> gens = {bin({2, 0, 0}, {0, 1, 0}),
                                  bin({3, 0, 0}, {0, 0, 1})};
    std::vector<Binomial> gb = reduced_groebner_basis(gens, kDrl, {});
    for (std::size_t i = 0; i < gb.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
            std::optional<Binomial> sp = s_pair(gb[i], gb[j], kDrl);
            if (!sp) continue;
            CHECK(normal_form(*sp, gb, kDrl, {}) == std::nullopt);
        }
    }
    // The inputs themselves reduce to zero.
    for (const Binomial& f : gens)
        CHECK(normal_form(f, gb, kDrl, {}) == std::nullopt);
}

TEST_CASE("reduced groebner basis is reduced and idempotent") {
    std::vector<Binomial> gens = {bin({2, 0, 0}, {0, 1, 0}),
                                  bin({3, 0, 0}, {0, 0, 1}),
                                  bin({1, 1, 0}, {0, 0, 1})};
    std::vector<Binomial> gb = reduced_groebner_basis(gens, kDrl, {});
    for (std::size_t i = 0; i < gb.size(); ++i) {
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j) continue;
            CHECK_FALSE(divides(gb[j].plus, gb[i].plus));
            if (gb[i].minus) CHECK_FALSE(divides(gb[j].plus, *gb[i].minus));
        }
    }
    CHECK(reduced_groebner_basis(gb, kDrl, {}) == gb);
}

TEST_CASE("normal form kills monomial multiples of basis elements") {
    std::vector<Binomial> gens = {bin({2, 0}, {0, 1}), bin({3, 0}, {1, 1})};
    std::vector<Binomial> gb = reduced_groebner_basis(gens, kDrl, {});
    for (std::int64_t a = 0; a <= 2; ++a) {
        for (std::int64_t b = 0; b <= 2; ++b) {
            for (const Binomial& g : gb) {
                Binomial m = g;
                m.plus = mono_mul(m.plus, ex({a, b}));
                if (m.minus) m.minus = mono_mul(*m.minus, ex({a, b}));
                CHECK(normal_form(m, gb, kDrl, {}) == std::nullopt);
            }
        }
    }
}

TEST_CASE("standard monomials of a finite quotient") {
    std::vector<Binomial> gb = monomial_ideal({{3, 0}, {0, 2}});
    StandardMonomials sm = standard_monomials(gb, 2, {});
    REQUIRE(sm.finite);
    std::vector<Exponents> want = {ex({0, 0}), ex({0, 1}), ex({1, 0}),
                                   ex({1, 1}), ex({2, 0}), ex({2, 1})};
    CHECK(sm.monomials == want);
}

TEST_CASE("standard monomials detect infinite quotients") {
    StandardMonomials sm = standard_monomials(monomial_ideal({{1, 0}}), 2, {});
    CHECK_FALSE(sm.finite);
    CHECK(sm.monomials.empty());
}

TEST_CASE("unit ideal has no standard monomials") {
    StandardMonomials sm = standard_monomials(monomial_ideal({{0, 0}}), 2, {});
    CHECK(sm.finite);
    CHECK(sm.monomials.empty());
}

TEST_CASE("standard monomial cap raises a resource error") {
    Limits tiny;
    tiny.max_standard_monomials = 3;
    std::vector<Binomial> gb = monomial_ideal({{9, 0}, {0, 9}});
    CHECK_THROWS_AS(standard_monomials(gb, 2, tiny), ResourceBound);
}

TEST_CASE("minimal monomial generators prune divisible members") {
    std::vector<Exponents> mins = minimal_monomial_generators(
        {ex({2, 0}), ex({2, 1}), ex({0, 3}), ex({1, 3})});
    CHECK(mins == std::vector<Exponents>{ex({2, 0}), ex({0, 3})});
}
