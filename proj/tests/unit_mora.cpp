#include <catch2/catch_amalgamated.hpp>

#include "semicone/semicone.hpp"
#include "test_util.hpp"

using namespace semicone;
using testutil::bin;
using testutil::ex;
using testutil::numerical;
using testutil::planar;

TEST_CASE("local order ranks lower degree higher") {
    TermOrder o = local_order();
    CHECK_FALSE(o.is_global());
    CHECK(greater(ex({0, 1}), ex({2, 0}), o));
    // Revlex tie-break: the smallest differing index decides, smaller
    // exponent wins, so the higher-indexed variable ranks higher.
    CHECK(greater(ex({0, 0, 1}), ex({1, 0, 0}), o));
}

TEST_CASE("minimal standard bases of the fixtures") {
    StandardBasisResult a = standard_basis(toric_ideal(numerical({4, 6, 9})));
    CHECK(a.basis == std::vector<Binomial>{bin({0, 0, 2}, {3, 1, 0}),
                                           bin({0, 2, 0}, {3, 0, 0})});
    CHECK(a.homogeneous.empty());
    CHECK(a.nonhomogeneous == std::vector<int>{0, 1});
    CHECK(a.tangent_cone ==
          std::vector<Binomial>{make_monomial(ex({0, 0, 2})),
                                make_monomial(ex({0, 2, 0}))});

    StandardBasisResult b = standard_basis(
        toric_ideal(planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}})));
    CHECK(b.basis == std::vector<Binomial>{bin({0, 0, 0, 2}, {0, 1, 1, 0}),
                                           bin({0, 0, 2, 0}, {3, 0, 0, 0})});
    CHECK(b.homogeneous == std::vector<int>{0});
    CHECK(b.nonhomogeneous == std::vector<int>{1});

    StandardBasisResult c = standard_basis(toric_ideal(numerical({4, 5, 11})));
    CHECK(c.basis == std::vector<Binomial>{bin({0, 0, 2}, {3, 2, 0}),
                                           bin({0, 1, 1}, {4, 0, 0}),
                                           bin({1, 0, 1}, {0, 3, 0}),
                                           bin({0, 4, 0}, {5, 0, 0})});

    StandardBasisResult d = standard_basis(toric_ideal(numerical({5, 6, 9})));
    CHECK(d.basis == std::vector<Binomial>{bin({0, 0, 2}, {0, 3, 0}),
                                           bin({0, 1, 1}, {3, 0, 0}),
                                           bin({0, 4, 0}, {3, 0, 1})});
    CHECK(d.tangent_cone ==
          std::vector<Binomial>{make_monomial(ex({0, 0, 2})),
                                make_monomial(ex({0, 1, 1})),
                                bin({0, 4, 0}, {3, 0, 1})});
    CHECK(d.homogeneous == std::vector<int>{2});
}

TEST_CASE("standard basis leading monomials are minimal") {
    StandardBasisResult sb = standard_basis(toric_ideal(numerical({4, 5, 11})));
    for (std::size_t i = 0; i < sb.basis.size(); ++i) {
        for (std::size_t j = 0; j < sb.basis.size(); ++j) {
            if (i != j) CHECK_FALSE(divides(sb.basis[j].plus, sb.basis[i].plus));
        }
        // Tails are in normal form with respect to the other leads.
        if (!sb.basis[i].is_monomial()) {
            for (std::size_t j = 0; j < sb.basis.size(); ++j) {
                if (i != j)
                    CHECK_FALSE(divides(sb.basis[j].plus, *sb.basis[i].minus));
            }
        }
    }
}

TEST_CASE("weak normal form annihilates ideal elements") {
    TermOrder o = local_order();
    StandardBasisResult sb = standard_basis(toric_ideal(numerical({4, 6, 9})));
    for (const Binomial& f : sb.basis) {
        CHECK(mora_normal_form(f, sb.basis, o) == std::nullopt);
        for (std::int64_t a = 0; a <= 2; ++a) {
            Binomial m = f;
            m.plus = mono_mul(m.plus, ex({a, 1, 0}));
            if (m.minus) m.minus = mono_mul(*m.minus, ex({a, 1, 0}));
            CHECK(mora_normal_form(m, sb.basis, o) == std::nullopt);
        }
    }
    // Remainders have leads outside the leading ideal.
    std::optional<Binomial> r =
        mora_normal_form(bin({0, 0, 3}, {1, 0, 0}), sb.basis, o);
    REQUIRE(r);
    for (const Binomial& g : sb.basis) CHECK_FALSE(divides(g.plus, r->plus));
}

TEST_CASE("tail rewriting uses only original basis elements") {
    std::vector<Binomial> basis = {bin({0, 2, 0}, {3, 0, 0})};
    std::optional<Exponents> t =
        tail_normal_form(ex({0, 3, 0}), basis, basis.size());
    REQUIRE(t);
    CHECK(*t == ex({3, 1, 0}));
    // A monomial reducing to a basis monomial vanishes.
    std::vector<Binomial> with_mono = {make_monomial(ex({0, 2, 0}))};
    CHECK(tail_normal_form(ex({0, 5, 0}), with_mono, with_mono.size()) ==
          std::nullopt);
}

TEST_CASE("lead divisibility decides Cohen-Macaulayness of the graded ring") {
    StandardBasisResult good = standard_basis(toric_ideal(numerical({4, 6, 9})));
    CmCheck cg = cm_check(good, 1);
    CHECK(cg.graded_ring_cm);
    CHECK(cg.offending.empty());

    StandardBasisResult bad = standard_basis(toric_ideal(numerical({4, 5, 11})));
    CmCheck cb = cm_check(bad, 1);
    CHECK_FALSE(cb.graded_ring_cm);
    CHECK(cb.offending == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("support witness tracks homogeneity") {
    StandardBasisResult a = standard_basis(toric_ideal(numerical({4, 6, 9})));
    GbSupportWitness wa = gb_support_witness(a, 1);
    CHECK(wa.witnessed);
    CHECK(wa.witness_variable == 0);

    StandardBasisResult b = standard_basis(toric_ideal(numerical({5, 6, 9})));
    GbSupportWitness wb = gb_support_witness(b, 1);
    CHECK_FALSE(wb.witnessed);
    CHECK(wb.nonhomogeneous == std::vector<int>{0, 1});

    // Fully homogeneous basis: vacuous witness.
    StandardBasisResult c = standard_basis({bin({1, 1}, {2, 0})});
    GbSupportWitness wc = gb_support_witness(c, 1);
    CHECK(wc.witnessed);
    CHECK(wc.witness_variable == -1);
}

TEST_CASE("projection drops killed tails and keeps leads") {
    StandardBasisResult sb = standard_basis(toric_ideal(numerical({4, 6, 9})));
    std::vector<Binomial> p = project_basis(sb, 1);
    CHECK(p == std::vector<Binomial>{make_monomial(ex({0, 0, 2})),
                                     make_monomial(ex({0, 2, 0}))});
    CHECK(project_basis(sb, 0) == sb.basis);

    StandardBasisResult bad = standard_basis(toric_ideal(numerical({4, 5, 11})));
    CHECK_THROWS_AS(project_basis(bad, 1), InvalidInput);
}

TEST_CASE("basis element cap aborts the tangent cone computation") {
    Limits tiny;
    tiny.max_basis_elements = 2;
    CHECK_THROWS_AS(standard_basis(toric_ideal(numerical({4, 5, 11})), tiny),
                    ResourceBound);
}
