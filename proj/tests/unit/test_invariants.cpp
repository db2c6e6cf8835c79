#include <doctest.h>

#include "isoell/invariants.hpp"
#include "isoell/rng.hpp"
#include "isoell/suite.hpp"

using namespace isoell;

namespace {

SurfaceData mu_surface(u32 p, u64 n, u64 gY, std::vector<std::pair<u64, std::vector<u64>>> orbits,
                       XHint hint = XHint::unknown, u64 hom_rank = 0) {
    SurfaceData d;
    d.p = p;
    d.group = GroupSchemeDesc{p, {Atom::mu(n)}};
    d.base_genus = gY;
    for (auto& [stab, w] : orbits) d.orbits.push_back(OrbitDatum{stab, Character{w}, ""});
    d.x_hint = hint;
    d.hom_rank = hom_rank;
    return d;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("dualizing degree: worked values") {
    for (u32 p : {2u, 3u, 5u, 7u}) {
        SurfaceData d = mu_surface(p, p, 0, {{p, {1}}, {p, {p - 1}}}, XHint::rational_smooth);
        CHECK(dualizing_degree(d) == -2);
    }
    CHECK(dualizing_degree(mu_surface(3, 3, 0, {{3, {1}}, {3, {1}}, {3, {1}}},
                                      XHint::rational_cuspidal)) == 0);
    CHECK(dualizing_degree(mu_surface(2, 2, 0,
                                      {{2, {1}}, {2, {1}}, {2, {1}}, {2, {1}}},
                                      XHint::rational_cuspidal)) == 0);
    CHECK(dualizing_degree(mu_surface(5, 5, 0, {{5, {1}}, {5, {1}}, {5, {1}}, {5, {1}}, {5, {1}}},
                                      XHint::higher)) == 10);
}

TEST_CASE("dualizing degree: orbit additivity") {
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        u64 n = 2 + rng.below(10);
        u32 p = 5;
        SurfaceData base = mu_surface(p, n, 1 + rng.below(2), {});
        SurfaceData more = base;
        u64 divisors[8];
        size_t nd = 0;
        for (u64 d = 2; d <= n; ++d)
            if (n % d == 0 && nd < 8) divisors[nd++] = d;
        u64 stab = divisors[rng.below(nd)];
        more.orbits.push_back(OrbitDatum{stab, Character{{1}}, ""});
        long long lhs = dualizing_degree(more);
        long long rhs = dualizing_degree(base) +
                        static_cast<long long>(order(base.group)) -
                        static_cast<long long>(order(base.group) / stab);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("arithmetic genus and the Kodaira trichotomy") {
    CHECK(arithmetic_genus(-2) == 0);
    CHECK(arithmetic_genus(0) == 1);
    CHECK(arithmetic_genus(4) == 3);
    CHECK_THROWS_AS(arithmetic_genus(3), InconsistentData);

    CHECK(kodaira_dimension(mu_surface(5, 5, 0, {{5, {1}}, {5, {4}}}, XHint::rational_smooth)) ==
          Kappa::minus_infinity);
    CHECK(kodaira_dimension(mu_surface(3, 3, 0, {{3, {1}}, {3, {1}}, {3, {1}}},
                                       XHint::rational_cuspidal)) == Kappa::zero);
    CHECK(kodaira_dimension(mu_surface(5, 2, 2, {})) == Kappa::one);
}

TEST_CASE("betti numbers") {
    CHECK(betti_numbers(0) == std::array<long long, 5>{1, 2, 2, 2, 1});
    CHECK(betti_numbers(1) == std::array<long long, 5>{1, 4, 6, 4, 1});
    CHECK(betti_numbers(3) == std::array<long long, 5>{1, 8, 14, 8, 1});
    for (u64 g = 0; g <= 6; ++g) {
        auto b = betti_numbers(g);
        CHECK(b[0] == 1);
        CHECK(b[4] == 1);
        CHECK(b[1] == b[3]);
        CHECK(b[0] - b[1] + b[2] - b[3] + b[4] >= 0);
    }
}

TEST_CASE("chi and irregularity") {
    CHECK(chi_and_irregularity(mu_surface(5, 2, 0, {{2, {1}}, {2, {1}}})).q == 1);
    auto c0 = chi_and_irregularity(mu_surface(5, 2, 0, {{2, {1}}, {2, {1}}}));
    CHECK(c0.chi == 0);
    CHECK(c0.h0_omega == 0);
    CHECK(c0.pic_reduced);
    auto c1 = chi_and_irregularity(mu_surface(5, 2, 1, {}));
    CHECK(c1.q == 2);
    CHECK(c1.h0_omega == 1);
    auto c5 = chi_and_irregularity(mu_surface(5, 2, 5, {}));
    CHECK(c5.chi == 0);
    CHECK(c5.q == 6);
    CHECK(c5.h0_omega == 5);
    SurfaceData wild;
    wild.p = 2;
    wild.group = GroupSchemeDesc{2, {Atom::ss_e2()}};
    wild.base_genus = 0;
    wild.orbits = {OrbitDatum{2, std::nullopt, ""}, OrbitDatum{2, std::nullopt, ""}};
    CHECK_THROWS_AS(chi_and_irregularity(wild), NotSupported);
}

TEST_CASE("weight spaces") {
    // mu_p on P^1 with opposite weights: zero space for every nonzero weight
    for (u32 p : {3u, 5u}) {
        SurfaceData d = mu_surface(p, p, 0, {{p, {1}}, {p, {p - 1}}}, XHint::rational_smooth);
        CHECK(weight_space_dim(zero_character(d.group), d) == 0);
        for (u64 lam = 1; lam < p; ++lam)
            CHECK(weight_space_dim(Character{{lam}}, d) == 0);
    }
    SurfaceData g2 = mu_surface(5, 2, 2, {});
    CHECK(weight_space_dim(zero_character(g2.group), g2) == 2);

    // the central cross-check: weight spaces sum to p_a(X)
    for (SurfaceData d : {
             mu_surface(3, 3, 0, {{3, {1}}, {3, {1}}, {3, {1}}}, XHint::rational_cuspidal),
             mu_surface(5, 5, 0, {{5, {1}}, {5, {1}}, {5, {1}}, {5, {1}}, {5, {1}}},
                        XHint::higher),
             mu_surface(5, 2, 1, {}, XHint::elliptic_translations),
             mu_surface(2, 4, 1, {{4, {1}}, {4, {3}}, {2, {1}}, {2, {1}}}),
         }) {
        long long total = 0;
        for (const Character& lam : characters(d.group)) total += weight_space_dim(lam, d);
        CHECK(total == arithmetic_genus(dualizing_degree(d)));
    }

    // weights that cannot come from a genuine curve are rejected: a single
    // order-2 orbit on a mu_4 cover of P^1 leaves a half-integral space
    SurfaceData bad = mu_surface(2, 4, 0, {{4, {1}}, {2, {1}}});
    CHECK_THROWS_AS(weight_space_dim(Character{{1}}, bad), InconsistentData);
}

TEST_CASE("fibers, Picard rank, thresholds") {
    SurfaceData d = mu_surface(5, 5, 1, {{5, {1}}});
    auto fibers = fiber_multiplicities(d);
    REQUIRE(fibers.size() == 1);
    CHECK(fibers[0].multiplicity == 5);
    CHECK(fibers[0].tame);
    CHECK(fibers[0].pic0 == "E");
    CHECK(fiber_multiplicities(mu_surface(5, 2, 1, {})).empty());

    // an order-p stabilizer inside mu_{p^2} still gives a tame fiber of
    // multiplicity p
    SurfaceData sub = mu_surface(5, 25, 1, {{5, {1}}});
    auto sub_fibers = fiber_multiplicities(sub);
    REQUIRE(sub_fibers.size() == 1);
    CHECK(sub_fibers[0].multiplicity == 5);
    CHECK(sub_fibers[0].tame);

    CHECK(picard_rank(mu_surface(5, 5, 0, {{5, {1}}, {5, {4}}}, XHint::rational_smooth)) == 2);
    CHECK(picard_rank(mu_surface(5, 2, 1, {}, XHint::unknown, 1)) == 3);
    CHECK(picard_rank(mu_surface(5, 2, 1, {}, XHint::unknown, 4)) == 6);

    CHECK(kappa_one_sufficient(0, 3, 5, 1));
    CHECK_FALSE(kappa_one_sufficient(0, 3, 3, 1));
    CHECK(kappa_one_p1_bound(3, 3, 1) == 0);
    CHECK_FALSE(kappa_one_sufficient(1, 0, 5, 1));
    CHECK(kappa_one_sufficient(2, 0, 2, 1));
}

TEST_CASE("classification rows") {
    auto quasi = classify(mu_surface(3, 3, 0, {{3, {1}}, {3, {1}}, {3, {1}}}));
    CHECK(quasi.class_row == "Hyperelliptic or Quasi-hyperelliptic");
    CHECK(!quasi.flags.empty());

    auto quasi_hint = classify(
        mu_surface(3, 3, 0, {{3, {1}}, {3, {1}}, {3, {1}}}, XHint::rational_cuspidal));
    CHECK(quasi_hint.class_row == "Quasi-hyperelliptic");

    auto abelian = classify(mu_surface(5, 2, 1, {}, XHint::elliptic_translations));
    CHECK(abelian.class_row == "Abelian surface");
    CHECK(abelian.aut0 == "Abelian surface (S itself)");
    auto abelian_auto = classify(mu_surface(5, 2, 1, {}));
    CHECK(abelian_auto.class_row == "Abelian surface");

    auto proper = classify(
        mu_surface(5, 5, 0, {{5, {1}}, {5, {1}}, {5, {1}}, {5, {1}}, {5, {1}}}, XHint::higher));
    CHECK(proper.class_row == "Properly elliptic surface");
    CHECK(proper.aut0 == "Elliptic curve");

    auto ruled = classify(mu_surface(5, 5, 0, {{5, {1}}, {5, {4}}}, XHint::rational_smooth));
    CHECK(ruled.class_row == "(Elliptic) ruled surface");

    // kappa = 0 away from characteristics 2 and 3 can only be hyperelliptic
    auto hyper5 = classify(mu_surface(5, 2, 0, {{2, {1}}, {2, {1}}, {2, {1}}, {2, {1}}}));
    CHECK(hyper5.class_row == "Hyperelliptic");
}

TEST_CASE("classification consistency errors") {
    // hint contradicts the computed genus
    CHECK_THROWS_AS(
        classify(mu_surface(5, 5, 0, {{5, {1}}, {5, {4}}}, XHint::rational_cuspidal)),
        InconsistentData);
    // quasi-hyperelliptic outside characteristics 2, 3
    CHECK_THROWS_AS(classify(mu_surface(5, 2, 0, {{2, {1}}, {2, {1}}, {2, {1}}, {2, {1}}},
                                        XHint::rational_cuspidal)),
                    InconsistentData);
    // translations with multiple fibers
    CHECK_THROWS_AS(classify(mu_surface(5, 2, 1, {{2, {1}}, {2, {1}}},
                                        XHint::elliptic_translations)),
                    InconsistentData);
}

TEST_CASE("input validation") {
    // infinitesimal group over P^1 needs two multiple fibers
    SurfaceData d = mu_surface(5, 5, 0, {{5, {1}}});
    CHECK_THROWS_AS(validate(d), InconsistentData);
    // free orbits are never listed
    SurfaceData free_orbit = mu_surface(5, 5, 1, {{1, {1}}});
    CHECK_THROWS_AS(validate(free_orbit), InconsistentData);
    // stabilizer order must divide |G|
    SurfaceData bad_div = mu_surface(5, 5, 1, {{3, {1}}});
    CHECK_THROWS_AS(validate(bad_div), InconsistentData);
    // rational X forces hom_rank zero
    SurfaceData rat = mu_surface(5, 5, 0, {{5, {1}}, {5, {4}}}, XHint::rational_smooth, 2);
    CHECK_THROWS_AS(validate(rat), InconsistentData);
    // diagonalizable groups need weights
    SurfaceData noweight;
    noweight.p = 5;
    noweight.group = GroupSchemeDesc{5, {Atom::mu(5)}};
    noweight.base_genus = 1;
    noweight.orbits = {OrbitDatum{5, std::nullopt, ""}};
    CHECK_THROWS_AS(validate(noweight), InvalidWeight);
}

TEST_CASE("supersingular E[2] on P^1: the second indecomposable ruled surface") {
    // E[2] of a supersingular curve acts on P^1 without fixed points, so the
    // quotient datum has no orbits at all; the surface is ruled.
    SurfaceData d;
    d.p = 2;
    d.group = GroupSchemeDesc{2, {Atom::ss_e2()}};
    d.base_genus = 0;
    d.e_type = EType::supersingular;
    d.x_hint = XHint::rational_smooth;
    CHECK_NOTHROW(validate(d));
    InvariantReport rep = compute_report(d);
    CHECK(rep.kappa == Kappa::minus_infinity);
    CHECK(rep.class_row == "(Elliptic) ruled surface");
    CHECK(rep.deg_omega == -2);
    CHECK(rep.betti == std::array<long long, 5>{1, 2, 2, 2, 1});
    CHECK(rep.rho == 2);
    CHECK_FALSE(rep.chi_q.has_value());

    // without the rational hint there is nothing to compute from
    SurfaceData blind = d;
    blind.x_hint = XHint::unknown;
    CHECK_THROWS_AS(compute_report(blind), NotSupported);
}

TEST_CASE("full report internal consistency") {
    Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        SurfaceData d = random_diagonalizable_surface(rng);
        InvariantReport rep = compute_report(d);
        CHECK(rep.betti[1] == 2 * rep.chi_q->q);  // Picard-scheme reducedness
        CHECK(rep.euler == 0);
        CHECK((rep.kappa == Kappa::minus_infinity) == (rep.deg_omega < 0));
        CHECK((rep.deg_omega < 0) == (rep.p_a == 0));
        CHECK(rep.p_a == rep.deg_omega / 2 + 1);
        CHECK(rep.fibers.size() == d.orbits.size());
    }
}

}  // TEST_SUITE
