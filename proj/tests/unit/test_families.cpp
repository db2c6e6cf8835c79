#include <doctest.h>

#include <set>

#include "isoell/families.hpp"
#include "isoell/suite.hpp"

using namespace isoell;

TEST_SUITE("families") {

TEST_CASE("plane families from roots") {
    PlaneCurveFamily cubic = plane_family_from_roots(3, 1, {0, 1, 2});
    SurfaceData d3 = plane_family_to_surface(cubic);
    CHECK(order(d3.group) == 3);
    CHECK(d3.orbits.size() == 3);
    CHECK(dualizing_degree(d3) == 0);
    CHECK(kodaira_dimension(d3) == Kappa::zero);
    CHECK(d3.x_hint == XHint::rational_cuspidal);
    CHECK(classify(d3).class_row == "Quasi-hyperelliptic");

    PlaneCurveFamily quintic = plane_family_from_roots(5, 1, {0, 1, 2, 3, 4});
    SurfaceData d5 = plane_family_to_surface(quintic);
    CHECK(dualizing_degree(d5) == 10);
    CHECK(kodaira_dimension(d5) == Kappa::one);
    CHECK(classify(d5).class_row == "Properly elliptic surface");

    // p^r = 2: a smooth conic, hence a ruled surface
    PlaneCurveFamily conic = plane_family_from_roots(2, 1, {0}, true);
    SurfaceData d2 = plane_family_to_surface(conic);
    CHECK(dualizing_degree(d2) == -2);
    CHECK(d2.x_hint == XHint::rational_smooth);
}

TEST_CASE("characteristic-2 quartic with the small acting subgroup") {
    MultiPoly x = MultiPoly::variable(2, "x"), y = MultiPoly::variable(2, "y");
    MultiPoly f = x * y * (x * x + x * y + y * y);  // four distinct roots over F_4
    PlaneCurveFamily fam = make_plane_family(2, 2, f, 1);
    SurfaceData d = plane_family_to_surface(fam);
    CHECK(order(d.group) == 2);
    CHECK(d.orbits.size() == 4);
    for (const OrbitDatum& o : d.orbits) CHECK(o.stab_order == 2);
    CHECK(dualizing_degree(d) == 0);
    CHECK(d.x_hint == XHint::rational_cuspidal);
    CHECK(classify(d).class_row == "Quasi-hyperelliptic");
}

TEST_CASE("plane family validation") {
    CHECK_THROWS_AS(plane_family_from_roots(3, 1, {0, 1, 1}), InvalidFamily);  // repeated root
    CHECK_THROWS_AS(plane_family_from_roots(3, 1, {0, 1}), InvalidFamily);     // wrong degree
    MultiPoly x = MultiPoly::variable(2, "x"), y = MultiPoly::variable(2, "y");
    CHECK_THROWS_AS(make_plane_family(2, 2, x * x * y * y), InvalidFamily);    // square
    CHECK_THROWS_AS(make_plane_family(2, 2, x * x * y * y + x * y * y * y), InvalidFamily);
    // f = x^4 + x y^3 is squarefree: x times a separable cubic
    CHECK_NOTHROW(make_plane_family(2, 2, x.pow(4) + x * y.pow(3)));
    CHECK_THROWS_AS(make_plane_family(2, 2, x * y * (x * x + x * y + y * y), 3), InvalidFamily);
}

TEST_CASE("plane-family degrees across a small grid") {
    // deg omega_X = p^r (p^r - 3) for the full mu_{p^r} action
    for (auto [p, r] : std::vector<std::pair<u32, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
        u64 pr = 1;
        for (unsigned i = 0; i < r; ++i) pr *= p;
        // build a squarefree form of degree p^r
        MultiPoly f(p, {"x", "y"});
        if (pr == 4) {
            MultiPoly x = MultiPoly::variable(p, "x"), y = MultiPoly::variable(p, "y");
            f = x * y * (x * x + x * y + y * y);
        } else {
            // all roots rational: f = prod over a in F_p of (x - a y), padded
            // with the root at infinity when pr = p + 1
            std::vector<i64> roots;
            for (u64 a = 0; a < pr && a < p; ++a) roots.push_back(static_cast<i64>(a));
            f = plane_family_from_roots(p, r, roots, roots.size() < pr).f;
        }
        PlaneCurveFamily fam = make_plane_family(p, r, f);
        long long expect = static_cast<long long>(pr) * (static_cast<long long>(pr) - 3);
        CHECK(dualizing_degree(plane_family_to_surface(fam)) == expect);
    }
}

TEST_CASE("space family: construction and the calcoli identities") {
    SpaceCurveFamily fam = concrete_space_family_p5();
    CHECK(verify_calcoli(fam));
    SurfaceData d = space_family_to_surface(fam);
    CHECK(d.base_genus == 1);
    CHECK(d.orbits.size() == 5);
    CHECK(dualizing_degree(d) == 20);
    CHECK(kodaira_dimension(d) == Kappa::one);
    CHECK(kappa_one_sufficient(d.base_genus, d.orbits.size(), 5, 1));
    auto fibers = fiber_multiplicities(d);
    CHECK(fibers.size() == 5);
    for (const auto& f : fibers) {
        CHECK(f.multiplicity == 5);
        CHECK(f.tame);
    }

    SpaceProofChecks checks = space_proof_checks(5, 1, fam.F, fam.a);
    CHECK(checks.hx_at_01.is_zero());
    CHECK(checks.calcoli_first.is_zero());
    CHECK(checks.calcoli_second.is_zero());
}

TEST_CASE("space family validation") {
    ExtFieldPtr F = ExtField::make(5, 2);
    FqElt g = F->generator();
    CHECK_THROWS_AS(make_space_family(3, 1, ExtField::make(3, 2), {}), InvalidFamily);  // p < 5
    CHECK_THROWS_AS(make_space_family(5, 1, F, {F->from_int(2), F->from_int(3), g}),
                    InvalidFamily);  // wrong count
    CHECK_THROWS_AS(
        make_space_family(5, 1, F, {F->from_int(2), F->from_int(3), g, g}),
        InvalidFamily);  // repeated
    CHECK_THROWS_AS(
        make_space_family(5, 1, F, {F->from_int(1), F->from_int(3), g, -g}),
        InvalidFamily);  // contains 1
    CHECK_THROWS_AS(
        make_space_family(5, 1, F, {F->from_int(2), F->from_int(2) + g, g, -g}),
        InvalidFamily);  // nonzero sum
}

TEST_CASE("violating the sum constraint trips the smooth-point witness") {
    ExtFieldPtr F = ExtField::make(5, 2);
    FqElt g = F->generator();
    std::vector<FqElt> bad{F->from_int(2), F->from_int(3), g, g * F->from_int(2)};
    SpaceProofChecks checks = space_proof_checks(5, 1, F, bad);
    CHECK_FALSE(checks.hx_at_01.is_zero());
}

TEST_CASE("singular scans on reference curves") {
    const u32 p = 5;
    MultiPoly x = MultiPoly::variable(p, "x"), y = MultiPoly::variable(p, "y"),
              z = MultiPoly::variable(p, "z");

    // smooth conic
    CHECK(singular_scan(std::vector<MultiPoly>{x * x + y * z}, 25).empty());

    // cuspidal cubic: singular exactly at (0:0:1)
    auto cusp = singular_scan(std::vector<MultiPoly>{y * y * z - x * x * x}, 25);
    std::set<std::string> pts;
    for (const auto& P : cusp) pts.insert(P.str());
    CHECK(pts == std::set<std::string>{"(0:0:1)"});

    // the base cubic of the space family is smooth
    SpaceCurveFamily fam = concrete_space_family_p5();
    CHECK(singular_scan(std::vector<MultiPolyQ>{space_base_cubic(fam)}, 125).empty());
}

TEST_CASE("singular scan of the concrete space curve") {
    // The complete-intersection curve {g = 0, w^5 = z h + y^5} in P^3 has
    // Jacobian rank 1 at four rational points:
    //  - (0:1:0:1) and (0:0:1:1), where the gradient of the w-equation
    //    vanishes outright (at the latter because h_x(0,1) = sum a_i = 0 and
    //    h(0,1) + h_z(0,1) = p^n = 0),
    //  - (1:0:1:1) and (1:0:4:4), where it is proportional to the gradient
    //    of the cubic (the two displayed identities).
    SpaceCurveFamily fam = concrete_space_family_p5();
    auto found = singular_scan(space_curve_equations(fam), 125, space_coordinate_order());
    std::set<std::string> pts;
    for (const auto& P : found) pts.insert(P.str());
    CHECK(pts ==
          std::set<std::string>{"(0:1:0:1)", "(0:0:1:1)", "(1:0:1:1)", "(1:0:4:4)"});
    // every hit is rational over the prime field, so each q in {5, 25, 125}
    // reports the same four points
    CHECK(found.size() == 12);
}

TEST_CASE("random space families satisfy both identities") {
    CheckResult r = verify_calcoli_families(0, 30);
    CHECK(r.pass);
}

}  // TEST_SUITE
