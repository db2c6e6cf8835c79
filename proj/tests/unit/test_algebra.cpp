#include <doctest.h>

#include "isoell/poly.hpp"
#include "isoell/rng.hpp"
#include "isoell/series.hpp"
#include "isoell/trunc.hpp"

using namespace isoell;

namespace {

MultiPoly rand_poly(Rng& rng, u32 p, const std::vector<std::string>& vars, unsigned max_deg,
                    size_t terms) {
    MultiPoly f(p, vars);
    for (size_t i = 0; i < terms; ++i) {
        Exponents e(vars.size());
        for (auto& x : e) x = static_cast<unsigned>(rng.below(max_deg + 1));
        f.set_term(e, FpElt(rng.below(p), p));
    }
    return f;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("prime field axioms on sampled triples") {
    Rng rng(42);
    for (u32 p : {2u, 3u, 5u, 7u, 11u}) {
        for (int i = 0; i < 50; ++i) {
            FpElt a(rng.below(p), p), b(rng.below(p), p), c(rng.below(p), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FpElt(0, p));
            if (!a.is_zero()) CHECK(a * a.inverse() == FpElt(1, p));
        }
    }
    CHECK_THROWS_AS(FpElt(1, 5) + FpElt(1, 7), ModulusMismatch);
    CHECK_THROWS_AS(require_prime(6), InvalidDescriptor);
}

TEST_CASE("extension fields") {
    ExtFieldPtr F4 = ExtField::make(2, 2);
    CHECK(F4->order() == 4);
    FqElt g = F4->generator();
    CHECK(g * g + g == F4->one());  // minimal modulus over F_2 is g^2 + g + 1
    for (u64 i = 1; i < F4->order(); ++i) {
        FqElt a = F4->element(i);
        CHECK(a * a.inverse() == F4->one());
    }
    ExtFieldPtr F125 = ExtField::make(5, 3);
    CHECK(F125->order() == 125);
    FqElt x = F125->element(77);
    CHECK(x.pow(125) == x);  // Frobenius fixes nothing extra: x^q = x
}

TEST_CASE("polynomial arithmetic: stated identities") {
    const u32 p5 = 5;
    MultiPoly x = MultiPoly::variable(p5, "x"), y = MultiPoly::variable(p5, "y");
    CHECK((x + y) + (x - y) == MultiPoly::constant(p5, 2) * x);
    CHECK(((x + y) + (x - y)).str() == "2*x");

    MultiPoly x2 = MultiPoly::variable(2, "x"), y2 = MultiPoly::variable(2, "y");
    MultiPoly sq = (x2 + y2) * (x2 + y2);
    CHECK(sq == x2 * x2 + y2 * y2);
    CHECK(sq.str() == "x^2 + y^2");

    CHECK_THROWS_AS(x + x2, ModulusMismatch);
}

TEST_CASE("product of linear forms with evaluation oracle") {
    const u32 p = 5;
    MultiPoly x = MultiPoly::variable(p, "x"), z = MultiPoly::variable(p, "z");
    std::vector<u32> a{1, 2, 3, 4};
    MultiPoly h = MultiPoly::constant(p, 1);
    for (u32 ai : a) h = h * (MultiPoly::constant(p, ai) * x + z);

    // oracle: evaluate the factored form directly at 25 sampled points
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        FpElt xv(rng.below(p), p), zv(rng.below(p), p);
        FpElt expect(1, p);
        for (u32 ai : a) expect = expect * (FpElt(ai, p) * xv + zv);
        CHECK(h.eval({xv, zv}) == expect);
    }
    // product over all of F_5^*: 4 (x^4 - z^4)
    CHECK(h.str() == "4*x^4 + z^4");
    CHECK(h.total_degree() == 4);
    CHECK(h.is_homogeneous());
}

TEST_CASE("partial derivatives") {
    MultiPoly z2 = MultiPoly::variable(2, "z");
    CHECK(z2.pow(4).derivative("z").is_zero());  // 4 = 0 in F_2

    const u32 p = 5;
    MultiPoly x = MultiPoly::variable(p, "x"), y = MultiPoly::variable(p, "y"),
              z = MultiPoly::variable(p, "z");
    MultiPoly g = y * y * z - x * (x + z) * (x - z);
    MultiPoly gx = g.derivative("x");
    // -3x^2 + z^2 = 2x^2 + z^2 over F_5
    CHECK(gx == MultiPoly::constant(p, 2) * x * x + z * z);
    CHECK(gx.str() == "2*x^2 + z^2");

    CHECK(MultiPoly::constant(p, 3).aligned_to({"x"}).derivative("x").is_zero());
    CHECK_THROWS_AS(MultiPoly::constant(p, 3).derivative("x"), UnknownVariable);
    CHECK_THROWS_AS(g.derivative("w"), UnknownVariable);
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
    Rng rng(11);
    for (u32 p : {2u, 3u, 5u}) {
        for (int i = 0; i < 20; ++i) {
            MultiPoly f = rand_poly(rng, p, {"x", "y"}, 3, 4);
            MultiPoly g = rand_poly(rng, p, {"x", "y"}, 3, 4);
            CHECK((f + g).derivative("x") == f.derivative("x") + g.derivative("x"));
            CHECK((f * g).derivative("x") ==
                  f.derivative("x") * g + f * g.derivative("x"));
        }
    }
}

TEST_CASE("truncated algebra basics") {
    TruncatedAlgebra A(2, {{"t", 4}});
    TruncElt t = A.gen("t");
    CHECK(t.pow(4).is_zero());
    CHECK_FALSE(t.pow(3).is_zero());

    // reduction is idempotent
    MultiPoly raw = t.poly.pow(2) + t.poly.pow(5);
    TruncElt once = A.reduce(raw);
    CHECK(A.reduce(once.poly) == once);
    CHECK(once == A.reduce(t.poly.pow(2)));

    CHECK_THROWS_AS(t.inverse(), NotAUnit);
    CHECK((A.one() + t).is_unit());
}

TEST_CASE("truncated inverse via the nilpotent geometric series") {
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}});
    TruncElt t = A.gen("t"), s = A.gen("s");
    TruncElt u = A.one() + t * t * s;
    TruncElt inv = u.inverse();
    CHECK(u * inv == A.one());
    CHECK(inv * u == A.one());
    // oracle: the geometric series 1 + (t^2 s) + (t^2 s)^2 + ... collapses
    TruncElt n = t * t * s;
    TruncElt series = A.one() + n + n * n;
    CHECK(inv == series);
    CHECK(inv == A.one() + n);  // (t^2 s)^2 = t^4 s^2 = 0
}

TEST_CASE("unit laws in truncated algebras") {
    Rng rng(3);
    for (u32 p : {2u, 3u, 5u}) {
        TruncatedAlgebra A(p, {{"t", 3}, {"s", 2}});
        for (int i = 0; i < 30; ++i) {
            TruncElt a = A.reduce(rand_poly(rng, p, A.vars(), 2, 3));
            TruncElt b = A.reduce(rand_poly(rng, p, A.vars(), 2, 3));
            CHECK((a * b).is_unit() == (a.is_unit() && b.is_unit()));
            if (a.is_unit()) {
                CHECK(a * a.inverse() == A.one());
                CHECK(a.inverse() * a == A.one());
            }
            // Frobenius additivity in characteristic p
            CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
        }
    }
}

TEST_CASE("power series inversion and valuation") {
    // 1/(1+u) over F_3 at precision 5: 1 - u + u^2 - u^3 + u^4
    PowerSeries one_plus_u = PowerSeries::from_coeffs(3, "u", 5, {1, 1});
    PowerSeries inv = series_invert(one_plus_u);
    CHECK(inv == PowerSeries::from_coeffs(3, "u", 5, {1, -1, 1, -1, 1}));
    PowerSeries prod = one_plus_u * inv;
    CHECK(prod == PowerSeries::from_coeffs(3, "u", 5, {1}));

    PowerSeries s = PowerSeries::from_coeffs(5, "u", 8, {0, 1, -1});
    CHECK(series_valuation(s) == 1u);
    CHECK_FALSE(series_valuation(PowerSeries::zero(5, "u", 8)).has_value());
    CHECK_THROWS_AS(series_invert(s), NotAUnit);
}

TEST_CASE("valuation is additive on products") {
    Rng rng(19);
    for (int i = 0; i < 40; ++i) {
        u32 p = i % 2 ? 3 : 5;
        unsigned N = 16;
        PowerSeries a = PowerSeries::zero(p, "u", N), b = PowerSeries::zero(p, "u", N);
        unsigned va = 1 + static_cast<unsigned>(rng.below(4));
        unsigned vb = 1 + static_cast<unsigned>(rng.below(4));
        a.c[va] = FpElt(1 + rng.below(p - 1), p);
        b.c[vb] = FpElt(1 + rng.below(p - 1), p);
        for (unsigned j = va + 1; j < N; ++j) a.c[j] = FpElt(rng.below(p), p);
        for (unsigned j = vb + 1; j < N; ++j) b.c[j] = FpElt(rng.below(p), p);
        CHECK(series_valuation(a * b) == va + vb);
    }
}

TEST_CASE("series composition") {
    // f = t + t^2, g = t^2: f(g) = t^2 + t^4
    PowerSeries f = PowerSeries::from_coeffs(5, "t", 8, {0, 1, 1});
    PowerSeries g = PowerSeries::from_coeffs(5, "t", 8, {0, 0, 1});
    CHECK(series_compose(f, g) == PowerSeries::from_coeffs(5, "t", 8, {0, 0, 1, 0, 1}));
    PowerSeries unit = PowerSeries::from_coeffs(5, "t", 8, {1, 1});
    CHECK_THROWS_AS(series_compose(f, unit), InvalidLocalAction);
}

}  // TEST_SUITE
