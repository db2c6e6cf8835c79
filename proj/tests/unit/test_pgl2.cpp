#include <doctest.h>

#include <set>

#include "isoell/pgl2.hpp"
#include "isoell/suite.hpp"

using namespace isoell;

TEST_SUITE("pgl2") {

TEST_CASE("projective matrices: construction and multiplication") {
    TruncatedAlgebra A(2, {{"t", 4}});
    TruncElt t = A.gen("t");
    ProjMat2 M = embed_supersingular(t);
    CHECK(proj_equal(proj_mul(M, proj_identity(A)), M));
    CHECK(proj_equal(proj_mul(proj_identity(A), M), M));

    // [[t,0],[0,t]] has nilpotent-squared determinant
    CHECK_THROWS_AS(make_proj_mat(t, A.zero(), A.zero(), t), NotInPGL2);
}

TEST_CASE("projective equality is scalar-invariant") {
    // [[0,t],[1,0]] = [[0,1],[t,0]] for t in mu_2
    TruncatedAlgebra A = mu2_algebra();
    TruncElt t = mu2_generic_point(A);
    CHECK(proj_equal(make_proj_mat(A.zero(), t, A.one(), A.zero()),
                     make_proj_mat(A.zero(), A.one(), t, A.zero())));

    // scalars over a plain prime field: the empty truncated algebra is F_5
    TruncatedAlgebra F5(5, {});
    CHECK(proj_equal(proj_identity(F5),
                     make_proj_mat(F5.constant(2), F5.zero(), F5.zero(), F5.constant(2))));
}

TEST_CASE("projective equality is an equivalence relation on samples") {
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}});
    TruncElt t = A.gen("t"), s = A.gen("s");
    std::vector<ProjMat2> sample = {
        proj_identity(A),
        embed_supersingular(t),
        embed_supersingular(s),
        proj_scale(embed_supersingular(t), A.one() + t * s),
        proj_mul(embed_supersingular(t), embed_supersingular(s)),
    };
    for (const auto& m : sample) CHECK(proj_equal(m, m));
    for (const auto& m : sample)
        for (const auto& n : sample) CHECK(proj_equal(m, n) == proj_equal(n, m));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (proj_equal(a, b) && proj_equal(b, c)) CHECK(proj_equal(a, c));
    CHECK(proj_equal(sample[1], sample[3]));
    CHECK_FALSE(proj_equal(sample[1], sample[2]));  // injectivity on parameters
}

TEST_CASE("ordinary embedding") {
    TruncatedAlgebra A = mu2_algebra();
    TruncElt t = mu2_generic_point(A);
    CHECK(proj_equal(embed_ordinary(0, A.one()), proj_identity(A)));
    ProjMat2 M = embed_ordinary(1, t);
    CHECK(M.a.is_zero());
    CHECK(M.b == t);
    CHECK(M.c == A.one());
    CHECK(M.d.is_zero());
    CHECK_THROWS_AS(embed_ordinary(0, A.gen("u")), InvalidGroupPoint);  // u^2 = 0 != 1

    CheckResult r = verify_embed_ordinary();
    CHECK(r.pass);
}

TEST_CASE("supersingular embedding") {
    TruncatedAlgebra A(2, {{"t", 4}});
    CHECK(proj_equal(embed_supersingular(A.zero()), proj_identity(A)));
    CHECK_THROWS_AS(embed_supersingular(A.one()), InvalidGroupPoint);

    CheckResult r = verify_embed_supersingular();
    CHECK(r.pass);
}

TEST_CASE("fixed point scans") {
    TruncatedAlgebra A = mu2_algebra();
    TruncElt t = mu2_generic_point(A);
    auto diag_only = scan_fixed_points({embed_ordinary(0, t)}, 8);
    std::set<std::string> pts;
    for (const auto& fp : diag_only) pts.insert(fp.point);
    CHECK(pts == std::set<std::string>{"[0:1]", "[1:0]"});
    // both points occur for each of q = 2, 4, 8
    CHECK(diag_only.size() == 6);

    CHECK(scan_fixed_points({embed_ordinary(0, t), embed_ordinary(1, A.one())}, 8).empty());

    TruncatedAlgebra B(2, {{"t", 4}});
    CHECK(scan_fixed_points({embed_supersingular(B.gen("t"))}, 8).empty());

    // an empty matrix list fixes all of P^1
    auto all = scan_fixed_points({}, 2);
    CHECK(all.size() == 3);  // [1:0], [0:1], [1:1]
}

}  // TEST_SUITE
