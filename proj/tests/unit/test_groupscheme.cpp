#include <doctest.h>

#include <set>

#include "isoell/groupscheme.hpp"

using namespace isoell;

TEST_SUITE("groupscheme") {

TEST_CASE("orders and the connected-etale split") {
    GroupSchemeDesc G1{2, {Atom::mu(4), Atom::constant(3)}};
    CHECK(order(G1) == 12);
    CHECK(connected_etale_split(G1) == std::pair<u64, u64>{4, 3});

    GroupSchemeDesc G2{2, {Atom::ss_e2()}};
    CHECK(order(G2) == 4);
    CHECK(connected_etale_split(G2) == std::pair<u64, u64>{4, 1});
    CHECK(is_infinitesimal(G2));

    GroupSchemeDesc G3{5, {Atom::constant(5)}};
    CHECK(connected_etale_split(G3) == std::pair<u64, u64>{1, 5});
    CHECK_FALSE(is_infinitesimal(G3));

    GroupSchemeDesc bad{3, {Atom::ss_e2()}};
    CHECK_THROWS_AS(order(bad), InvalidDescriptor);
}

TEST_CASE("diagonalizability") {
    CHECK(is_diagonalizable(GroupSchemeDesc{2, {Atom::mu(4)}}));
    CHECK(is_diagonalizable(GroupSchemeDesc{5, {Atom::constant(3), Atom::mu(5)}}));
    CHECK_FALSE(is_diagonalizable(GroupSchemeDesc{3, {Atom::constant(3)}}));
    CHECK_FALSE(is_diagonalizable(GroupSchemeDesc{2, {Atom::alpha(1)}}));
    CHECK_FALSE(is_diagonalizable(GroupSchemeDesc{2, {Atom::ss_e2()}}));
}

TEST_CASE("character enumeration") {
    GroupSchemeDesc mu2{2, {Atom::mu(2)}};
    auto chars = characters(mu2);
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].residues == std::vector<u64>{0});
    CHECK(chars[1].residues == std::vector<u64>{1});

    GroupSchemeDesc G{5, {Atom::mu(2), Atom::mu(3)}};
    auto cs = characters(G);
    REQUIRE(cs.size() == 6);
    CHECK(cs[0].residues == std::vector<u64>{0, 0});
    CHECK(cs[1].residues == std::vector<u64>{0, 1});
    CHECK(cs[3].residues == std::vector<u64>{1, 0});

    CHECK_THROWS_AS(characters(GroupSchemeDesc{2, {Atom::alpha(1)}}), NotDiagonalizable);
}

TEST_CASE("characters form a group") {
    GroupSchemeDesc G{5, {Atom::mu(2), Atom::mu(3)}};
    auto cs = characters(G);
    CHECK(cs.size() == order(G));
    std::set<std::vector<u64>> all;
    for (const Character& c : cs) all.insert(c.residues);
    Character zero = zero_character(G);
    for (const Character& a : cs) {
        CHECK(add_characters(G, a, zero) == a);
        CHECK(add_characters(G, a, negate_character(G, a)) == zero);
        for (const Character& b : cs)
            CHECK(all.count(add_characters(G, a, b).residues) == 1);  // closure
    }
}

TEST_CASE("m_of on cyclic groups, against a brute-force oracle") {
    // oracle for cyclic G = mu_n with stabilizer the full group:
    // m is the unique value in [1, n] with lambda - m nu = 0 mod n
    auto oracle = [](u64 lambda, u64 nu, u64 n) -> u64 {
        for (u64 m = 1; m <= n; ++m)
            if ((lambda + n * n - m * nu) % n == 0) return m;
        return 0;
    };
    GroupSchemeDesc mu2{2, {Atom::mu(2)}};
    CHECK(m_of(mu2, Character{{1}}, Character{{1}}, 2) == 1);

    for (u32 p : {3u, 5u, 7u}) {
        GroupSchemeDesc G{p, {Atom::mu(p)}};
        CHECK(m_of(G, Character{{p - 1}}, Character{{1}}, p) == p - 1);
        for (u64 lam = 0; lam < p; ++lam)
            for (u64 nu = 1; nu < p; ++nu)
                CHECK(m_of(G, Character{{lam}}, Character{{nu}}, p) == oracle(lam, nu, p));
    }

    GroupSchemeDesc mu3{3, {Atom::mu(3)}};
    CHECK(m_of(mu3, Character{{0}}, Character{{1}}, 3) == 3);  // trivial restriction
}

TEST_CASE("m_of shifts cyclically in lambda") {
    for (u64 n = 2; n <= 25; ++n) {
        u32 p = n % 2 ? 2 : 3;  // any characteristic works for the bookkeeping
        GroupSchemeDesc G{p, {Atom::mu(n)}};
        for (u64 nu = 1; nu < n; ++nu) {
            if (std::gcd(nu, n) != 1) continue;
            Character nuc{{nu}};
            for (u64 lam = 0; lam < n; ++lam) {
                u64 m0 = m_of(G, Character{{lam}}, nuc, n);
                u64 m1 = m_of(G, add_characters(G, Character{{lam}}, nuc), nuc, n);
                CHECK(m1 == (m0 % n) + 1);
            }
        }
    }
    // and on a product group with a proper cyclic stabilizer
    GroupSchemeDesc G{5, {Atom::mu(2), Atom::mu(3)}};
    Character nu{{1, 1}};
    for (const Character& lam : characters(G)) {
        u64 m0 = m_of(G, lam, nu, 3);
        u64 m1 = m_of(G, add_characters(G, lam, nu), nu, 3);
        CHECK(m1 == (m0 % 3) + 1);
    }
}

TEST_CASE("m_of rejects non-generating weights") {
    GroupSchemeDesc mu4{2, {Atom::mu(4)}};
    CHECK_THROWS_AS(m_of(mu4, Character{{1}}, Character{{2}}, 4), InvalidWeight);
    CHECK_THROWS_AS(m_of(mu4, Character{{1}}, Character{{0}}, 2), InvalidWeight);
    // the restriction map to the order-2 quotient is reduction mod 2, so the
    // weight 2 dies there while 1 and 3 both generate
    CHECK_THROWS_AS(m_of(mu4, Character{{1}}, Character{{2}}, 2), InvalidWeight);
    CHECK(m_of(mu4, Character{{1}}, Character{{1}}, 2) == 1);
    CHECK(m_of(mu4, Character{{1}}, Character{{3}}, 2) == 1);
    CHECK(m_of(mu4, Character{{2}}, Character{{1}}, 2) == 2);
}

TEST_CASE("supersingular E[2] group law") {
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}, {"r", 4}});
    TruncElt t = A.gen("t"), s = A.gen("s"), r = A.gen("r");

    CHECK(e2_group_law(t, A.zero()) == t);
    CHECK(e2_group_law(A.zero(), t) == t);

    // every point is 2-torsion: t (+) t = 2t + t^4 = 0
    TruncatedAlgebra B(2, {{"t", 4}});
    TruncElt tb = B.gen("t");
    CHECK(e2_group_law(tb, tb) == B.zero());

    CHECK(e2_group_law(t, s) == e2_group_law(s, t));

    // associativity, both sides expanded symbolically
    TruncElt lhs = e2_group_law(e2_group_law(t, s), r);
    TruncElt rhs = e2_group_law(t, e2_group_law(s, r));
    CHECK(lhs == rhs);
    // independent expansion: t+s+r + t^2 s^2 + s^2 r^2 + t^2 r^2
    TruncElt expect = t + s + r + t * t * s * s + s * s * r * r + t * t * r * r;
    CHECK(lhs == expect);

    CHECK_THROWS_AS(e2_group_law(A.one() + t, s), InvalidGroupPoint);
}

}  // TEST_SUITE
