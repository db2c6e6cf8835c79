#ifndef ISOELL_GROUPSCHEME_HPP
#define ISOELL_GROUPSCHEME_HPP

#include <string>
#include <vector>

#include "isoell/trunc.hpp"

namespace isoell {

enum class AtomKind { constant_cyclic, mu, alpha, ss_e2 };

/// One atomic factor of a finite group scheme over F_p:
///   constant_cyclic(n)  -- the constant group Z/nZ (etale, order n)
///   mu(n)               -- roots of unity (diagonalizable, order n)
///   alpha(r)            -- additive infinitesimal of order p^r
///   ss_e2               -- two-torsion of a supersingular elliptic curve
///                          (p = 2 only, order 4, infinitesimal unipotent)
struct Atom {
    AtomKind kind;
    u64 n = 0;       // order parameter for constant_cyclic / mu
    unsigned r = 0;  // exponent for alpha

    static Atom constant(u64 n) { return Atom{AtomKind::constant_cyclic, n, 0}; }
    static Atom mu(u64 n) { return Atom{AtomKind::mu, n, 0}; }
    static Atom alpha(unsigned r) { return Atom{AtomKind::alpha, 0, r}; }
    static Atom ss_e2() { return Atom{AtomKind::ss_e2, 0, 0}; }
};

bool operator==(const Atom& a, const Atom& b);

struct GroupSchemeDesc {
    u32 p = 0;
    std::vector<Atom> factors;
};

bool operator==(const GroupSchemeDesc& a, const GroupSchemeDesc& b);

/// Throws InvalidDescriptor on malformed data (ss_e2 with p != 2, zero
/// orders, atom order above 2^16).
void validate(const GroupSchemeDesc& G);

u64 atom_order(const Atom& a, u32 p);
u64 order(const GroupSchemeDesc& G);

/// (|G^0|, |pi_0(G)|): the infinitesimal and constant-quotient orders of the
/// connected-etale sequence. Constant atoms are wholly etale; mu(n) splits
/// into its p-part (infinitesimal) and prime-to-p part; alpha and ss_e2 are
/// wholly infinitesimal.
std::pair<u64, u64> connected_etale_split(const GroupSchemeDesc& G);

bool is_infinitesimal(const GroupSchemeDesc& G);

/// Every atom mu(n), or constant_cyclic(n) with gcd(n,p)=1 (identified with
/// mu(n) over an algebraically closed field).
bool is_diagonalizable(const GroupSchemeDesc& G);

/// Cyclic orders n_i of the diagonalizable atoms, in factor order; the
/// character group is the product of Z/n_i.
std::vector<u64> character_moduli(const GroupSchemeDesc& G);

struct Character {
    std::vector<u64> residues;  // residue i taken mod n_i
};

bool operator==(const Character& a, const Character& b);
inline bool operator!=(const Character& a, const Character& b) { return !(a == b); }
bool operator<(const Character& a, const Character& b);

Character zero_character(const GroupSchemeDesc& G);
Character add_characters(const GroupSchemeDesc& G, const Character& a, const Character& b);
Character negate_character(const GroupSchemeDesc& G, const Character& a);
std::string character_str(const Character& a);

/// All |G| characters in lexicographic residue order (first residue most
/// significant). Throws NotDiagonalizable for groups with alpha or ss_e2
/// factors or constant factors of order divisible by p.
std::vector<Character> characters(const GroupSchemeDesc& G);

/// A cyclic order-n quotient of the character lattice: lambda |-> sum w_i
/// lambda_i (mod n). Encodes the restriction map to an order-n cyclic
/// stabilizer whose chosen weight maps to 1.
struct CyclicRestriction {
    u64 n = 1;
    std::vector<u64> w;  // one entry per diagonalizable atom, each in [0, n)

    u64 apply(const Character& lambda) const;
};

/// Deterministic restriction map with phi(nu) = 1 mod n: among all group
/// homomorphisms X^*(G) -> Z/nZ sending nu to 1, the lexicographically
/// smallest coefficient tuple. Throws InvalidWeight when none exists (nu does
/// not restrict to a generator of any order-n cyclic quotient).
CyclicRestriction restriction_for(const GroupSchemeDesc& G, const Character& nu, u64 n);

/// The unique m in [1, n] with lambda = m nu on the order-n cyclic quotient;
/// m = n exactly when lambda restricts trivially (its contribution to the
/// weight formula then vanishes).
u64 m_of(const GroupSchemeDesc& G, const Character& lambda, const Character& nu, u64 n);

/// Group law of the supersingular E[2]: t (+) s = t + s + t^2 s^2 over a
/// truncated algebra in characteristic 2. Inputs must be nilpotent with
/// vanishing fourth power.
TruncElt e2_group_law(const TruncElt& t, const TruncElt& s);

std::string atom_str(const Atom& a);
std::string group_str(const GroupSchemeDesc& G);

}  // namespace isoell

#endif
