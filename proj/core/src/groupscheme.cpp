#include "isoell/groupscheme.hpp"

#include <numeric>

namespace isoell {

namespace {
constexpr u64 kAtomOrderLimit = 1u << 16;
constexpr u64 kEnumerationLimit = 1u << 20;
}  // namespace

bool operator==(const Atom& a, const Atom& b) {
    return a.kind == b.kind && a.n == b.n && a.r == b.r;
}

bool operator==(const GroupSchemeDesc& a, const GroupSchemeDesc& b) {
    return a.p == b.p && a.factors == b.factors;
}

void validate(const GroupSchemeDesc& G) {
    require_prime(G.p);
    for (const Atom& a : G.factors) {
        switch (a.kind) {
            case AtomKind::constant_cyclic:
            case AtomKind::mu:
                if (a.n == 0) throw InvalidDescriptor("cyclic atom of order zero");
                if (a.n > kAtomOrderLimit) throw InvalidDescriptor("atom order above 2^16");
                break;
            case AtomKind::alpha:
                if (a.r == 0) throw InvalidDescriptor("alpha atom needs r >= 1");
                if (a.r > 16 || atom_order(a, G.p) > kAtomOrderLimit)
                    throw InvalidDescriptor("atom order above 2^16");
                break;
            case AtomKind::ss_e2:
                if (G.p != 2)
                    throw InvalidDescriptor("supersingular E[2] atom requires p = 2");
                break;
        }
    }
}

u64 atom_order(const Atom& a, u32 p) {
    switch (a.kind) {
        case AtomKind::constant_cyclic:
        case AtomKind::mu:
            return a.n;
        case AtomKind::alpha: {
            u64 o = 1;
            for (unsigned i = 0; i < a.r; ++i) o *= p;
            return o;
        }
        case AtomKind::ss_e2:
            return 4;
    }
    return 0;
}

u64 order(const GroupSchemeDesc& G) {
    validate(G);
    u64 o = 1;
    for (const Atom& a : G.factors) o *= atom_order(a, G.p);
    return o;
}

std::pair<u64, u64> connected_etale_split(const GroupSchemeDesc& G) {
    validate(G);
    u64 inf = 1, et = 1;
    for (const Atom& a : G.factors) {
        switch (a.kind) {
            case AtomKind::constant_cyclic:
                et *= a.n;  // constant groups are etale
                break;
            case AtomKind::mu: {
                u64 ppart = 1, rest = a.n;
                while (rest % G.p == 0) {
                    ppart *= G.p;
                    rest /= G.p;
                }
                inf *= ppart;
                et *= rest;
                break;
            }
            case AtomKind::alpha:
                inf *= atom_order(a, G.p);
                break;
            case AtomKind::ss_e2:
                inf *= 4;
                break;
        }
    }
    return {inf, et};
}

bool is_infinitesimal(const GroupSchemeDesc& G) {
    auto [inf, et] = connected_etale_split(G);
    (void)inf;
    return et == 1;
}

bool is_diagonalizable(const GroupSchemeDesc& G) {
    validate(G);
    for (const Atom& a : G.factors) {
        if (a.kind == AtomKind::mu) continue;
        if (a.kind == AtomKind::constant_cyclic && a.n % G.p != 0) continue;
        return false;
    }
    return true;
}

std::vector<u64> character_moduli(const GroupSchemeDesc& G) {
    if (!is_diagonalizable(G))
        throw NotDiagonalizable("group " + group_str(G) + " is not diagonalizable");
    std::vector<u64> m;
    for (const Atom& a : G.factors) m.push_back(a.n);
    return m;
}

bool operator==(const Character& a, const Character& b) { return a.residues == b.residues; }
bool operator<(const Character& a, const Character& b) { return a.residues < b.residues; }

Character zero_character(const GroupSchemeDesc& G) {
    return Character{std::vector<u64>(character_moduli(G).size(), 0)};
}

Character add_characters(const GroupSchemeDesc& G, const Character& a, const Character& b) {
    auto m = character_moduli(G);
    if (a.residues.size() != m.size() || b.residues.size() != m.size())
        throw InvalidWeight("character arity does not match the group");
    Character r{std::vector<u64>(m.size())};
    for (size_t i = 0; i < m.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % m[i];
    return r;
}

Character negate_character(const GroupSchemeDesc& G, const Character& a) {
    auto m = character_moduli(G);
    Character r{std::vector<u64>(m.size())};
    for (size_t i = 0; i < m.size(); ++i)
        r.residues[i] = a.residues[i] == 0 ? 0 : m[i] - a.residues[i];
    return r;
}

std::string character_str(const Character& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.residues.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.residues[i]);
    }
    return s + ")";
}

std::vector<Character> characters(const GroupSchemeDesc& G) {
    auto m = character_moduli(G);
    u64 total = 1;
    for (u64 n : m) total *= n;
    if (total > kEnumerationLimit) throw Error("character enumeration too large");
    std::vector<Character> out;
    out.reserve(total);
    Character cur{std::vector<u64>(m.size(), 0)};
    for (u64 i = 0; i < total; ++i) {
        out.push_back(cur);
        for (size_t j = m.size(); j-- > 0;) {  // last residue fastest: lexicographic order
            if (++cur.residues[j] < m[j]) break;
            cur.residues[j] = 0;
        }
    }
    return out;
}

u64 CyclicRestriction::apply(const Character& lambda) const {
    if (lambda.residues.size() != w.size())
        throw InvalidWeight("character arity does not match the group");
    u64 acc = 0;
    for (size_t i = 0; i < w.size(); ++i) acc = (acc + lambda.residues[i] % n * w[i]) % n;
    return acc;
}

CyclicRestriction restriction_for(const GroupSchemeDesc& G, const Character& nu, u64 n) {
    auto m = character_moduli(G);
    if (n < 1) throw InvalidWeight("stabilizer order must be >= 1");
    if (nu.residues.size() != m.size())
        throw InvalidWeight("weight arity does not match the group");
    // Valid coefficient tuples: w_i a multiple of n/gcd(n, n_i), so that the
    // map is well defined on Z/n_i. Enumerate in lexicographic order and take
    // the first with sum w_i nu_i = 1 (mod n).
    size_t k = m.size();
    std::vector<u64> step(k), count(k);
    u64 combos = 1;
    for (size_t i = 0; i < k; ++i) {
        u64 g = std::gcd(n, m[i]);
        step[i] = n / g;
        count[i] = g;
        combos *= g;
        if (combos > kEnumerationLimit) throw Error("restriction search too large");
    }
    std::vector<u64> digits(k, 0);
    for (u64 idx = 0; idx < combos; ++idx) {
        CyclicRestriction phi{n, std::vector<u64>(k)};
        for (size_t i = 0; i < k; ++i) phi.w[i] = digits[i] * step[i];
        if (phi.apply(nu) == 1 % n) return phi;
        for (size_t i = k; i-- > 0;) {
            if (++digits[i] < count[i]) break;
            digits[i] = 0;
        }
    }
    throw InvalidWeight("weight " + character_str(nu) +
                        " does not restrict to a generator of an order-" + std::to_string(n) +
                        " cyclic stabilizer");
}

u64 m_of(const GroupSchemeDesc& G, const Character& lambda, const Character& nu, u64 n) {
    CyclicRestriction phi = restriction_for(G, nu, n);
    u64 r = phi.apply(lambda);
    return r == 0 ? n : r;
}

TruncElt e2_group_law(const TruncElt& t, const TruncElt& s) {
    check_same_algebra(t, s);
    if (t.alg.p() != 2) throw InvalidGroupPoint("E[2] group law lives in characteristic 2");
    if (t.is_unit() || !t.power_vanishes(4))
        throw InvalidGroupPoint("point " + t.str() + " is not 4-step nilpotent");
    if (s.is_unit() || !s.power_vanishes(4))
        throw InvalidGroupPoint("point " + s.str() + " is not 4-step nilpotent");
    TruncElt ts = t * s;
    return t + s + ts * ts;
}

std::string atom_str(const Atom& a) {
    switch (a.kind) {
        case AtomKind::constant_cyclic:
            return "Z/" + std::to_string(a.n);
        case AtomKind::mu:
            return "mu_" + std::to_string(a.n);
        case AtomKind::alpha:
            return "alpha_p^" + std::to_string(a.r);
        case AtomKind::ss_e2:
            return "E[2]ss";
    }
    return "?";
}

std::string group_str(const GroupSchemeDesc& G) {
    if (G.factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < G.factors.size(); ++i) {
        if (i) s += " x ";
        s += atom_str(G.factors[i]);
    }
    return s;
}

}  // namespace isoell
