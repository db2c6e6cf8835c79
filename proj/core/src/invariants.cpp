#include "isoell/invariants.hpp"

#include <numeric>

namespace isoell {

std::string x_hint_str(XHint h) {
    switch (h) {
        case XHint::unknown: return "unknown";
        case XHint::rational_smooth: return "rational_smooth";
        case XHint::rational_cuspidal: return "rational_cuspidal";
        case XHint::elliptic_translations: return "elliptic_translations";
        case XHint::elliptic_other: return "elliptic_other";
        case XHint::higher: return "higher";
    }
    return "?";
}

std::string e_type_str(EType e) { return e == EType::ordinary ? "ordinary" : "supersingular"; }

std::string kappa_str(Kappa k) {
    switch (k) {
        case Kappa::minus_infinity: return "-inf";
        case Kappa::zero: return "0";
        case Kappa::one: return "1";
    }
    return "?";
}

void validate(const SurfaceData& d) {
    require_prime(d.p);
    if (d.group.p != d.p) throw InconsistentData("group prime differs from surface prime");
    validate(d.group);
    u64 g_order = order(d.group);
    bool diag = is_diagonalizable(d.group);
    for (const OrbitDatum& o : d.orbits) {
        if (o.stab_order < 2)
            throw InconsistentData("orbit " + o.label +
                                   ": free orbits are never listed (stabilizer order >= 2)");
        if (g_order % o.stab_order != 0)
            throw InconsistentData("orbit " + o.label + ": stabilizer order " +
                                   std::to_string(o.stab_order) + " does not divide |G| = " +
                                   std::to_string(g_order));
        if (diag) {
            if (!o.weight)
                throw InvalidWeight("orbit " + o.label +
                                    ": diagonalizable groups need an orbit weight");
            // throws InvalidWeight unless the weight restricts to a generator
            restriction_for(d.group, *o.weight, o.stab_order);
        }
    }
    // A mu_{p^r}-torsor over P^1 or A^1 would trivialize a p^r-torsion line
    // bundle, so a diagonalizable infinitesimal action over a genus-0 base has
    // at least two multiple fibers. Non-diagonalizable infinitesimal groups do
    // act freely on P^1 (the supersingular E[2] does), so they are exempt.
    if (diag && is_infinitesimal(d.group) && g_order > 1 && d.base_genus == 0 &&
        d.orbits.size() < 2)
        throw InconsistentData(
            "an infinitesimal diagonalizable group over a genus-0 base needs at least two "
            "multiple fibers; none or one is not realizable");
    if ((d.x_hint == XHint::rational_smooth || d.x_hint == XHint::rational_cuspidal) &&
        d.hom_rank != 0)
        throw InconsistentData("rational X forces hom_rank = 0");
}

long long dualizing_degree(const SurfaceData& d) {
    validate(d);
    if (!is_diagonalizable(d.group))
        throw UseWildModule("group " + group_str(d.group) +
                            " is not diagonalizable; supply local series and use the wild "
                            "Hurwitz formula");
    long long g_order = static_cast<long long>(order(d.group));
    long long deg = (2 * static_cast<long long>(d.base_genus) - 2) * g_order;
    for (const OrbitDatum& o : d.orbits)
        deg += g_order - g_order / static_cast<long long>(o.stab_order);
    return deg;
}

long long arithmetic_genus(long long deg_omega) {
    if (deg_omega % 2 != 0)
        throw InconsistentData("dualizing degree " + std::to_string(deg_omega) +
                               " is odd; orbit data is not realizable");
    return deg_omega / 2 + 1;
}

Kappa kodaira_dimension(const SurfaceData& d) {
    long long deg = dualizing_degree(d);
    if (deg < 0) return Kappa::minus_infinity;
    if (deg == 0) return Kappa::zero;
    return Kappa::one;
}

std::array<long long, 5> betti_numbers(u64 base_genus) {
    long long g = static_cast<long long>(base_genus);
    return {1, 2 + 2 * g, 2 + 4 * g, 2 + 2 * g, 1};
}

ChiIrregularity chi_and_irregularity(const SurfaceData& d) {
    validate(d);
    if (!is_diagonalizable(d.group))
        throw NotSupported("chi and irregularity are computed for diagonalizable groups only");
    long long g = static_cast<long long>(d.base_genus);
    return ChiIrregularity{0, g + 1, g, true};
}

long long weight_space_dim(const Character& lambda, const SurfaceData& d) {
    validate(d);
    if (!is_diagonalizable(d.group))
        throw NotSupported("weight spaces require a diagonalizable group");
    Character zero = zero_character(d.group);
    long long g = static_cast<long long>(d.base_genus);
    if (lambda == zero) return g;

    // g - 1 + sum (1 - m/n), accumulated exactly over a common denominator.
    long long L = 1;
    for (const OrbitDatum& o : d.orbits)
        L = std::lcm(L, static_cast<long long>(o.stab_order));
    long long numer = 0;  // sum of L (1 - m/n)
    for (const OrbitDatum& o : d.orbits) {
        long long n = static_cast<long long>(o.stab_order);
        long long m = static_cast<long long>(m_of(d.group, lambda, *o.weight, o.stab_order));
        numer += L - m * (L / n);
    }
    if (numer % L != 0)
        throw InconsistentData("weight space for lambda = " + character_str(lambda) +
                               " is not integral; orbit weights are not realizable");
    long long h = g - 1 + numer / L;
    if (h < 0)
        throw InconsistentData("weight space for lambda = " + character_str(lambda) +
                               " is negative; orbit weights are not realizable");
    return h;
}

std::vector<FiberInfo> fiber_multiplicities(const SurfaceData& d) {
    validate(d);
    if (!is_diagonalizable(d.group))
        throw NotSupported("fiber multiplicities are computed for diagonalizable groups only");
    std::vector<FiberInfo> out;
    for (const OrbitDatum& o : d.orbits) out.push_back(FiberInfo{o.stab_order, true, "E"});
    return out;
}

long long picard_rank(const SurfaceData& d) {
    validate(d);
    return 2 + static_cast<long long>(d.hom_rank);
}

long long kappa_one_p1_bound(u64 fiber_count, u32 p, unsigned r) {
    long long pr1 = 1;  // p^{r-1}
    for (unsigned i = 1; i < r; ++i) pr1 *= p;
    long long N = static_cast<long long>(fiber_count);
    return pr1 * (static_cast<long long>(p) * (N - 2) - N);
}

bool kappa_one_sufficient(u64 base_genus, u64 fiber_count, u32 p, unsigned r) {
    (void)r;
    if (base_genus >= 2) return true;
    if (base_genus == 1) return fiber_count >= 1;
    if (fiber_count >= 5) return true;
    if (fiber_count >= 4 && p >= 3) return true;
    if (fiber_count >= 3 && p >= 5) return true;
    return false;
}

namespace {

struct KappaInfo {
    Kappa kappa;
    long long deg;
    long long p_a;
    bool from_hint_only = false;
};

KappaInfo resolve_kappa(const SurfaceData& d, std::vector<std::string>& flags) {
    if (is_diagonalizable(d.group)) {
        long long deg = dualizing_degree(d);
        long long pa = arithmetic_genus(deg);
        Kappa k = deg < 0 ? Kappa::minus_infinity : (deg == 0 ? Kappa::zero : Kappa::one);
        if (deg == 0)
            flags.push_back("kappa = 0 takes the degree-zero dualizing sheaf to be trivial");
        return {k, deg, pa, false};
    }
    if (d.x_hint == XHint::rational_smooth) {
        // X = P^1: ruled case, deg omega = -2 independently of the group.
        return {Kappa::minus_infinity, -2, 0, true};
    }
    throw NotSupported(
        "cannot determine the Kodaira class: group " + group_str(d.group) +
        " is not diagonalizable and x_hint is not rational_smooth; use the wild Hurwitz "
        "formula for constant groups");
}

void cross_validate_hint(const SurfaceData& d, long long p_a) {
    switch (d.x_hint) {
        case XHint::unknown:
            return;
        case XHint::rational_smooth:
            if (p_a != 0)
                throw InconsistentData("x_hint rational_smooth needs p_a(X) = 0, got " +
                                       std::to_string(p_a));
            return;
        case XHint::rational_cuspidal:
            if (p_a != 1)
                throw InconsistentData("x_hint rational_cuspidal needs p_a(X) = 1, got " +
                                       std::to_string(p_a));
            if (d.p > 3)
                throw InconsistentData(
                    "quasi-hyperelliptic surfaces (cuspidal rational X) exist only in "
                    "characteristics 2 and 3");
            if (d.base_genus != 0)
                throw InconsistentData("cuspidal rational X fibers over P^1 (g(Y) = 0)");
            return;
        case XHint::elliptic_translations:
            if (p_a != 1)
                throw InconsistentData("x_hint elliptic_translations needs p_a(X) = 1, got " +
                                       std::to_string(p_a));
            if (d.base_genus != 1 || !d.orbits.empty())
                throw InconsistentData(
                    "a translation action is a torsor: g(Y) = 1 and no multiple fibers");
            return;
        case XHint::elliptic_other:
            if (p_a != 1)
                throw InconsistentData("x_hint elliptic_other needs p_a(X) = 1, got " +
                                       std::to_string(p_a));
            if (d.base_genus != 0)
                throw InconsistentData(
                    "an elliptic X with a non-translation action quotients to P^1 (g(Y) = 0)");
            return;
        case XHint::higher:
            if (p_a < 2)
                throw InconsistentData("x_hint higher needs p_a(X) >= 2, got " +
                                       std::to_string(p_a));
            return;
    }
}

}  // namespace

Classification classify(const SurfaceData& d) {
    validate(d);
    Classification out;
    KappaInfo ki = resolve_kappa(d, out.flags);
    cross_validate_hint(d, ki.p_a);

    if (ki.kappa == Kappa::minus_infinity) {
        out.class_row = "(Elliptic) ruled surface";
        out.x_class = "P^1";
        out.aut0 = "Elliptic curve";
        return out;
    }
    if (ki.kappa == Kappa::one) {
        out.class_row = "Properly elliptic surface";
        out.x_class = "Any other G-normal";
        out.aut0 = "Elliptic curve";
        return out;
    }

    // kappa = 0: X is an elliptic curve or a cuspidal rational curve.
    switch (d.x_hint) {
        case XHint::rational_cuspidal:
            out.class_row = "Quasi-hyperelliptic";
            out.x_class = "Rational with a cusp";
            out.aut0 = "Elliptic curve";
            return out;
        case XHint::elliptic_translations:
            out.class_row = "Abelian surface";
            out.x_class = "Elliptic curve";
            out.aut0 = "Abelian surface (S itself)";
            return out;
        case XHint::elliptic_other:
            out.class_row = "Hyperelliptic";
            out.x_class = "Elliptic curve";
            out.aut0 = "Elliptic curve";
            return out;
        case XHint::unknown: {
            if (d.base_genus == 1 && d.orbits.empty()) {
                out.class_row = "Abelian surface";
                out.x_class = "Elliptic curve";
                out.aut0 = "Abelian surface (S itself)";
                return out;
            }
            if (d.p <= 3) {
                out.class_row = "Hyperelliptic or Quasi-hyperelliptic";
                out.x_class = "Elliptic curve or rational with a cusp";
                out.aut0 = "Elliptic curve";
                out.flags.push_back(
                    "kappa = 0 in characteristic <= 3: orbit data alone cannot separate an "
                    "elliptic X from a cuspidal rational X");
                return out;
            }
            out.class_row = "Hyperelliptic";
            out.x_class = "Elliptic curve";
            out.aut0 = "Elliptic curve";
            return out;
        }
        case XHint::rational_smooth:
        case XHint::higher:
            throw InconsistentData("x_hint " + x_hint_str(d.x_hint) +
                                   " is incompatible with kappa = 0");
    }
    throw InconsistentData("unreachable classification state");
}

InvariantReport compute_report(const SurfaceData& d) {
    validate(d);
    InvariantReport rep;
    rep.base_genus = d.base_genus;

    Classification cls = classify(d);
    rep.class_row = cls.class_row;
    rep.x_class = cls.x_class;
    rep.aut0 = cls.aut0;
    rep.flags = cls.flags;

    KappaInfo ki = resolve_kappa(d, cls.flags);
    rep.deg_omega = ki.deg;
    rep.p_a = ki.p_a;
    rep.kappa = ki.kappa;

    rep.betti = betti_numbers(d.base_genus);
    rep.euler = rep.betti[0] - rep.betti[1] + rep.betti[2] - rep.betti[3] + rep.betti[4];
    rep.rho = picard_rank(d);

    if (is_diagonalizable(d.group)) {
        rep.chi_q = chi_and_irregularity(d);
        rep.h0_omega = rep.chi_q->h0_omega;
        rep.fibers = fiber_multiplicities(d);

        // Internal cross-check: the weight spaces must sum to p_a(X).
        long long total = 0;
        bool trivial_restriction_seen = false;
        Character zero = zero_character(d.group);
        for (const Character& lam : characters(d.group)) {
            total += weight_space_dim(lam, d);
            if (!(lam == zero))
                for (const OrbitDatum& o : d.orbits)
                    if (m_of(d.group, lam, *o.weight, o.stab_order) == o.stab_order)
                        trivial_restriction_seen = true;
        }
        if (total != rep.p_a)
            throw InconsistentData(
                "weight spaces sum to " + std::to_string(total) + " but p_a(X) = " +
                std::to_string(rep.p_a) + "; orbit weights are not realizable");
        if (trivial_restriction_seen)
            rep.flags.push_back(
                "some nonzero weight restricts trivially on an orbit; its contribution is "
                "counted as zero (m = n convention)");
    } else {
        rep.flags.push_back(
            "non-diagonalizable group: chi, irregularity, weight spaces and fiber structure "
            "are not computed");
    }
    return rep;
}

}  // namespace isoell
