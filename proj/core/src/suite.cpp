#include "isoell/suite.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "isoell/families.hpp"
#include "isoell/pgl2.hpp"
#include "isoell/ramification.hpp"
#include "isoell/report_io.hpp"

namespace isoell {

void CheckResult::require(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "  ok " : "  FAIL ") + what);
    if (!ok) pass = false;
}

// ---------------------------------------------------------------- e2 law

CheckResult verify_e2_law() {
    CheckResult r;
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}, {"r", 4}});
    TruncElt t = A.gen("t"), s = A.gen("s"), rr = A.gen("r"), zero = A.zero();
    r.require(e2_group_law(t, zero) == t, "identity: t (+) 0 = t");
    r.require(e2_group_law(t, t) == zero, "2-torsion: t (+) t = 0");
    r.require(e2_group_law(t, s) == e2_group_law(s, t), "commutativity over generic (t, s)");
    TruncElt lhs = e2_group_law(e2_group_law(t, s), rr);
    TruncElt rhs = e2_group_law(t, e2_group_law(s, rr));
    r.require(lhs == rhs, "associativity over generic (t, s, r): both sides " + lhs.str());
    return r;
}

// ------------------------------------------------- supersingular embedding

namespace {

struct E2EmbeddingData {
    TruncatedAlgebra A;
    ProjMat2 scaled_product;
    ProjMat2 law_image;
    std::string rendered;
};

E2EmbeddingData supersingular_embedding_data() {
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}});
    TruncElt t = A.gen("t"), s = A.gen("s");
    ProjMat2 prod = proj_mul(embed_supersingular(t), embed_supersingular(s));
    TruncElt scale = A.one() + t * t * s;
    ProjMat2 scaled = proj_scale(prod, scale);
    ProjMat2 law = embed_supersingular(e2_group_law(t, s));
    std::string rendered = "[[" + law.a.str() + ", " + law.b.str() + "],\n [" + law.c.str() +
                           ", " + law.d.str() + "]]";
    return {A, scaled, law, rendered};
}

}  // namespace

CheckResult verify_embed_supersingular() {
    CheckResult r;
    E2EmbeddingData d = supersingular_embedding_data();
    TruncElt t = d.A.gen("t"), s = d.A.gen("s");
    r.require(embed_supersingular(d.A.zero()).a == d.A.one() &&
                  proj_equal(embed_supersingular(d.A.zero()), proj_identity(d.A)),
              "t = 0 maps to the identity");
    {
        // the raw product, before scaling:
        // [[1 + t^2 s, s^2 + t^2 + t^2 s^3], [t + s + s t^3, t s^2 + 1 + t^3 + s^3 + t^3 s^3]]
        ProjMat2 prod = proj_mul(embed_supersingular(t), embed_supersingular(s));
        TruncElt one = d.A.one();
        bool raw = prod.a == one + t * t * s &&
                   prod.b == s * s + t * t + t * t * s * s * s &&
                   prod.c == t + s + s * t * t * t &&
                   prod.d == t * s * s + one + t * t * t + s * s * s +
                                 t * t * t * s * s * s;
        r.require(raw, "the unscaled product has the expected entries");
    }
    // the common reduced matrix, entry by entry
    TruncElt one = d.A.one();
    TruncElt b_expect = d.A.reduce(t.poly * t.poly + s.poly * s.poly);
    TruncElt c_expect = e2_group_law(t, s);
    TruncElt d_expect =
        d.A.reduce(one.poly + t.poly.pow(3) + s.poly * t.poly * t.poly + s.poly * s.poly * t.poly +
                   s.poly.pow(3));
    bool entries = d.scaled_product.a == one && d.scaled_product.b == b_expect &&
                   d.scaled_product.c == c_expect && d.scaled_product.d == d_expect;
    r.require(entries, "product scaled by 1 + t^2 s equals the group-law image exactly");
    bool law_match = d.law_image.a == one && d.law_image.b == b_expect &&
                     d.law_image.c == c_expect && d.law_image.d == d_expect;
    r.require(law_match, "embedding of t (+) s has the same entries");
    r.require(proj_equal(d.scaled_product, d.law_image), "projective equality of both routes");
    r.require(proj_equal(proj_mul(embed_supersingular(t), embed_supersingular(t)),
                         proj_identity(d.A)),
              "each point is 2-torsion in PGL_2");
    r.note("common reduced matrix:");
    std::istringstream is(d.rendered);
    std::string line;
    while (std::getline(is, line)) r.note(line);
    return r;
}

// ----------------------------------------------------- ordinary embedding

namespace {

struct OrdinaryElement {
    int eps;
    bool generic;  // parameter: 1 or the generic mu_2 point
};

TruncElt ordinary_param(const TruncatedAlgebra& A, const OrdinaryElement& e, const TruncElt& t) {
    return e.generic ? t : A.one();
}

}  // namespace

CheckResult verify_embed_ordinary() {
    CheckResult r;
    TruncatedAlgebra A(2, {{"u", 2}, {"v", 2}});
    TruncElt t = A.one() + A.gen("u");
    TruncElt s = A.one() + A.gen("v");
    r.require(t * t == A.one() && s * s == A.one(), "generic mu_2 points square to 1");

    r.require(proj_equal(embed_ordinary(0, A.one()), proj_identity(A)),
              "(eps = 0, t = 1) maps to the identity");
    ProjMat2 m10 = embed_ordinary(1, t);
    r.require(m10.a.is_zero() && m10.b == t && m10.c == A.one() && m10.d.is_zero(),
              "(eps = 1, t) is the matrix [[0, t], [1, 0]]");
    r.require(proj_equal(make_proj_mat(A.zero(), t, A.one(), A.zero()),
                         make_proj_mat(A.zero(), A.one(), t, A.zero())),
              "[[0, t], [1, 0]] equals [[0, 1], [t, 0]] projectively");
    r.require(proj_equal(proj_mul(embed_ordinary(0, t), embed_ordinary(1, A.one())),
                         proj_mul(embed_ordinary(1, A.one()), embed_ordinary(0, t))),
              "the two generators commute projectively");

    const OrdinaryElement left[4] = {{0, false}, {0, true}, {1, false}, {1, true}};
    const OrdinaryElement right[4] = {{0, false}, {0, true}, {1, false}, {1, true}};
    int checked = 0;
    bool all = true;
    for (const auto& g : left) {
        for (const auto& h : right) {
            TruncElt tg = ordinary_param(A, g, t);
            TruncElt th = ordinary_param(A, h, s);
            ProjMat2 lhs = proj_mul(embed_ordinary(g.eps, tg), embed_ordinary(h.eps, th));
            ProjMat2 rhs = embed_ordinary((g.eps + h.eps) % 2, tg * th);
            all = all && proj_equal(lhs, rhs);
            ++checked;
        }
    }
    r.require(all && checked == 16, "homomorphism on all 16 element pairs with generic parameters");

    // injectivity on points: distinct parameters give distinct matrices
    r.require(!proj_equal(embed_ordinary(0, t), embed_ordinary(0, s)),
              "distinct mu_2 parameters stay distinct in PGL_2");
    return r;
}

CheckResult verify_fixed_points(u64 q_max) {
    CheckResult r;
    TruncatedAlgebra A = mu2_algebra();
    TruncElt t = mu2_generic_point(A);
    ProjMat2 diag = embed_ordinary(0, t);
    ProjMat2 swap = embed_ordinary(1, A.one());

    auto diag_only = scan_fixed_points({diag}, q_max);
    std::set<std::string> pts;
    for (const auto& fp : diag_only) pts.insert(fp.point);
    r.require(pts == std::set<std::string>{"[0:1]", "[1:0]"},
              "diag(t, 1) alone fixes exactly [1:0] and [0:1] for every q <= " +
                  std::to_string(q_max));

    auto joint = scan_fixed_points({diag, swap}, q_max);
    r.require(joint.empty(), "Z/2 x mu_2 acts on P^1 without fixed points (q <= " +
                                 std::to_string(q_max) + ")");

    TruncatedAlgebra B(2, {{"t", 4}});
    auto ss = scan_fixed_points({embed_supersingular(B.gen("t"))}, q_max);
    r.require(ss.empty(), "the supersingular E[2] acts on P^1 without fixed points (q <= " +
                              std::to_string(q_max) + ")");
    if (q_max < 8)
        r.note("reduced scan confidence: only fields of size up to " + std::to_string(q_max) +
               " were searched");
    return r;
}

// ----------------------------------------------------------- space family

namespace {

/// Random valid coefficient set over F_{p^2}: distinct, outside {0, 1, -1},
/// summing to zero.
SpaceCurveFamily random_space_family(u32 p, Rng& rng) {
    ExtFieldPtr F = ExtField::make(p, 2);
    u64 q = F->order();
    size_t need = p - 1;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::set<u64> chosen;
        std::vector<FqElt> a;
        FqElt sum = F->zero();
        while (a.size() + 1 < need) {
            FqElt cand = F->element(rng.below(q));
            if (cand.is_zero() || cand == F->one() || cand == -F->one()) continue;
            if (!chosen.insert(F->index_of(cand)).second) continue;
            a.push_back(cand);
            sum = sum + cand;
        }
        FqElt last = -sum;
        if (last.is_zero() || last == F->one() || last == -F->one()) continue;
        if (chosen.count(F->index_of(last))) continue;
        a.push_back(last);
        return make_space_family(p, 1, F, a);
    }
    throw Error("could not sample a space family (unreachable)");
}

}  // namespace

CheckResult verify_calcoli_families(u64 seed, unsigned samples_per_prime) {
    CheckResult r;
    for (u32 p : {5u, 7u, 11u}) {
        Rng rng(seed ^ (0x9e37u + p));
        bool all = true;
        for (unsigned i = 0; i < samples_per_prime && all; ++i)
            all = verify_calcoli(random_space_family(p, rng));
        r.require(all, "both singular-point identities hold on " +
                           std::to_string(samples_per_prime) + " random families over F_" +
                           std::to_string(p) + "^2");
    }
    // violating the sum-zero constraint makes the h_x(0,1) check fire
    ExtFieldPtr F = ExtField::make(5, 2);
    std::vector<FqElt> bad{F->from_int(2), F->from_int(3), F->generator(),
                           F->generator() * F->from_int(2)};
    SpaceProofChecks checks = space_proof_checks(5, 1, F, bad);
    r.require(!checks.hx_at_01.is_zero(),
              "h_x(0,1) != 0 fires when the coefficient sum is nonzero (got " +
                  checks.hx_at_01.str() + ")");
    SpaceProofChecks good = space_proof_checks(5, 1, F, concrete_space_family_p5().a);
    r.require(good.hx_at_01.is_zero(), "h_x(0,1) = 0 on the concrete family");
    return r;
}

// -------------------------------------------------- random surface inputs

SurfaceData random_diagonalizable_surface(Rng& rng) {
    const u32 primes[3] = {2, 3, 5};
    for (int attempt = 0; attempt < 400; ++attempt) {
        u32 p = primes[rng.below(3)];
        GroupSchemeDesc G{p, {}};
        u64 ord = 1;
        size_t num_atoms = 1 + rng.below(2);
        for (size_t i = 0; i < num_atoms; ++i) {
            u64 cap = 25 / ord;
            if (cap < 2) break;
            u64 n = 2 + rng.below(cap - 1);
            if (rng.below(4) == 0 && n % p != 0)
                G.factors.push_back(Atom::constant(n));
            else
                G.factors.push_back(Atom::mu(n));
            ord *= n;
        }
        if (G.factors.empty()) continue;

        SurfaceData d;
        d.p = p;
        d.group = G;
        d.base_genus = rng.below(4);
        d.hom_rank = rng.below(4);
        d.x_hint = XHint::unknown;

        auto moduli = character_moduli(G);
        u64 expo = 1;
        for (u64 n : moduli) expo = std::lcm(expo, n);
        std::vector<u64> divisors;
        for (u64 dd = 2; dd <= expo; ++dd)
            if (expo % dd == 0) divisors.push_back(dd);
        if (divisors.empty()) continue;

        size_t pairs = rng.below(4);  // up to 3 pairs = 6 orbits
        if (is_infinitesimal(G) && d.base_genus == 0 && pairs == 0) pairs = 1;
        bool ok = true;
        auto chars = characters(G);
        for (size_t i = 0; i < pairs && ok; ++i) {
            u64 n = divisors[rng.below(divisors.size())];
            // find a weight restricting to a generator, starting from a random offset
            size_t offset = rng.below(chars.size());
            bool found = false;
            for (size_t j = 0; j < chars.size() && !found; ++j) {
                const Character& nu = chars[(offset + j) % chars.size()];
                try {
                    restriction_for(G, nu, n);
                } catch (const InvalidWeight&) {
                    continue;
                }
                d.orbits.push_back(OrbitDatum{n, nu, "o" + std::to_string(2 * i)});
                d.orbits.push_back(
                    OrbitDatum{n, negate_character(G, nu), "o" + std::to_string(2 * i + 1)});
                found = true;
            }
            ok = found;
        }
        if (!ok) continue;

        try {
            validate(d);
            for (const Character& lam : characters(G)) (void)weight_space_dim(lam, d);
        } catch (const Error&) {
            continue;
        }
        return d;
    }
    // deterministic fallback: mu_p on P^1 with two opposite weights
    SurfaceData d;
    d.p = 5;
    d.group = GroupSchemeDesc{5, {Atom::mu(5)}};
    d.base_genus = 0;
    d.orbits = {OrbitDatum{5, Character{{1}}, "o0"}, OrbitDatum{5, Character{{4}}, "o1"}};
    return d;
}

// -------------------------------------------------------------- criteria

namespace {

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ok = true;
    return ss.str();
}

void golden_check(CheckResult& r, const SuiteConfig& cfg, const std::string& name,
                  const std::string& actual) {
    if (cfg.golden_dir.empty()) {
        r.require(false, "golden file " + name + ": no golden directory configured");
        return;
    }
    bool ok = false;
    std::string expected = read_file(cfg.golden_dir + "/" + name, ok);
    if (!ok) {
        r.require(false, "golden file " + name + " is missing");
        return;
    }
    std::string diff = golden_diff(expected, actual);
    if (diff.empty()) {
        r.require(true, "golden file " + name + " matches");
    } else {
        r.require(false, "golden file " + name + " differs:");
        std::istringstream is(diff);
        std::string line;
        while (std::getline(is, line)) r.note(line);
    }
}

SurfaceData mu_p_multiplication(u32 p) {
    SurfaceData d;
    d.p = p;
    d.group = GroupSchemeDesc{p, {Atom::mu(p)}};
    d.base_genus = 0;
    d.orbits = {OrbitDatum{p, Character{{1}}, "zero"},
                OrbitDatum{p, Character{{p - 1}}, "infinity"}};
    d.x_hint = XHint::rational_smooth;
    return d;
}

SurfaceData mu_n_orbits(u32 p, u64 n, u64 base_genus, size_t count, XHint hint) {
    SurfaceData d;
    d.p = p;
    d.group = GroupSchemeDesc{p, {Atom::mu(n)}};
    d.base_genus = base_genus;
    for (size_t i = 0; i < count; ++i)
        d.orbits.push_back(OrbitDatum{n, Character{{1}}, "o" + std::to_string(i)});
    d.x_hint = hint;
    return d;
}

CriterionResult criterion_hurwitz(const SuiteConfig& cfg) {
    CriterionResult c{1, "hurwitz-degree-regression", false, {}};
    CheckResult r;
    for (u32 p : {2u, 3u, 5u, 7u})
        r.require(dualizing_degree(mu_p_multiplication(p)) == -2,
                  "mu_" + std::to_string(p) + " multiplication on P^1: deg omega_X = -2");
    r.require(dualizing_degree(mu_n_orbits(3, 3, 0, 3, XHint::rational_cuspidal)) == 0,
              "three order-3 fibers over P^1 in characteristic 3: deg omega_X = 0");

    // squarefree quartic over F_2: x y (x^2 + x y + y^2)
    MultiPoly x = MultiPoly::variable(2, "x"), y = MultiPoly::variable(2, "y");
    PlaneCurveFamily quartic = make_plane_family(2, 2, x * y * (x * x + x * y + y * y), 1);
    r.require(dualizing_degree(plane_family_to_surface(quartic)) == 0,
              "characteristic-2 quartic with mu_2: deg omega_X = 0");

    PlaneCurveFamily quintic = plane_family_from_roots(5, 1, {0, 1, 2, 3, 4});
    r.require(dualizing_degree(plane_family_to_surface(quintic)) == 10,
              "plane family p = 5, r = 1: deg omega_X = 10");

    SurfaceData space = space_family_to_surface(concrete_space_family_p5());
    r.require(dualizing_degree(space) == 20, "space family p = 5, n = 1: deg omega_X = 20");
    (void)cfg;
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_table(const SuiteConfig& cfg) {
    CriterionResult c{2, "classification-table-regression", false, {}};
    CheckResult r;
    struct Row {
        SurfaceData d;
        Kappa kappa;
        long long b1, b2;
        std::string label;
    };
    SurfaceData quasi = mu_n_orbits(3, 3, 0, 3, XHint::rational_cuspidal);
    SurfaceData hyper = mu_n_orbits(5, 2, 0, 4, XHint::elliptic_other);
    SurfaceData abelian = mu_n_orbits(5, 2, 1, 0, XHint::elliptic_translations);
    std::vector<Row> rows = {
        {mu_p_multiplication(5), Kappa::minus_infinity, 2, 2, "ruled"},
        {quasi, Kappa::zero, 2, 2, "quasi-hyperelliptic"},
        {hyper, Kappa::zero, 2, 2, "hyperelliptic"},
        {abelian, Kappa::zero, 4, 6, "abelian"},
        {mu_n_orbits(5, 5, 0, 5, XHint::higher), Kappa::one, 2, 2, "properly elliptic, g = 0"},
        {space_family_to_surface(concrete_space_family_p5()), Kappa::one, 4, 6,
         "properly elliptic, g = 1"},
        {mu_n_orbits(5, 2, 2, 0, XHint::higher), Kappa::one, 6, 10, "properly elliptic, g = 2"},
        {mu_n_orbits(3, 3, 3, 0, XHint::higher), Kappa::one, 8, 14, "properly elliptic, g = 3"},
    };
    for (const Row& row : rows) {
        InvariantReport rep = compute_report(row.d);
        bool ok = rep.kappa == row.kappa && rep.betti[1] == row.b1 && rep.betti[2] == row.b2;
        r.require(ok, row.label + ": (kappa, b1, b2) = (" + kappa_str(rep.kappa) + ", " +
                          std::to_string(rep.betti[1]) + ", " + std::to_string(rep.betti[2]) +
                          ")");
    }
    golden_check(r, cfg, "quasihyper_table.txt", report_to_table(compute_report(quasi)));
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_e2_law(const SuiteConfig& cfg) {
    CriterionResult c{3, "supersingular-e2-group-law", false, {}};
    CheckResult r = verify_e2_law();
    CheckResult emb = verify_embed_supersingular();
    r.pass = r.pass && emb.pass;
    r.details.insert(r.details.end(), emb.details.begin(), emb.details.end());
    golden_check(r, cfg, "computation_e2.txt", supersingular_embedding_data().rendered + "\n");
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_ordinary(const SuiteConfig& cfg) {
    CriterionResult c{4, "ordinary-e2-embedding", false, {}};
    CheckResult r = verify_embed_ordinary();
    CheckResult fp = verify_fixed_points(cfg.q_max_fixed_points);
    r.pass = r.pass && fp.pass;
    r.details.insert(r.details.end(), fp.details.begin(), fp.details.end());
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_weight_spaces(const SuiteConfig& cfg) {
    CriterionResult c{5, "weight-space-cross-check", false, {}};
    CheckResult r;
    Rng rng(cfg.seed * 1000003 + 5);
    const int kInstances = 60;
    bool all_sum = true, all_nonneg = true;
    for (int i = 0; i < kInstances; ++i) {
        SurfaceData d = random_diagonalizable_surface(rng);
        long long pa = arithmetic_genus(dualizing_degree(d));
        long long total = 0;
        for (const Character& lam : characters(d.group)) {
            long long h = weight_space_dim(lam, d);
            if (h < 0) all_nonneg = false;
            total += h;
        }
        if (total != pa) all_sum = false;
    }
    r.require(all_sum, "sum of weight-space dimensions equals deg(omega_X)/2 + 1 on " +
                           std::to_string(kInstances) + " random surfaces");
    r.require(all_nonneg, "every weight space is a non-negative integer");
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_chi(const SuiteConfig& cfg) {
    CriterionResult c{6, "chi-and-irregularity", false, {}};
    CheckResult r;
    Rng rng(cfg.seed * 1000003 + 6);
    bool ok = true, b1ok = true;
    const int kInstances = 60;
    for (int i = 0; i < kInstances; ++i) {
        SurfaceData d = random_diagonalizable_surface(rng);
        ChiIrregularity ci = chi_and_irregularity(d);
        long long g = static_cast<long long>(d.base_genus);
        if (!(ci.chi == 0 && ci.q == g + 1 && ci.h0_omega == g && ci.pic_reduced)) ok = false;
        if (betti_numbers(d.base_genus)[1] != 2 * ci.q) b1ok = false;
    }
    r.require(ok, "chi = 0, q = g(Y) + 1, h0(omega) = g(Y), Picard scheme reduced on " +
                      std::to_string(kInstances) + " random surfaces");
    r.require(b1ok, "b1 = 2q on the same surfaces");
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_wild(const SuiteConfig& cfg) {
    CriterionResult c{7, "wild-ramification", false, {}};
    CheckResult r;
    for (u32 p : {2u, 3u, 5u, 7u}) {
        LocalAction act = LocalAction::translation_at_infinity(p);
        bool all2 = true;
        for (u64 g = 1; g < p; ++g) all2 = all2 && local_valuation_jump(act, g) == 2;
        r.require(all2, "Z/" + std::to_string(p) + " translations: i(g) = 2 for every g != 0");
        long long a = artin_term(act);
        r.require(a == 2 * (static_cast<long long>(p) - 1),
                  "Artin term 2(p - 1) = " + std::to_string(a));
        r.require(hurwitz_wild(p, 0, {a}) == -2,
                  "wild Hurwitz over P^1 returns deg omega_{P^1} = -2");
    }
    bool tame_match = true;
    for (auto [p, n] : std::vector<std::pair<u32, u64>>{{3, 2}, {5, 2}, {5, 4}, {7, 2}, {7, 3},
                                                        {7, 6}, {11, 5}}) {
        LocalAction rot = LocalAction::tame_rotation(p, n, n);
        long long a = artin_term(rot);
        long long wild = hurwitz_wild(n, 0, {a, a});
        SurfaceData d = mu_n_orbits(p, n, 0, 2, XHint::rational_smooth);
        tame_match = tame_match && a == static_cast<long long>(n) - 1 &&
                     wild == dualizing_degree(d);
    }
    r.require(tame_match,
              "tame rotations match the diagonalizable Hurwitz degree on mu_n data");
    (void)cfg;
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_thresholds(const SuiteConfig& cfg) {
    CriterionResult c{8, "kodaira-one-thresholds", false, {}};
    CheckResult r;
    bool table_ok = true, witness_ok = true, bound_ok = true;
    for (u64 g : {0u, 1u, 2u}) {
        for (u64 N = 0; N <= 6; ++N) {
            for (u32 p : {2u, 3u, 5u, 7u}) {
                bool expected = g >= 2 || (g == 1 && N >= 1) ||
                                (g == 0 && (N >= 5 || (N >= 4 && p >= 3) || (N >= 3 && p >= 5)));
                bool got = kappa_one_sufficient(g, N, p, 1);
                if (got != expected) table_ok = false;
                if (g == 0) {
                    bool bound_positive = kappa_one_p1_bound(N, p, 1) > 0;
                    if (bound_positive != got) bound_ok = false;
                }
                if (got) {
                    SurfaceData d = mu_n_orbits(p, p, g, N, XHint::unknown);
                    if (kodaira_dimension(d) != Kappa::one) witness_ok = false;
                }
            }
        }
    }
    r.require(table_ok, "the three stated conditions match on the full grid");
    r.require(witness_ok, "kappa = 1 on a witness surface wherever the condition holds");
    r.require(bound_ok, "the P^1 branch fires exactly when p^{r-1}(p(N-2)-N) > 0");
    (void)cfg;
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_space_family(const SuiteConfig& cfg) {
    CriterionResult c{9, "space-family-identities", false, {}};
    CheckResult r = verify_calcoli_families(cfg.seed, 100);

    SpaceCurveFamily fam = concrete_space_family_p5();
    auto eqs = space_curve_equations(fam);
    auto singular = singular_scan(eqs, cfg.q_max_singular, space_coordinate_order());
    std::set<std::string> pts;
    for (const ProjPoint& P : singular) pts.insert(P.str());
    std::string found;
    for (const std::string& s : pts) found += (found.empty() ? "" : " ") + s;
    r.note("singular points found (q <= " + std::to_string(cfg.q_max_singular) + "): " + found);

    // alpha and beta from the defining equation: alpha^{p} = h(1,1),
    // beta^{p} = -h(1,-1); the p-th root is x -> x^{q/p} on F_q.
    MultiPolyQ h = space_h(fam);
    u64 q = fam.F->order(), pn = 5;
    FqElt alpha = h.eval({fam.F->one(), fam.F->one()}).pow(q / pn);
    FqElt beta = (-(h.eval({fam.F->one(), -fam.F->one()}))).pow(q / pn);
    std::string xprime = "(1:0:1:" + alpha.str() + ")";
    std::string xsecond = "(1:0:" + (-fam.F->one()).str() + ":" + beta.str() + ")";
    r.require(pts.count(xprime) == 1, "found the singular point " + xprime);
    r.require(pts.count(xsecond) == 1, "found the singular point " + xsecond);
    r.require(pts.count("(0:0:1:1)") == 0, "(0:0:1:1) reported smooth");
    if (pts.count("(0:0:1:1)") == 1)
        r.note("the gradient of the w-equation vanishes at (0:0:1:1) for every valid "
               "coefficient set: h_x(0,1) = sum a_i = 0 by the defining constraint and "
               "h(0,1) + z h_z(0,1) = p^n = 0 in F_p, so the Jacobian rank drops to 1 "
               "and the point is genuinely singular (local equation "
               "w'^5 = e_2 y^4 + O(y^5) on the curve)");
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

CriterionResult criterion_picard(const SuiteConfig& cfg) {
    CriterionResult c{10, "picard-rank-and-fibers", false, {}};
    CheckResult r;
    bool rational_ok = true, rank_ok = true, fiber_ok = true;
    Rng rng(cfg.seed * 1000003 + 10);
    const int kInstances = 40;
    for (int i = 0; i < kInstances; ++i) {
        SurfaceData d = random_diagonalizable_surface(rng);
        if (picard_rank(d) != 2 + static_cast<long long>(d.hom_rank)) rank_ok = false;
        for (const FiberInfo& f : fiber_multiplicities(d))
            if (!f.tame || f.pic0 != "E") fiber_ok = false;
    }
    SurfaceData ruled = mu_p_multiplication(5);
    rational_ok = rational_ok && picard_rank(ruled) == 2;
    PlaneCurveFamily cubic = plane_family_from_roots(3, 1, {0, 1, 2});
    rational_ok = rational_ok && picard_rank(plane_family_to_surface(cubic)) == 2;
    SurfaceData space = space_family_to_surface(concrete_space_family_p5(), 1);
    rank_ok = rank_ok && picard_rank(space) == 3;
    {
        auto fibers = fiber_multiplicities(space);
        fiber_ok = fiber_ok && fibers.size() == 5;
        for (const FiberInfo& f : fibers)
            fiber_ok = fiber_ok && f.multiplicity == 5 && f.tame && f.pic0 == "E";
    }
    r.require(rational_ok, "rational X always yields Picard rank 2");
    r.require(rank_ok, "Picard rank is 2 + hom_rank otherwise");
    r.require(fiber_ok, "every multiple fiber is tame with multiplicity n(x) and Pic0 = E");
    (void)cfg;
    c.pass = r.pass;
    c.details = std::move(r.details);
    return c;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteConfig& cfg) {
    switch (id) {
        case 1: return criterion_hurwitz(cfg);
        case 2: return criterion_table(cfg);
        case 3: return criterion_e2_law(cfg);
        case 4: return criterion_ordinary(cfg);
        case 5: return criterion_weight_spaces(cfg);
        case 6: return criterion_chi(cfg);
        case 7: return criterion_wild(cfg);
        case 8: return criterion_thresholds(cfg);
        case 9: return criterion_space_family(cfg);
        case 10: return criterion_picard(cfg);
        default: throw Error("criterion id out of range");
    }
}

std::vector<CriterionResult> run_all_criteria(const SuiteConfig& cfg) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, cfg));
    return out;
}

std::string format_scoreboard(const std::vector<CriterionResult>& results,
                              const SuiteConfig& cfg, bool verbose) {
    std::ostringstream os;
    os << "# acceptance suite (seed=" << cfg.seed << ", q_max_fixed_points="
       << cfg.q_max_fixed_points << ", q_max_singular=" << cfg.q_max_singular << ")\n";
    int passed = 0;
    for (const CriterionResult& c : results) {
        os << "[" << (c.id < 10 ? " " : "") << c.id << "] " << (c.pass ? "PASS" : "FAIL") << " "
           << c.name << "\n";
        if (verbose || !c.pass)
            for (const std::string& d : c.details) os << "      " << d << "\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << results.size() << " criteria passed\n";
    return os.str();
}

std::string golden_diff(const std::string& expected, const std::string& actual) {
    if (expected == actual) return {};
    std::istringstream ea(expected), aa(actual);
    std::string el, al, diff;
    size_t line = 0;
    while (true) {
        bool he = static_cast<bool>(std::getline(ea, el));
        bool ha = static_cast<bool>(std::getline(aa, al));
        if (!he && !ha) break;
        ++line;
        if (!he) el = "<end of golden>";
        if (!ha) al = "<end of output>";
        if (el != al) {
            diff += "line " + std::to_string(line) + ":\n";
            diff += "  - " + el + "\n";
            diff += "  + " + al + "\n";
        }
    }
    return diff.empty() ? "files differ in whitespace only\n" : diff;
}

}  // namespace isoell
