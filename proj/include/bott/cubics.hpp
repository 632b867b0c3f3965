#pragma once

#include <bott/character.hpp>
#include <bott/errors.hpp>
#include <bott/localize.hpp>
#include <bott/rational.hpp>
#include <bott/symfun.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Torus-fixed twisted cubics in P^n.  Every fixpoint lies in a coordinate
// 3-space; inside it the curve is one of eight monomial ideals up to
// relabeling of the four coordinates.  Types 1-4 are determinantal nets of
// quadrics, types 5-8 are a singular plane cubic with an embedded point.
namespace bott::cubics {

using Exp4 = std::array<int, 4>;

namespace detail {

inline const std::array<std::vector<Exp4>, 8>& standard_generators() {
    static const std::array<std::vector<Exp4>, 8> gens = {{
        {{{1, 1, 0, 0}}, {{0, 1, 1, 0}}, {{0, 0, 1, 1}}},                  // (x0x1, x1x2, x2x3)
        {{{1, 1, 0, 0}}, {{0, 1, 1, 0}}, {{1, 0, 1, 0}}},                  // (x0x1, x1x2, x0x2)
        {{{1, 1, 0, 0}}, {{0, 0, 2, 0}}, {{1, 0, 1, 0}}},                  // (x0x1, x2^2, x0x2)
        {{{2, 0, 0, 0}}, {{1, 1, 0, 0}}, {{0, 2, 0, 0}}},                  // (x0^2, x0x1, x1^2)
        {{{2, 0, 0, 0}}, {{1, 1, 0, 0}}, {{1, 0, 1, 0}}, {{0, 1, 1, 1}}},  // ... + x1x2x3
        {{{2, 0, 0, 0}}, {{1, 1, 0, 0}}, {{1, 0, 1, 0}}, {{0, 1, 2, 0}}},  // ... + x1x2^2
        {{{2, 0, 0, 0}}, {{1, 1, 0, 0}}, {{1, 0, 1, 0}}, {{0, 0, 2, 1}}},  // ... + x2^2x3
        {{{2, 0, 0, 0}}, {{1, 1, 0, 0}}, {{1, 0, 1, 0}}, {{0, 0, 3, 0}}},  // ... + x2^3
    }};
    return gens;
}

// How many distinct ideals each type contributes inside one 3-space: the
// orbit sizes of S4 relabeling, 130 in total.
inline constexpr std::array<std::size_t, 8> kOrbitSizes = {12, 4, 24, 6, 12, 24, 24, 24};

inline Character local_char(const Exp4& e) {
    return Character(std::vector<int>(e.begin(), e.end()));
}

inline VirtualRep rep_from(std::initializer_list<Exp4> chars) {
    VirtualRep r;
    for (const Exp4& e : chars) r.add(local_char(e), 1);
    return r;
}

inline void check_tangent_shape(const VirtualRep& t, long long want_dim, const char* who) {
    if (!t.honest())
        throw NegativeMultiplicity(std::string(who) + ": tangent rep is not honest");
    if (t.dim() != want_dim)
        throw RankMismatch(std::string(who) + ": tangent dimension " + std::to_string(t.dim()) +
                           ", expected " + std::to_string(want_dim));
    if (t.multiplicity(Character::one(4)) != 0 && want_dim == 12)
        throw TrivialCharacterPresent(std::string(who) + ": trivial character in tangent rep");
}

// Tangent space of the 12-dimensional local family, in standard coordinates.
inline VirtualRep standard_tangent(int type) {
    VirtualRep all_vars;
    for (std::size_t i = 0; i < 4; ++i) all_vars.add(Character::unit(4, i), 1);

    VirtualRep t;
    if (type <= 4) {
        // Determinantal case: deformations of the net of quadrics E and its
        // syzygies F, minus the reparametrizations, plus the global scalar
        // counted twice on the right.
        static const std::array<std::pair<VirtualRep, VirtualRep>, 4> ef = {{
            {rep_from({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}),
             rep_from({{1, 1, 1, 0}, {0, 1, 1, 1}})},
            {rep_from({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}}),
             rep_from({{1, 1, 1, 0}, {1, 1, 1, 0}})},
            {rep_from({{1, 1, 0, 0}, {0, 0, 2, 0}, {1, 0, 1, 0}}),
             rep_from({{1, 1, 1, 0}, {1, 0, 2, 0}})},
            {rep_from({{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}}),
             rep_from({{1, 2, 0, 0}, {2, 1, 0, 0}})},
        }};
        const auto& [E, F] = ef[static_cast<std::size_t>(type - 1)];
        t = hom(F, E) * all_vars - hom(E, E) - hom(F, F);
        t.add(Character::one(4), 1);
    } else {
        // Plane cubic with an embedded point: the cubic moves inside the
        // plane (B lists the cubics through the double structure), the
        // plane and the point each move in P^3.
        static const std::array<Exp4, 4> mu = {{{0, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 2, 1}, {0, 0, 3, 0}}};
        const Character m = local_char(mu[static_cast<std::size_t>(type - 5)]);
        const VirtualRep A = rep_from(
            {{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}});
        const VirtualRep B = rep_from({{0, 3, 0, 0},
                                       {0, 2, 1, 0},
                                       {0, 2, 0, 1},
                                       {0, 1, 2, 0},
                                       {0, 1, 1, 1},
                                       {0, 0, 3, 0},
                                       {0, 0, 2, 1}});
        t = A + hom(VirtualRep(m), B - VirtualRep(m));
        t.add(m * local_char({1, 1, 1, 0}).inv(), 1);
    }
    check_tangent_shape(t, 12, "standard_tangent");
    return t;
}

struct LocalFixpoint {
    int type;                      // 1..8
    std::array<int, 4> perm;       // relabeling applied to the standard ideal
    std::vector<Exp4> generators;  // permuted generators, sorted
};

// The 130 distinct torus-fixed ideals inside one coordinate 3-space, ordered
// by type, then by the least relabeling realizing each ideal.
inline const std::vector<LocalFixpoint>& local_fixpoints() {
    static const std::vector<LocalFixpoint> fps = [] {
        std::vector<LocalFixpoint> out;
        for (int type = 1; type <= 8; ++type) {
            const auto& gens = standard_generators()[static_cast<std::size_t>(type - 1)];
            std::set<std::vector<Exp4>> seen;
            std::array<int, 4> perm = {0, 1, 2, 3};
            do {
                std::vector<Exp4> pg;
                pg.reserve(gens.size());
                for (const Exp4& g : gens) {
                    Exp4 e{};
                    for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g[static_cast<std::size_t>(i)];
                    pg.push_back(e);
                }
                std::sort(pg.begin(), pg.end());
                if (seen.insert(pg).second) out.push_back({type, perm, std::move(pg)});
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.size() != kOrbitSizes[static_cast<std::size_t>(type - 1)])
                throw RankMismatch("local fixpoint orbit of type " + std::to_string(type) +
                                   " has size " + std::to_string(seen.size()));
        }
        return out;
    }();
    return fps;
}

// Degree-d monomials in the four local variables outside the standard ideal.
inline std::vector<Exp4> standard_sections(int type, int d) {
    const auto& gens = standard_generators()[static_cast<std::size_t>(type - 1)];
    std::vector<Exp4> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c) {
                const Exp4 m = {a, b, c, d - a - b - c};
                const bool divisible = std::any_of(gens.begin(), gens.end(), [&](const Exp4& g) {
                    for (int i = 0; i < 4; ++i)
                        if (m[static_cast<std::size_t>(i)] < g[static_cast<std::size_t>(i)]) return false;
                    return true;
                });
                if (!divisible) out.push_back(m);
            }
    if (out.size() != static_cast<std::size_t>(3 * d + 1))
        throw RankMismatch("sections of type " + std::to_string(type) + " at degree " +
                           std::to_string(d) + ": got " + std::to_string(out.size()) +
                           ", expected " + std::to_string(3 * d + 1));
    return out;
}

}  // namespace detail

struct CubicFixpoint {
    std::array<int, 4> span;    // ambient coordinates of the 3-space, increasing
    int type;                   // 1..8
    std::array<int, 4> perm;    // relabeling from the standard ideal
    std::array<int, 4> assign;  // assign[k]: ambient variable playing standard x_k
    std::vector<Exp4> generators;  // span-local exponent vectors
    std::string label;
};

inline std::size_t fixpoint_count(int n) {
    return static_cast<std::size_t>(binomial(static_cast<unsigned long>(n + 1), 4).get_ui()) * 130;
}

inline std::vector<CubicFixpoint> enumerate_fixpoints(int n) {
    if (n < 3) throw BadQuery("ambient dimension must be at least 3");
    std::vector<std::array<int, 4>> spans;
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) spans.push_back({a, b, c, d});

    std::vector<CubicFixpoint> out;
    out.reserve(spans.size() * 130);
    for (const auto& span : spans) {
        for (const auto& lf : detail::local_fixpoints()) {
            CubicFixpoint x;
            x.span = span;
            x.type = lf.type;
            x.perm = lf.perm;
            for (std::size_t k = 0; k < 4; ++k)
                x.assign[k] = span[static_cast<std::size_t>(lf.perm[k])];
            x.generators = lf.generators;
            x.label = "cubic s=";
            for (std::size_t k = 0; k < 4; ++k)
                x.label += (k ? "," : "") + std::to_string(span[k]);
            x.label += " t=" + std::to_string(lf.type) + " p=";
            for (std::size_t k = 0; k < 4; ++k)
                x.label += (k ? "," : "") + std::to_string(lf.perm[k]);
            out.push_back(std::move(x));
        }
    }
    return out;
}

namespace detail {

inline Character route(const Exp4& local, const std::array<int, 4>& assign, std::size_t vars) {
    std::vector<int> e(vars, 0);
    for (std::size_t k = 0; k < 4; ++k) e[static_cast<std::size_t>(assign[k])] += local[k];
    return Character(std::move(e));
}

inline VirtualRep route(const VirtualRep& local, const std::array<int, 4>& assign,
                        std::size_t vars) {
    VirtualRep out;
    for (const auto& [c, m] : local.terms()) {
        Exp4 e = {c.exps[0], c.exps[1], c.exps[2], c.exps[3]};
        out.add(route(e, assign, vars), m);
    }
    return out;
}

}  // namespace detail

// Global sections of O(d) on the curve, as a rep on the ambient torus.
inline VirtualRep sections_rep(const CubicFixpoint& x, int n, int d) {
    if (d < 1) throw BadQuery("section degree must be positive");
    VirtualRep out;
    for (const Exp4& m : detail::standard_sections(x.type, d))
        out.add(detail::route(m, x.assign, static_cast<std::size_t>(n + 1)), 1);
    return out;
}

// Tangent space of the component of the Hilbert scheme at the fixpoint: the
// local 12-dimensional family plus the motion of its 3-space in P^n.
inline VirtualRep tangent_rep(const CubicFixpoint& x, int n) {
    static const std::array<VirtualRep, 8> local = [] {
        std::array<VirtualRep, 8> t;
        for (int type = 1; type <= 8; ++type)
            t[static_cast<std::size_t>(type - 1)] = detail::standard_tangent(type);
        return t;
    }();

    const std::size_t vars = static_cast<std::size_t>(n + 1);
    VirtualRep out = detail::route(local[static_cast<std::size_t>(x.type - 1)], x.assign, vars);
    std::array<bool, 32> in_span{};
    for (int s : x.span) in_span[static_cast<std::size_t>(s)] = true;
    for (int j : x.span)
        for (int i = 0; i <= n; ++i) {
            if (in_span[static_cast<std::size_t>(i)]) continue;
            std::vector<int> e(vars, 0);
            e[static_cast<std::size_t>(j)] = 1;
            e[static_cast<std::size_t>(i)] = -1;
            out.add(Character(std::move(e)), 1);
        }

    if (out.dim() != 4LL * n) throw RankMismatch("tangent dimension at " + x.label);
    if (out.multiplicity(Character::one(vars)) != 0)
        throw TrivialCharacterPresent("trivial tangent character at " + x.label);
    return out;
}

namespace detail {

// sigma_1..sigma_4 of the degree-1 sections and sigma_1, sigma_2 of the
// degree 2..4 sections feed the residual classes gamma_c below.
struct SectionSigmas {
    std::array<std::vector<Int>, 4> s;  // s[k-1] = sigmas of the degree-k sections
};

inline SectionSigmas section_sigmas(const CubicFixpoint& x, int n, const WeightVector& w) {
    SectionSigmas out;
    for (int k = 1; k <= 4; ++k) {
        const WeightMultiset ws = specialize(sections_rep(x, n, k), w);
        out.s[static_cast<std::size_t>(k - 1)] =
            elementary_symmetric_upto(ws, k == 1 ? 4 : 2);
    }
    return out;
}

inline Int gamma_poly(int c, const SectionSigmas& sig) {
    const auto& A = sig.s[0];
    const auto& B = sig.s[1];
    const auto& C = sig.s[2];
    const auto& D = sig.s[3];
    const Int &a1 = A[1], &a2 = A[2], &a3 = A[3], &a4 = A[4];
    const Int &b1 = B[1], &b2 = B[2];
    const Int &c1 = C[1], &c2 = C[2];
    const Int &d1 = D[1], &d2 = D[2];
    switch (c) {
        case 0:
            return Int(3);
        case 1:
            return 5 * a1 - 14 * b1 + 13 * c1 - 4 * d1;
        case 2:
            return 3 * a1 * a1 - 9 * a1 * b1 + 9 * a1 * c1 - 3 * a1 * d1 - 3 * b1 * b1 +
                   9 * b1 * c1 - 3 * b1 * d1 - 6 * c1 * c1 + 3 * c1 * d1 + a2 - 3 * b2 + 3 * c2 -
                   d2;
        case 3:
            return 3 * a1 * a1 * a1 - 9 * a1 * a1 * b1 + 9 * a1 * a1 * c1 - 3 * a1 * a1 * d1 -
                   3 * a1 * b1 * b1 + 9 * a1 * b1 * c1 - 3 * a1 * b1 * d1 - 6 * a1 * c1 * c1 +
                   3 * a1 * c1 * d1 - 4 * a1 * a2 - 3 * a1 * b2 + 3 * a1 * c2 - a1 * d2 +
                   14 * a2 * b1 - 13 * a2 * c1 + 4 * a2 * d1 + 3 * a3;
        case 4:
            return 3 * a1 * a1 * a1 * a1 - 9 * a1 * a1 * a1 * b1 + 9 * a1 * a1 * a1 * c1 -
                   3 * a1 * a1 * a1 * d1 - 3 * a1 * a1 * b1 * b1 + 9 * a1 * a1 * b1 * c1 -
                   3 * a1 * a1 * b1 * d1 - 6 * a1 * a1 * c1 * c1 + 3 * a1 * a1 * c1 * d1 -
                   7 * a1 * a1 * a2 - 3 * a1 * a1 * b2 + 3 * a1 * a1 * c2 - a1 * a1 * d2 +
                   23 * a1 * a2 * b1 - 22 * a1 * a2 * c1 + 7 * a1 * a2 * d1 + 3 * a2 * b1 * b1 -
                   9 * a2 * b1 * c1 + 3 * a2 * b1 * d1 + 6 * a2 * c1 * c1 - 3 * a2 * c1 * d1 +
                   8 * a1 * a3 - a2 * a2 + 3 * a2 * b2 - 3 * a2 * c2 + a2 * d2 - 14 * a3 * b1 +
                   13 * a3 * c1 - 4 * a3 * d1 - 3 * a4;
        default:
            throw UnsupportedGammaDegree("gamma_" + std::to_string(c) +
                                         " is outside the tabulated range 0..4");
    }
}

}  // namespace detail

// Residual intersection class of codimension c evaluated at the fixpoint.
inline Int gamma_value(const CubicFixpoint& x, int c, int n, const WeightVector& w) {
    if (c < 0 || c > 4)
        throw UnsupportedGammaDegree("gamma_" + std::to_string(c) +
                                     " is outside the tabulated range 0..4");
    return detail::gamma_poly(c, detail::section_sigmas(x, n, w));
}

// Count of rational curves: degrees lists the hypersurface degrees cutting
// the variety, partition the codimensions of the residual factors.
struct GWQuery {
    int n = 3;
    std::vector<int> degrees;
    std::vector<int> partition;
};

inline void validate(const GWQuery& q) {
    if (q.n < 3) throw BadQuery("ambient dimension must be at least 3");
    long total = 0;
    for (int d : q.degrees) {
        if (d < 1) throw BadQuery("hypersurface degrees must be positive");
        total += 3L * d + 1;
    }
    for (int c : q.partition) {
        if (c < 1 || c > 4)
            throw BadQuery("partition parts must lie in 1..4; gamma classes of codimension " +
                           std::to_string(c) + " are not tabulated");
        total += c;
    }
    if (total != 4L * q.n)
        throw BadQuery("degree bookkeeping failed: 4n = " + std::to_string(4L * q.n) +
                       " but the class has codimension " + std::to_string(total));
}

struct GWResult {
    Int value;
    std::size_t fixpoints = 0;
    WeightVector weights;
};

inline GWResult gw_number(const GWQuery& q, const std::optional<WeightVector>& weights = {},
                          std::uint64_t seed = 0, unsigned threads = 1,
                          const ProgressFn& progress = {}) {
    validate(q);
    if (weights && weights->size() != static_cast<std::size_t>(q.n + 1))
        throw BadQuery("weight vector must have " + std::to_string(q.n + 1) + " entries");

    const auto fps = std::make_shared<const std::vector<CubicFixpoint>>(enumerate_fixpoints(q.n));
    return with_generic_weights(
        static_cast<std::size_t>(q.n + 1), weights, seed, [&](const WeightVector& w) {
            ContributionFn producer = [fps, &q, w](std::size_t idx) {
                const CubicFixpoint& x = (*fps)[idx];
                FixpointContribution c;
                c.label = x.label;
                c.tangent = specialize(tangent_rep(x, q.n), w);
                Int num(1);
                for (int d : q.degrees)
                    num *= weight_product(specialize(sections_rep(x, q.n, d), w));
                if (!q.partition.empty()) {
                    const auto sig = detail::section_sigmas(x, q.n, w);
                    for (int c2 : q.partition) num *= detail::gamma_poly(c2, sig);
                }
                c.numerator = Rat(num);
                return c;
            };
            const LocalizationResult res = integrate(fps->size(), producer, threads, progress);
            return GWResult{expect_integer(res.value), res.fixpoints, w};
        });
}

}  // namespace bott::cubics
