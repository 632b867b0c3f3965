#pragma once

#include <bott/character.hpp>
#include <bott/errors.hpp>
#include <bott/localize.hpp>
#include <bott/poly.hpp>
#include <bott/rational.hpp>
#include <bott/symfun.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Torus-fixed length-r subschemes of the plane.  A fixpoint is supported on
// the three coordinate points, a monomial ideal at each, so it is indexed by
// a triple of partitions with total weight r.
namespace bott::points {

using Partition = std::vector<int>;  // weakly decreasing positive parts

struct Tripartition {
    std::array<Partition, 3> b;
    std::string label;

    int weight() const {
        int r = 0;
        for (const auto& p : b)
            for (int part : p) r += part;
        return r;
    }
};

namespace detail {

inline void partitions_of(int k, std::vector<Partition>& out) {
    out.clear();
    Partition cur;
    // largest part first, descending lexicographic order
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
}

inline std::string partition_str(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

}  // namespace detail

inline std::vector<Tripartition> enumerate_tripartitions(int r) {
    if (r < 0) throw BadQuery("length must be nonnegative");
    std::vector<Tripartition> out;
    std::vector<Partition> p0, p1, p2;
    for (int k0 = 0; k0 <= r; ++k0)
        for (int k1 = 0; k1 + k0 <= r; ++k1) {
            const int k2 = r - k0 - k1;
            detail::partitions_of(k0, p0);
            detail::partitions_of(k1, p1);
            detail::partitions_of(k2, p2);
            for (const auto& a : p0)
                for (const auto& b : p1)
                    for (const auto& c : p2) {
                        Tripartition t;
                        t.b = {a, b, c};
                        t.label = "pts [" + detail::partition_str(a) + "|" +
                                  detail::partition_str(b) + "|" + detail::partition_str(c) + "]";
                        out.push_back(std::move(t));
                    }
        }
    return out;
}

using Triple = std::array<long, 3>;

// Exponent triples of the degree-n piece of the fixpoint's coordinate ring,
// with multiplicities.  Corner i contributes one triple per box (row, col)
// of its partition diagram: the entries at positions i+1, i+2 are the box,
// the entry at i makes the total n.  For n at least the length the three
// corner pieces are disjoint subsets of the lattice triangle; below that
// they may overlap or leave it, whence the multiset.
inline std::map<Triple, long> diagram(const Tripartition& B, long n) {
    std::map<Triple, long> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const Partition& p = B.b[i];
        for (std::size_t row = 0; row < p.size(); ++row)
            for (long col = 0; col < p[row]; ++col) {
                Triple t{};
                t[(i + 1) % 3] = static_cast<long>(row);
                t[(i + 2) % 3] = col;
                t[i] = n - static_cast<long>(row) - col;
                out[t] += 1;
            }
    }
    return out;
}

inline VirtualRep rep_E(const Tripartition& B, long n) {
    VirtualRep out;
    for (const auto& [t, m] : diagram(B, n))
        out.add(Character({static_cast<int>(t[0]), static_cast<int>(t[1]),
                           static_cast<int>(t[2])}),
                m);
    const int r = B.weight();
    if (out.dim() != r)
        throw RankMismatch("degree-" + std::to_string(n) + " piece at " + B.label + " has rank " +
                           std::to_string(out.dim()) + ", expected " + std::to_string(r));
    return out;
}

// The subscheme's ideal twists the tautological line rep by the total corner
// multiplicities.
inline Character rep_L(const Tripartition& B) {
    std::vector<int> e(3);
    for (std::size_t i = 0; i < 3; ++i) {
        int s = 0;
        for (int part : B.b[i]) s += part;
        e[i] = s;
    }
    return Character(std::move(e));
}

namespace detail {

inline VirtualRep degree_part(long k) {
    VirtualRep out;
    for (long a = 0; a <= k; ++a)
        for (long b = 0; b + a <= k; ++b)
            out.add(Character({static_cast<int>(a), static_cast<int>(b),
                               static_cast<int>(k - a - b)}),
                    1);
    return out;
}

using TermList = std::vector<std::pair<Character, long>>;

inline TermList to_terms(const VirtualRep& r) {
    return TermList(r.terms().begin(), r.terms().end());
}

inline void accumulate_hom(TermList& out, const TermList& A, const TermList& B,
                           const Character& pre, long sign) {
    for (const auto& [u, mu] : A)
        for (const auto& [v, mv] : B) out.emplace_back(u.inv() * v * pre, sign * mu * mv);
}

}  // namespace detail

// Degree-k piece of the ideal: everything in degree k away from the
// subscheme.  Honest once k is at least the length.
inline VirtualRep ideal_rep(const Tripartition& B, long k) {
    VirtualRep out = detail::degree_part(k) - rep_E(B, k);
    if (!out.honest())
        throw NegativeMultiplicity("ideal piece of degree " + std::to_string(k) + " at " +
                                   B.label + " is virtual");
    return out;
}

// Tangent space at the fixpoint, from the three-term resolution of the
// ideal evaluated in degrees aux-2, aux-1, aux.  Any aux >= length + 2
// gives the same rep; the default takes the smallest such value.
inline VirtualRep tangent_rep(const Tripartition& B, long aux = -1) {
    const int r = B.weight();
    if (aux < 0) aux = r + 2;
    if (aux < r + 2)
        throw BadQuery("auxiliary degree " + std::to_string(aux) + " is below " +
                       std::to_string(r + 2));

    const detail::TermList I2 = detail::to_terms(ideal_rep(B, aux - 2));
    const detail::TermList I1 = detail::to_terms(ideal_rep(B, aux - 1));
    const detail::TermList I0 = detail::to_terms(ideal_rep(B, aux));

    detail::TermList acc;
    acc.reserve(I0.size() * I0.size() + I1.size() * I1.size() + I2.size() * I2.size() +
                3 * (I1.size() * I0.size() + I2.size() * I1.size() + I2.size() * I0.size()) + 1);
    acc.emplace_back(Character::one(3), 1);
    detail::accumulate_hom(acc, I0, I0, Character::one(3), -1);
    detail::accumulate_hom(acc, I1, I1, Character::one(3), -1);
    detail::accumulate_hom(acc, I2, I2, Character::one(3), -1);
    for (std::size_t i = 0; i < 3; ++i) {
        const Character pre = Character::unit(3, i, -1);
        detail::accumulate_hom(acc, I1, I0, pre, 1);
        detail::accumulate_hom(acc, I2, I1, pre, 1);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<int> e(3, 0);
        e[i] = -1;
        e[(i + 1) % 3] = -1;
        detail::accumulate_hom(acc, I2, I0, Character(std::move(e)), -1);
    }

    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    VirtualRep out;
    std::size_t i = 0;
    while (i < acc.size()) {
        long m = acc[i].second;
        std::size_t j = i + 1;
        while (j < acc.size() && acc[j].first == acc[i].first) m += acc[j++].second;
        if (m < 0)
            throw NegativeMultiplicity("tangent character " + to_string(acc[i].first) + " at " +
                                       B.label + " has multiplicity " + std::to_string(m));
        if (m > 0) out.add(acc[i].first, m);
        i = j;
    }

    if (out.dim() != 2LL * r) throw RankMismatch("tangent dimension at " + B.label);
    if (out.multiplicity(Character::one(3)) != 0)
        throw TrivialCharacterPresent("trivial tangent character at " + B.label);
    return out;
}

// Integral of the top Segre class s_2r of the twisted sections rep
// E_n tensor L^m over the length-r fixpoint locus.
struct SegreQuery {
    int r = 1;
    long n = 0;
    long m = 0;
};

struct SegreResult {
    Int value;
    std::size_t fixpoints = 0;
    WeightVector weights;
};

namespace detail {

struct BatchResult {
    std::vector<Int> values;
    std::size_t fixpoints = 0;
    WeightVector weights;
};

inline BatchResult segre_batch(int r, const std::vector<std::pair<long, long>>& queries,
                               const std::optional<WeightVector>& weights, std::uint64_t seed,
                               unsigned threads, const ProgressFn& progress = {}) {
    if (r < 0) throw BadQuery("length must be nonnegative");
    if (weights && weights->size() != 3) throw BadQuery("weight vector must have 3 entries");
    const auto fps =
        std::make_shared<const std::vector<Tripartition>>(enumerate_tripartitions(r));
    const std::size_t width = queries.size();

    return with_generic_weights(3, weights, seed, [&](const WeightVector& w) {
        MultiContributionFn producer = [fps, &queries, width, r, w](std::size_t idx) {
            const Tripartition& B = (*fps)[idx];
            MultiContribution c;
            c.label = B.label;
            c.tangent = specialize(tangent_rep(B), w);
            const Weight lw = weight_of(rep_L(B), w);
            c.numerators.reserve(width);
            for (const auto& [n, m] : queries) {
                const WeightMultiset ws = twist(specialize(rep_E(B, n), w), m * lw);
                c.numerators.emplace_back(segre_coefficients(ws, 2 * static_cast<std::size_t>(r))
                                              [2 * static_cast<std::size_t>(r)]);
            }
            return c;
        };
        MultiLocalizationResult res = integrate_many(fps->size(), width, producer, threads,
                                                     progress);
        BatchResult out;
        out.fixpoints = res.fixpoints;
        out.weights = w;
        out.values.reserve(width);
        for (const Rat& v : res.values) out.values.push_back(expect_integer(v));
        return out;
    });
}

}  // namespace detail

inline SegreResult segre_integral(const SegreQuery& q,
                                  const std::optional<WeightVector>& weights = {},
                                  std::uint64_t seed = 0, unsigned threads = 1,
                                  const ProgressFn& progress = {}) {
    auto batch = detail::segre_batch(q.r, {{q.n, q.m}}, weights, seed, threads, progress);
    return SegreResult{std::move(batch.values[0]), batch.fixpoints, std::move(batch.weights)};
}

// Degree of the locus of degree-n hypersurfaces that are sums of r powers of
// linear forms.  The untwisted Segre integral computes it whenever the locus
// has the expected dimension, which needs n >= r-1; smaller n still evaluate
// the integral when forced.
inline SegreResult powersum_degree(int r, long n, bool force = false,
                                   const std::optional<WeightVector>& weights = {},
                                   std::uint64_t seed = 0, unsigned threads = 1,
                                   const ProgressFn& progress = {}) {
    if (r < 1) throw BadQuery("power sum length must be positive");
    if (n < r - 1 && !force)
        throw OutOfValidityRange("power sum locus of length " + std::to_string(r) +
                                 " needs degree n >= " + std::to_string(r - 1) +
                                 "; got n = " + std::to_string(n));
    return segre_integral(SegreQuery{r, n, 0}, weights, seed, threads, progress);
}

// Degree of the locus of plane curves of degree n carrying a pencil of
// polar conics, via length n+1 subschemes and one twist by the ideal line.
inline SegreResult darboux_degree(long n, const std::optional<WeightVector>& weights = {},
                                  std::uint64_t seed = 0, unsigned threads = 1,
                                  const ProgressFn& progress = {}) {
    if (n < 1) throw BadQuery("curve degree must be positive");
    return segre_integral(SegreQuery{static_cast<int>(n + 1), -1, 1}, weights, seed, threads,
                          progress);
}

// The power sum degree is a polynomial in n of degree 2r; 2r+1 samples from
// the stable range n = r..3r pin it down exactly.
inline Poly powersum_polynomial(int r, const std::optional<WeightVector>& weights = {},
                                std::uint64_t seed = 0, unsigned threads = 1,
                                const ProgressFn& progress = {}) {
    if (r < 1) throw BadQuery("power sum length must be positive");
    std::vector<std::pair<long, long>> queries;
    for (long n = r; n <= 3L * r; ++n) queries.emplace_back(n, 0);
    auto batch = detail::segre_batch(r, queries, weights, seed, threads, progress);
    std::vector<std::pair<Rat, Rat>> pts;
    for (std::size_t i = 0; i < queries.size(); ++i)
        pts.emplace_back(Rat(queries[i].first), Rat(batch.values[i]));
    return lagrange_interpolate(pts);
}

// Same degree with the sections twisted m times by the ideal line: jointly
// polynomial in (n, m), recovered from a (2r+1) x (2r+1) sample grid.
inline Poly2 powersum_polynomial2(int r, const std::optional<WeightVector>& weights = {},
                                  std::uint64_t seed = 0, unsigned threads = 1,
                                  const ProgressFn& progress = {}) {
    if (r < 1) throw BadQuery("power sum length must be positive");
    std::vector<long> ns, ms;
    for (long n = r; n <= 3L * r; ++n) ns.push_back(n);
    for (long m = 0; m <= 2L * r; ++m) ms.push_back(m);
    std::vector<std::pair<long, long>> queries;
    for (long n : ns)
        for (long m : ms) queries.emplace_back(n, m);
    auto batch = detail::segre_batch(r, queries, weights, seed, threads, progress);

    std::vector<Rat> xs(ns.begin(), ns.end()), ys(ms.begin(), ms.end());
    std::vector<std::vector<Rat>> vals(ns.size(), std::vector<Rat>(ms.size()));
    std::size_t k = 0;
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = 0; j < ms.size(); ++j) vals[i][j] = Rat(batch.values[k++]);
    return lagrange_interpolate_grid(xs, ys, vals);
}

}  // namespace bott::points
