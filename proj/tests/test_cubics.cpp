#include <bott/cubics.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace bott;
using namespace bott::cubics;

namespace {

// All relabelings carrying the standard ideal of the fixpoint's type onto
// the fixpoint's generator set.
std::vector<std::array<int, 4>> stabilizing_perms(const CubicFixpoint& x) {
    const auto& gens = bott::cubics::detail::standard_generators()[static_cast<std::size_t>(x.type - 1)];
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        std::vector<Exp4> pg;
        for (const Exp4& g : gens) {
            Exp4 e{};
            for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g[static_cast<std::size_t>(i)];
            pg.push_back(e);
        }
        std::sort(pg.begin(), pg.end());
        if (pg == x.generators) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("one 3-space carries 130 fixpoints in the known type distribution") {
    auto fps = enumerate_fixpoints(3);
    REQUIRE(fps.size() == 130);
    std::map<int, int> hist;
    std::set<std::vector<Exp4>> distinct;
    std::set<std::string> labels;
    for (const auto& x : fps) {
        hist[x.type]++;
        distinct.insert(x.generators);
        labels.insert(x.label);
    }
    CHECK(hist == std::map<int, int>{{1, 12}, {2, 4}, {3, 24}, {4, 6}, {5, 12}, {6, 24}, {7, 24}, {8, 24}});
    CHECK(distinct.size() == 130);
    CHECK(labels.size() == 130);
}

TEST_CASE("fixpoint counts scale with the choice of 3-space") {
    CHECK(enumerate_fixpoints(4).size() == 650);
    CHECK(fixpoint_count(3) == 130);
    CHECK(fixpoint_count(5) == 1950);
    CHECK(fixpoint_count(6) == 4550);
    CHECK(fixpoint_count(7) == 9100);
    CHECK(fixpoint_count(8) == 16380);
    CHECK_THROWS_AS(enumerate_fixpoints(2), BadQuery);
}

TEST_CASE("representative permutation is the least one fixing the ideal") {
    for (const auto& x : enumerate_fixpoints(3)) {
        auto stab = stabilizing_perms(x);
        REQUIRE(!stab.empty());
        CHECK(*std::min_element(stab.begin(), stab.end()) == x.perm);
    }
}

TEST_CASE("sections of the first fixpoint on P^3") {
    auto fps = enumerate_fixpoints(3);
    const CubicFixpoint& x = fps[0];
    REQUIRE(x.type == 1);
    REQUIRE(x.perm == std::array<int, 4>{0, 1, 2, 3});

    // degree 1: generators are quadrics, so all four coordinates survive
    VirtualRep d1 = sections_rep(x, 3, 1);
    VirtualRep expect1;
    for (std::size_t i = 0; i < 4; ++i) expect1.add(Character::unit(4, i), 1);
    CHECK(d1 == expect1);

    // degree 2: ten monomials minus the three generators
    VirtualRep d2 = sections_rep(x, 3, 2);
    CHECK(d2.dim() == 7);
    CHECK(d2.multiplicity(Character({1, 1, 0, 0})) == 0);
    CHECK(d2.multiplicity(Character({0, 1, 1, 0})) == 0);
    CHECK(d2.multiplicity(Character({0, 0, 1, 1})) == 0);
    CHECK(d2.multiplicity(Character({2, 0, 0, 0})) == 1);
    CHECK(d2.multiplicity(Character({1, 0, 0, 1})) == 1);
}

TEST_CASE("every type has sections of rank 3d+1 for d up to 9") {
    for (int type = 1; type <= 8; ++type)
        for (int d = 1; d <= 9; ++d)
            CHECK(bott::cubics::detail::standard_sections(type, d).size() == static_cast<std::size_t>(3 * d + 1));
}

TEST_CASE("syzygy pairing of the triangle ideal doubles every character") {
    // type 2 has F = 2 l0l1l2, so Hom(F,E) x V arrives with even multiplicities
    VirtualRep E = bott::cubics::detail::rep_from({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
    VirtualRep F;
    F.add(Character({1, 1, 1, 0}), 2);
    VirtualRep V;
    for (std::size_t i = 0; i < 4; ++i) V.add(Character::unit(4, i), 1);
    VirtualRep h = hom(F, E) * V;
    CHECK(h.dim() == 24);
    for (const auto& [c, m] : h.terms()) CHECK(m % 2 == 0);
}

TEST_CASE("local tangent reps are honest, 12-dimensional, without invariants") {
    for (int type = 1; type <= 8; ++type) {
        VirtualRep t = bott::cubics::detail::standard_tangent(type);
        CHECK(t.dim() == 12);
        CHECK(t.honest());
        CHECK(t.multiplicity(Character::one(4)) == 0);
    }
}

TEST_CASE("tangent dimension is 4n at every fixpoint") {
    for (int n : {3, 4, 5}) {
        for (const auto& x : enumerate_fixpoints(n)) {
            VirtualRep t = tangent_rep(x, n);
            CHECK(t.dim() == 4 * n);
            CHECK(t.honest());
        }
    }
}

TEST_CASE("stabilizer routing leaves tangent and sections unchanged") {
    for (const auto& x : enumerate_fixpoints(3)) {
        VirtualRep ref_t = tangent_rep(x, 3);
        VirtualRep ref_s = sections_rep(x, 3, 2);
        for (const auto& p2 : stabilizing_perms(x)) {
            CubicFixpoint alt = x;
            alt.perm = p2;
            for (std::size_t k = 0; k < 4; ++k)
                alt.assign[k] = x.span[static_cast<std::size_t>(p2[k])];
            CHECK(tangent_rep(alt, 3) == ref_t);
            CHECK(sections_rep(alt, 3, 2) == ref_s);
        }
    }
}

TEST_CASE("gamma classes: constant, consistency, degree guard") {
    auto fps = enumerate_fixpoints(4);
    WeightVector w = default_weight_vector(5);
    const CubicFixpoint& x = fps[233];
    CHECK(gamma_value(x, 0, 4, w) == 3);

    // degree-1 class rebuilt from raw section weights
    Int a1 = elementary_symmetric(specialize(sections_rep(x, 4, 1), w), 1);
    Int b1 = elementary_symmetric(specialize(sections_rep(x, 4, 2), w), 1);
    Int c1 = elementary_symmetric(specialize(sections_rep(x, 4, 3), w), 1);
    Int d1 = elementary_symmetric(specialize(sections_rep(x, 4, 4), w), 1);
    CHECK(gamma_value(x, 1, 4, w) == 5 * a1 - 14 * b1 + 13 * c1 - 4 * d1);

    CHECK_THROWS_AS(gamma_value(x, 5, 4, w), UnsupportedGammaDegree);
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(validate(GWQuery{2, {5}, {}}), BadQuery);
    CHECK_THROWS_AS(validate(GWQuery{4, {5}, {1}}), BadQuery);   // codim 17 != 16
    CHECK_THROWS_AS(validate(GWQuery{8, {9}, {5}}), BadQuery);   // part out of range
    CHECK_THROWS_AS(validate(GWQuery{4, {0, 5}, {}}), BadQuery);
    CHECK_NOTHROW(validate(GWQuery{4, {5}, {}}));
    CHECK_NOTHROW(validate(GWQuery{8, {9}, {2, 1, 1}}));
}

TEST_CASE("classes of low degree integrate to zero over one 3-space") {
    auto fps = enumerate_fixpoints(3);
    WeightVector w = default_weight_vector(4);
    auto run = [&](auto numerator) {
        ContributionFn f = [&](std::size_t i) {
            const auto& x = fps[i];
            FixpointContribution c;
            c.label = x.label;
            c.tangent = specialize(tangent_rep(x, 3), w);
            c.numerator = numerator(x, c.tangent);
            return c;
        };
        return integrate(fps.size(), f, 2).value;
    };

    // Euler characteristic: top class of the tangent bundle
    CHECK(run([](const CubicFixpoint&, const WeightMultiset& t) {
              return Rat(weight_product(t));
          }) == 130);

    // constant and low powers of a hyperplane-type class vanish
    CHECK(run([](const CubicFixpoint&, const WeightMultiset&) { return Rat(1); }) == 0);
    CHECK(run([&](const CubicFixpoint& x, const WeightMultiset&) {
              return Rat(elementary_symmetric(specialize(sections_rep(x, 3, 1), w), 1));
          }) == 0);
    CHECK(run([&](const CubicFixpoint& x, const WeightMultiset&) {
              Int s1 = elementary_symmetric(specialize(sections_rep(x, 3, 1), w), 1);
              Int p(1);
              for (int k = 0; k < 11; ++k) p *= s1;
              return Rat(p);
          }) == 0);
}

TEST_CASE("lines on the quintic threefold counted with multiplicity") {
    GWQuery q{4, {5}, {}};
    auto res = gw_number(q, {}, 0, 4);
    CHECK(res.value == 317206375);
    CHECK(res.fixpoints == 650);
    CHECK(res.weights == WeightVector{4, 11, 17, 32, 55});

    // a different generic one-parameter subgroup gives the same count
    auto res2 = gw_number(q, WeightVector{3, 10, 1, 31, 57}, 0, 4);
    CHECK(res2.value == 317206375);
}
