#include <bott/character.hpp>
#include <bott/symfun.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace bott;

namespace {

Character chi(std::vector<int> e) { return Character(std::move(e)); }

VirtualRep rep_of(std::initializer_list<std::pair<std::vector<int>, long long>> ts) {
    VirtualRep r;
    for (const auto& [e, m] : ts) r.add(Character(e), m);
    return r;
}

VirtualRep random_honest_rep(std::mt19937& rng, std::size_t vars, int max_terms) {
    std::uniform_int_distribution<int> exp(-3, 3), mult(1, 3), nterms(1, max_terms);
    VirtualRep r;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e(vars);
        for (auto& x : e) x = exp(rng);
        r.add(Character(std::move(e)), mult(rng));
    }
    return r;
}

// Independent sigma_k: sum over all k-subsets of the multiset.
Int sigma_brute(const WeightMultiset& ws, std::size_t k) {
    Int total(0);
    std::vector<std::size_t> idx(k);
    // iterate k-combinations of positions
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            Int p(1);
            for (std::size_t i : idx) p *= ws[i];
            total += p;
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= ws.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace

TEST_CASE("characters multiply by adding exponents") {
    Character a = chi({1, 0, -2});
    Character b = chi({0, 2, 1});
    CHECK((a * b) == chi({1, 2, -1}));
    CHECK(a.inv() == chi({-1, 0, 2}));
    CHECK((a * a.inv()).trivial());
    CHECK(Character::one(3).trivial());
    CHECK(Character::unit(4, 2) == chi({0, 0, 1, 0}));
}

TEST_CASE("virtual rep arithmetic cancels eagerly") {
    VirtualRep r(chi({1, 0}));
    VirtualRep s;
    s.add(chi({1, 0}), -1);
    CHECK((r + s).empty());
    CHECK((r + s).dim() == 0);

    // (l0 + l1) * l0 = l0^2 + l0 l1
    VirtualRep sum = rep_of({{{1, 0}, 1}, {{0, 1}, 1}});
    VirtualRep l0(chi({1, 0}));
    CHECK(sum * l0 == rep_of({{{2, 0}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("End(E) minus a trivial summand, E = l0l1 + l1l2 + l2l3") {
    VirtualRep E = rep_of({{{1, 1, 0, 0}, 1}, {{0, 1, 1, 0}, 1}, {{0, 0, 1, 1}, 1}});
    VirtualRep endE = hom(E, E);
    // 3x3 pairs: three trivial on the diagonal, six distinct off-diagonal.
    CHECK(endE.dim() == 9);
    CHECK(endE.term_count() == 7);
    CHECK(endE.multiplicity(Character::one(4)) == 3);

    VirtualRep reduced = endE - VirtualRep(Character::one(4));
    CHECK(reduced.dim() == 8);
    CHECK(reduced.term_count() == 7);
    CHECK(reduced.multiplicity(Character::one(4)) == 2);
    CHECK(reduced.honest());
}

TEST_CASE("hom of line characters divides") {
    VirtualRep l0(Character::unit(3, 0));
    VirtualRep l1(Character::unit(3, 1));
    CHECK(hom(l0, l1) == VirtualRep(chi({-1, 1, 0})));

    VirtualRep a(chi({2, -1, 3}));
    CHECK(hom(a, a) == VirtualRep(Character::one(3)));
}

TEST_CASE("hom(F, E) for a rank-2 by rank-3 pair expands to six characters") {
    // E = l0l1 + l1l2 + l2l3, F = l0l1l2 + l1l2l3: all six quotients distinct.
    VirtualRep E = rep_of({{{1, 1, 0, 0}, 1}, {{0, 1, 1, 0}, 1}, {{0, 0, 1, 1}, 1}});
    VirtualRep F = rep_of({{{1, 1, 1, 0}, 1}, {{0, 1, 1, 1}, 1}});
    VirtualRep h = hom(F, E);
    CHECK(h.dim() == 6);
    CHECK(h.term_count() == 6);
    CHECK(h == rep_of({{{0, 0, -1, 0}, 1},
                       {{-1, 0, 0, 0}, 1},
                       {{-1, -1, 0, 1}, 1},
                       {{1, 0, -1, -1}, 1},
                       {{0, 0, 0, -1}, 1},
                       {{0, -1, 0, 0}, 1}}));
}

TEST_CASE("dual and hom obey the usual identities") {
    std::mt19937 rng(20260816);
    for (int round = 0; round < 50; ++round) {
        VirtualRep a = random_honest_rep(rng, 4, 5);
        VirtualRep b = random_honest_rep(rng, 4, 5);
        CHECK(a.dual().dual() == a);
        CHECK(hom(a, b).dim() == a.dim() * b.dim());
        CHECK(hom(a, b).dual() == hom(b, a));
        CHECK((a + b).dual() == a.dual() + b.dual());
    }
}

TEST_CASE("specialize maps characters to integer weights") {
    VirtualRep sum = rep_of({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}});
    CHECK(specialize(sum, {0, 1, 19}) == WeightMultiset{0, 1});

    VirtualRep quot(chi({1, -1, 0}));
    CHECK(specialize(quot, {4, 11, 17}) == WeightMultiset{-7});

    VirtualRep virt;
    virt.add(chi({1, 0, 0}), -1);
    CHECK_THROWS_AS(specialize(virt, {0, 1, 19}), NegativeMultiplicity);
}

TEST_CASE("specialize turns tensor products into pairwise weight sums") {
    std::mt19937 rng(7);
    WeightVector w = {3, -5, 11, 2};
    for (int round = 0; round < 30; ++round) {
        VirtualRep a = random_honest_rep(rng, 4, 4);
        VirtualRep b = random_honest_rep(rng, 4, 4);
        WeightMultiset wa = specialize(a, w), wb = specialize(b, w);
        WeightMultiset expect;
        for (Weight x : wa)
            for (Weight y : wb) expect.push_back(x + y);
        std::sort(expect.begin(), expect.end());
        CHECK(specialize(a * b, w) == expect);
    }
}

TEST_CASE("elementary symmetric functions") {
    CHECK(elementary_symmetric({}, 0) == 1);
    CHECK(elementary_symmetric({1, 2, 3}, 0) == 1);
    CHECK(elementary_symmetric({1, 2, 3}, 1) == 6);
    CHECK(elementary_symmetric({1, 2, 3}, 2) == 11);
    CHECK(elementary_symmetric({1, 2, 3}, 3) == 6);
    CHECK(elementary_symmetric({1, 2, 3}, 4) == 0);
    CHECK(weight_product({-2, 3, 5}) == -30);
    CHECK(weight_product({}) == 1);
}

TEST_CASE("elementary symmetric agrees with subset sums and ignores order") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<Weight> wd(-6, 6);
    for (int round = 0; round < 20; ++round) {
        WeightMultiset ws(7);
        for (auto& w : ws) w = wd(rng);
        for (std::size_t k = 0; k <= ws.size(); ++k)
            CHECK(elementary_symmetric(ws, k) == sigma_brute(ws, k));
        WeightMultiset shuffled = ws;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(elementary_symmetric_upto(ws, 7) == elementary_symmetric_upto(shuffled, 7));
    }
}

TEST_CASE("segre coefficients invert the Chern series") {
    CHECK(segre_coefficients({}, 3) == std::vector<Int>{1, 0, 0, 0});
    // single weight a: alternating geometric series 1, -a, a^2, -a^3
    CHECK(segre_coefficients({3}, 3) == std::vector<Int>{1, -3, 9, -27});
    CHECK(segre_coefficients({1, 2}, 2) == std::vector<Int>{1, -3, 7});
}

TEST_CASE("chern times segre is one, any multiset") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<Weight> wd(-5, 5);
    for (int round = 0; round < 25; ++round) {
        WeightMultiset ws(6);
        for (auto& w : ws) w = wd(rng);
        const std::size_t upto = 9;
        auto c = elementary_symmetric_upto(ws, upto);
        auto s = segre_coefficients(ws, upto);
        for (std::size_t k = 1; k <= upto; ++k) {
            Int conv(0);
            for (std::size_t i = 0; i <= k; ++i) conv += c[i] * s[k - i];
            CHECK(conv == 0);
        }
    }
}

TEST_CASE("twisting shifts every weight") {
    CHECK(twist({0, 1}, 3) == WeightMultiset{3, 4});
    CHECK(twist({-2, 5, 5}, -5) == WeightMultiset{-7, 0, 0});
}
