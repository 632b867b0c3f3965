#pragma once

#include <bott/character.hpp>
#include <bott/errors.hpp>
#include <bott/rational.hpp>
#include <bott/symfun.hpp>

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace bott {

struct FixpointContribution {
    Rat numerator;           // value of the localized class at this fixpoint
    WeightMultiset tangent;  // weights of the tangent rep, all must be nonzero
    std::string label;
};

struct LocalizationResult {
    Rat value;
    std::size_t fixpoints = 0;
};

using ContributionFn = std::function<FixpointContribution(std::size_t)>;
using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// One tangent computation can feed several numerator classes at once; the
// batch variants below carry one value per class.
struct MultiContribution {
    std::vector<Rat> numerators;
    WeightMultiset tangent;
    std::string label;
};

struct MultiLocalizationResult {
    std::vector<Rat> values;
    std::size_t fixpoints = 0;
};

using MultiContributionFn = std::function<MultiContribution(std::size_t)>;

// Equivariant integrals as sums over fixpoints of numerator / sigma_top(T).
// Work is split into fixed blocks; each worker owns whole blocks and the
// partial sums are folded in block order, so the result (already independent
// of order in exact arithmetic) is produced identically for any thread count.
inline MultiLocalizationResult integrate_many(std::size_t count, std::size_t width,
                                              const MultiContributionFn& f, unsigned threads = 1,
                                              const ProgressFn& progress = {}) {
    constexpr std::size_t kBlock = 64;
    const std::size_t nblocks = (count + kBlock - 1) / kBlock;
    std::vector<std::vector<Rat>> partial(nblocks);

    unsigned nthreads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (nthreads == 0) nthreads = 1;
    if (nthreads > nblocks) nthreads = nblocks ? static_cast<unsigned>(nblocks) : 1;

    std::atomic<std::size_t> next_block{0}, done{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mx;

    auto work = [&]() {
        try {
            for (;;) {
                const std::size_t b = next_block.fetch_add(1);
                if (b >= nblocks || failed.load()) return;
                std::vector<Rat> acc(width, Rat(0));
                const std::size_t hi = std::min(count, (b + 1) * kBlock);
                for (std::size_t i = b * kBlock; i < hi; ++i) {
                    const MultiContribution c = f(i);
                    for (Weight w : c.tangent)
                        if (w == 0) throw ZeroTangentWeight(c.label);
                    const Int denom = weight_product(c.tangent);
                    for (std::size_t q = 0; q < width; ++q)
                        if (c.numerators[q] != 0)
                            acc[q] += make_rat(c.numerators[q].get_num(),
                                               c.numerators[q].get_den() * denom);
                }
                partial[b] = std::move(acc);
                const std::size_t d = done.fetch_add(hi - b * kBlock) + (hi - b * kBlock);
                if (progress) progress(d, count);
            }
        } catch (...) {
            std::scoped_lock lk(error_mx);
            if (!error) error = std::current_exception();
            failed.store(true);
        }
    };

    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    MultiLocalizationResult res;
    res.fixpoints = count;
    res.values.assign(width, Rat(0));
    for (auto& p : partial)
        for (std::size_t q = 0; q < p.size(); ++q) res.values[q] += p[q];
    return res;
}

inline LocalizationResult integrate(std::size_t count, const ContributionFn& f,
                                    unsigned threads = 1, const ProgressFn& progress = {}) {
    MultiContributionFn g = [&f](std::size_t i) {
        FixpointContribution c = f(i);
        return MultiContribution{{std::move(c.numerator)}, std::move(c.tangent),
                                 std::move(c.label)};
    };
    MultiLocalizationResult many = integrate_many(count, 1, g, threads, progress);
    return LocalizationResult{std::move(many.values[0]), many.fixpoints};
}

// Scan all fixpoints and fail on the first zero tangent weight.
inline void validate_weights(std::size_t count, const ContributionFn& f) {
    for (std::size_t i = 0; i < count; ++i) {
        const FixpointContribution c = f(i);
        for (Weight w : c.tangent)
            if (w == 0) throw ZeroTangentWeight(c.label);
    }
}

inline Int expect_integer(const Rat& value) {
    if (!is_integral(value)) throw NonIntegralResult(to_string(value));
    return value.get_num();
}

// Weight assignments lambda_i -> w_i.  Attempt 0 is a pinned choice known to
// be generic for every space this engine ships; later attempts draw fresh
// distinct values so a collision can be retried deterministically.
inline WeightVector default_weight_vector(std::size_t vars, unsigned attempt = 0,
                                          std::uint64_t seed = 0) {
    if (attempt == 0) {
        if (vars == 3) return {0, 1, 19};
        static constexpr Weight base[] = {4, 11, 17, 32, 55, 95, 160, 267, 441};
        if (vars <= std::size(base)) return WeightVector(base, base + vars);
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (seed * 1000003ULL + attempt * 7919ULL + vars));
    std::uniform_int_distribution<Weight> draw(1, 1'000'000);
    std::set<Weight> seen;
    WeightVector w;
    while (w.size() < vars) {
        Weight v = draw(rng);
        if (seen.insert(v).second) w.push_back(v);
    }
    return w;
}

// Run a computation that needs a generic weight vector.  Explicit weights are
// used as-is; otherwise the default is tried and degenerate choices retried
// with fresh deterministic draws.
template <class F>
auto with_generic_weights(std::size_t vars, const std::optional<WeightVector>& explicit_w,
                          std::uint64_t seed, F&& run) {
    if (explicit_w) return run(*explicit_w);
    constexpr unsigned kMaxAttempts = 16;
    for (unsigned attempt = 0;; ++attempt) {
        try {
            return run(default_weight_vector(vars, attempt, seed));
        } catch (const ZeroTangentWeight& e) {
            if (attempt + 1 >= kMaxAttempts)
                throw BottError("no generic weight vector found in " +
                                std::to_string(kMaxAttempts) + " attempts; last failure: " +
                                std::string(e.what()));
        }
    }
}

}  // namespace bott
