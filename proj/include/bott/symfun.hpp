#pragma once

#include <bott/character.hpp>
#include <bott/rational.hpp>

#include <cstddef>
#include <vector>

namespace bott {

// sigma_0..sigma_k of the multiset as exact integers, with sigma_0 = 1 and
// sigma_j = 0 for j beyond the multiset size.
inline std::vector<Int> elementary_symmetric_upto(const WeightMultiset& ws, std::size_t k) {
    std::vector<Int> s(k + 1, Int(0));
    s[0] = 1;
    std::size_t seen = 0;
    for (Weight w : ws) {
        ++seen;
        for (std::size_t j = std::min(k, seen); j >= 1; --j) s[j] += s[j - 1] * w;
    }
    return s;
}

inline Int elementary_symmetric(const WeightMultiset& ws, std::size_t k) {
    return elementary_symmetric_upto(ws, k)[k];
}

// sigma_top: the product of all weights.
inline Int weight_product(const WeightMultiset& ws) {
    Int p(1);
    for (Weight w : ws) p *= w;
    return p;
}

// Coefficients s_0..s_{up_to} of 1 / prod_i (1 + w_i z).  The total Chern
// series is monic, so the inverse has integer coefficients:
//   s_0 = 1,  s_k = -sum_{i=1..k} sigma_i s_{k-i}.
inline std::vector<Int> segre_coefficients(const WeightMultiset& ws, std::size_t up_to) {
    const std::vector<Int> c = elementary_symmetric_upto(ws, up_to);
    std::vector<Int> s(up_to + 1, Int(0));
    s[0] = 1;
    for (std::size_t k = 1; k <= up_to; ++k) {
        Int acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += c[i] * s[k - i];
        s[k] = -acc;
    }
    return s;
}

// Weights of E tensor L for a line rep L of weight t.
inline WeightMultiset twist(WeightMultiset ws, Weight t) {
    for (Weight& w : ws) w += t;
    return ws;
}

}  // namespace bott
