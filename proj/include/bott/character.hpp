#pragma once

#include <bott/errors.hpp>

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bott {

// Character of the diagonal torus acting on coordinates, kept as the
// exponent vector of a Laurent monomial in lambda_0..lambda_{vars-1}.
struct Character {
    std::vector<int> exps;

    Character() = default;
    explicit Character(std::vector<int> e) : exps(std::move(e)) {}

    static Character one(std::size_t vars) { return Character(std::vector<int>(vars, 0)); }

    static Character unit(std::size_t vars, std::size_t i, int e = 1) {
        std::vector<int> v(vars, 0);
        assert(i < vars);
        v[i] = e;
        return Character(std::move(v));
    }

    std::size_t vars() const { return exps.size(); }

    bool trivial() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    Character operator*(const Character& o) const {
        assert(vars() == o.vars());
        Character r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    Character inv() const {
        Character r(*this);
        for (int& e : r.exps) e = -e;
        return r;
    }

    auto operator<=>(const Character&) const = default;
};

inline std::string to_string(const Character& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.exps.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.exps[i]);
    }
    return s + ")";
}

// long carries every weight we meet; gmpxx has native operator support for it.
using Weight = long;
using WeightVector = std::vector<Weight>;
using WeightMultiset = std::vector<Weight>;

inline Weight weight_of(const Character& c, const WeightVector& w) {
    assert(c.vars() == w.size());
    Weight s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<Weight>(c.exps[i]) * w[i];
    return s;
}

// Formal Z-linear combination of characters.  Terms with multiplicity zero
// are dropped as soon as they appear, so equality is plain map equality.
class VirtualRep {
  public:
    using Terms = std::map<Character, long long>;

    VirtualRep() = default;
    explicit VirtualRep(const Character& c) { add(c, 1); }

    static VirtualRep zero() { return {}; }

    void add(const Character& c, long long mult) {
        if (mult == 0) return;
        auto [it, inserted] = terms_.try_emplace(c, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VirtualRep& operator+=(const VirtualRep& o) {
        for (const auto& [c, m] : o.terms_) add(c, m);
        return *this;
    }
    VirtualRep& operator-=(const VirtualRep& o) {
        for (const auto& [c, m] : o.terms_) add(c, -m);
        return *this;
    }
    friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
    friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }

    friend VirtualRep operator*(const VirtualRep& a, const VirtualRep& b) {
        VirtualRep r;
        for (const auto& [ca, ma] : a.terms_)
            for (const auto& [cb, mb] : b.terms_) r.add(ca * cb, ma * mb);
        return r;
    }

    VirtualRep dual() const {
        VirtualRep r;
        for (const auto& [c, m] : terms_) r.terms_.emplace(c.inv(), m);
        return r;
    }

    long long dim() const {
        long long d = 0;
        for (const auto& [c, m] : terms_) d += m;
        return d;
    }

    long long multiplicity(const Character& c) const {
        auto it = terms_.find(c);
        return it == terms_.end() ? 0 : it->second;
    }

    bool honest() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second > 0; });
    }

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    bool operator==(const VirtualRep&) const = default;

  private:
    Terms terms_;
};

inline VirtualRep hom(const VirtualRep& a, const VirtualRep& b) { return a.dual() * b; }

// Fiber weights of an honest rep under lambda_i -> t^{w_i}, sorted ascending.
inline WeightMultiset specialize(const VirtualRep& rep, const WeightVector& w) {
    WeightMultiset ws;
    for (const auto& [c, m] : rep.terms()) {
        if (m < 0)
            throw NegativeMultiplicity("cannot specialize virtual term " + to_string(c) +
                                       " with multiplicity " + std::to_string(m));
        ws.insert(ws.end(), static_cast<std::size_t>(m), weight_of(c, w));
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

}  // namespace bott
