#pragma once

#include <bott/rational.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace bott {

// Dense polynomial over Q, coefficient c[i] on x^i, trailing zeros trimmed.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }

    Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    Rat eval(const Rat& x) const {
        Rat v(0);
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }

    Poly operator*(const Poly& o) const {
        if (zero() || o.zero()) return {};
        std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return Poly(std::move(r));
    }

    Poly scaled(const Rat& s) const {
        Poly r(*this);
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    bool operator==(const Poly&) const = default;
};

// Unique polynomial of degree < #points through the given points, by Newton's
// divided differences expanded back into the monomial basis.  Nodes must be
// pairwise distinct.
inline Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    const std::size_t n = pts.size();
    if (n == 0) return {};
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - level].first);

    // Horner over the Newton basis: p = d_{n-1}, then p = p*(x - x_i) + d_i.
    Poly p(std::vector<Rat>{dd[n - 1]});
    for (std::size_t i = n - 1; i-- > 0;) {
        Poly shift(std::vector<Rat>{-pts[i].first, Rat(1)});
        p = p * shift;
        p += Poly(std::vector<Rat>{dd[i]});
    }
    return p;
}

// Polynomial in two variables, coefficient c[i][j] on x^i y^j.
struct Poly2 {
    std::vector<std::vector<Rat>> c;

    Rat coeff(std::size_t i, std::size_t j) const {
        if (i >= c.size() || j >= c[i].size()) return Rat(0);
        return c[i][j];
    }

    Rat eval(const Rat& x, const Rat& y) const {
        Rat v(0), xp(1);
        for (const auto& row : c) {
            Rat rowv(0), yp(1);
            for (const auto& cij : row) {
                rowv += cij * yp;
                yp *= y;
            }
            v += rowv * xp;
            xp *= x;
        }
        return v;
    }
};

// Tensor-grid interpolation: values[i][j] = f(xs[i], ys[j]).  Interpolates
// each row in y, then each y-coefficient across x.
inline Poly2 lagrange_interpolate_grid(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                       const std::vector<std::vector<Rat>>& values) {
    std::vector<Poly> rows(xs.size());
    std::size_t ydeg = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<std::pair<Rat, Rat>> pts(ys.size());
        for (std::size_t j = 0; j < ys.size(); ++j) pts[j] = {ys[j], values[i][j]};
        rows[i] = lagrange_interpolate(pts);
        ydeg = std::max(ydeg, rows[i].c.size());
    }
    Poly2 out;
    std::vector<Poly> by_ypow(ydeg);
    for (std::size_t j = 0; j < ydeg; ++j) {
        std::vector<std::pair<Rat, Rat>> pts(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) pts[i] = {xs[i], rows[i].coeff(j)};
        by_ypow[j] = lagrange_interpolate(pts);
    }
    std::size_t xdeg = 0;
    for (const auto& p : by_ypow) xdeg = std::max(xdeg, p.c.size());
    out.c.assign(xdeg, std::vector<Rat>(ydeg, Rat(0)));
    for (std::size_t j = 0; j < ydeg; ++j)
        for (std::size_t i = 0; i < by_ypow[j].c.size(); ++i) out.c[i][j] = by_ypow[j].c[i];
    return out;
}

}  // namespace bott
