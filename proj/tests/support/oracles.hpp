#pragma once

// Independent reference implementations used to check the library.

#include "generators.hpp"
#include "rankone/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <vector>

namespace rankone::testkit {

// A random product of linear factors (with multiplicity) and irreducible
// quadratics, together with an independently built squarefree version and
// its distinct real roots.
struct KnownRootPoly {
    UniPoly f;
    UniPoly squarefree;
    std::vector<mpq_class> roots;
};

inline KnownRootPoly random_known_root_poly(Gen& g, int max_degree) {
    KnownRootPoly b{UniPoly::constant(g.nonzero_rational(5, 3)), UniPoly::constant(1), {}};
    int degree = 0;
    while (degree < max_degree) {
        if (degree + 2 <= max_degree && g.coin(0.3)) {
            // t^2 + bt + c with b^2 < 4c
            mpq_class bb = g.rational(6, 3);
            mpq_class s = g.nonzero_rational(5, 4);
            mpq_class cc = bb * bb / 4 + s * s;
            UniPoly quad({cc, bb, mpq_class(1)});
            b.f = b.f * quad;
            if (divmod(b.squarefree, quad).second.degree() >= 0) b.squarefree = b.squarefree * quad;
            degree += 2;
        } else {
            mpq_class r = b.roots.empty() || g.coin(0.7) ? g.rational(8, 4) : b.roots[static_cast<std::size_t>(g.integer(0, long(b.roots.size()) - 1))];
            b.f = b.f * UniPoly({-r, mpq_class(1)});
            if (std::find(b.roots.begin(), b.roots.end(), r) == b.roots.end()) {
                b.roots.push_back(r);
                b.squarefree = b.squarefree * UniPoly({-r, mpq_class(1)});
            }
            degree += 1;
        }
        if (g.coin(0.2)) break;
    }
    return b;
}

/// Sign variations of a coefficient sequence.
inline int descartes_variations(const std::vector<mpq_class>& c) {
    int count = 0, last = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Coefficients of (1+x)^n p((a + b x)/(1 + x)), n = deg p; its positive
/// roots correspond to the roots of p in (a, b).
inline std::vector<mpq_class> moebius_image(const UniPoly& p, const mpq_class& a, const mpq_class& b) {
    const int n = p.degree();
    std::vector<mpq_class> out(static_cast<std::size_t>(n) + 1, mpq_class(0));
    // sum_k c_k (a + b x)^k (1 + x)^{n-k}
    for (int k = 0; k <= n; ++k) {
        UniPoly term = UniPoly::constant(p.coeff(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i) term = term * UniPoly({a, b});
        for (int i = k; i < n; ++i) term = term * UniPoly({mpq_class(1), mpq_class(1)});
        for (int i = 0; i <= term.degree(); ++i) out[static_cast<std::size_t>(i)] += term.coeff(static_cast<std::size_t>(i));
    }
    return out;
}

/// Roots of a squarefree p in the open interval (a, b) by Descartes bisection.
inline int descartes_count_open(const UniPoly& p, const mpq_class& a, const mpq_class& b, int depth = 0) {
    int v = descartes_variations(moebius_image(p, a, b));
    if (v <= 1) return v;
    if (depth > 200) return -1000;  // would signal a non-squarefree input
    mpq_class m = (a + b) / 2;
    return descartes_count_open(p, a, m, depth + 1) + (p.eval(m) == 0 ? 1 : 0) + descartes_count_open(p, m, b, depth + 1);
}

/// Roots of a squarefree p in (a, b].
inline int descartes_count(const UniPoly& p, const mpq_class& a, const mpq_class& b) {
    return descartes_count_open(p, a, b) + (p.eval(b) == 0 ? 1 : 0);
}

/// Leibniz expansion over all permutations; no pivoting, no memo.
template <class Entry, class Mul>
Entry leibniz_determinant(const std::vector<std::vector<Entry>>& m, Entry zero, Entry one, Mul mul) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Entry total = zero;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
        }
        Entry term = one;
        for (std::size_t r = 0; r < n; ++r) term = mul(term, m[r][perm[r]]);
        if (inversions % 2 == 0) total = total + term;
        else total = total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline MultiPoly leibniz_determinant(const std::vector<std::vector<MultiPoly>>& m, const std::vector<std::string>& vars) {
    return leibniz_determinant(m, MultiPoly(vars), MultiPoly::constant(vars, 1),
                               [](const MultiPoly& a, const MultiPoly& b) { return a * b; });
}

inline mpq_class leibniz_determinant(const std::vector<std::vector<mpq_class>>& m) {
    return leibniz_determinant(m, mpq_class(0), mpq_class(1),
                               [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); });
}

/// Antidiagonal 2x2x2 with all three entries positive: a completion exists
/// iff g(x) = x + e2/x + e3/x^2 dips to 1 - e1 on (0, 1]. Floating scan;
/// nullopt when the margin is too thin to call.
inline std::optional<bool> antidiag_scan_oracle(double a, double b, double c) {
    const double e1 = a + b + c, e2 = a * b + a * c + b * c, e3 = a * b * c;
    auto g = [&](double x) { return x + e2 / x + e3 / (x * x); };
    double best = g(1.0), best_x = 1.0;
    const int steps = 20000;
    for (int k = 1; k <= steps; ++k) {
        double x = static_cast<double>(k) / steps;
        if (g(x) < best) best = g(x), best_x = x;
    }
    // golden-section polish around the grid minimum
    double lo = std::max(best_x - 1.0 / steps, 1e-12), hi = std::min(best_x + 1.0 / steps, 1.0);
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) * 0.382, m2 = lo + (hi - lo) * 0.618;
        if (g(m1) < g(m2)) hi = m2;
        else lo = m1;
    }
    best = std::min(best, g((lo + hi) / 2));
    const double margin = best - (1.0 - e1);
    if (std::abs(margin) < 1e-7) return std::nullopt;
    return margin <= 0;
}

/// sum x_i^(1/n) <= 1 in floating point; nullopt near the boundary.
inline std::optional<bool> root_sum_float_oracle(unsigned n, const std::vector<mpq_class>& x) {
    double s = 0;
    for (const auto& v : x) s += std::pow(v.get_d(), 1.0 / n);
    if (std::abs(s - 1.0) < 1e-9) return std::nullopt;
    return s < 1.0;
}

}  // namespace rankone::testkit

namespace rankone {

// Readable gtest failure messages.
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace rankone
