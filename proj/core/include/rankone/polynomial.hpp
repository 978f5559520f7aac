#pragma once

#include "rankone/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankone {

/// Univariate polynomial over Q, coefficients low degree first, never with a
/// trailing zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<mpq_class> coefficients);

    static UniPoly constant(const mpq_class& c);
    static UniPoly monomial(const mpq_class& c, std::size_t degree);
    /// prod (t - r) over the given roots.
    static UniPoly from_roots(const std::vector<mpq_class>& roots);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }
    const mpq_class& leading() const;

    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const { return sgn(eval(x)); }
    UniPoly derivative(std::size_t times = 1) const;
    UniPoly monic() const;
    /// Integer multiple with content 1 and positive leading coefficient.
    std::vector<mpz_class> primitive_integer() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const mpq_class& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(const UniPoly& a);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// f / gcd(f, f'), monic.
UniPoly squarefree_part(const UniPoly& f);

struct SturmSequence {
    std::vector<UniPoly> polys;

    /// Sign variations at x, zeros skipped.
    int variations(const mpq_class& x) const;
    /// Sign variations just right of x.
    int variations_right_of(const mpq_class& x) const;
};

/// f, f', then negated remainders until the next one would vanish.
SturmSequence sturm_sequence(const UniPoly& f);

/// Number of distinct real roots of f in (a, b]. Endpoints may be roots.
int count_real_roots(const UniPoly& f, const mpq_class& a, const mpq_class& b);

/// Cauchy bound: every real root lies in (-B, B).
mpq_class root_bound(const UniPoly& f);

/// The rational with the smallest denominator in [lo, hi].
mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi);

/// Left endpoint c of I = { e : f^(i)(e) >= 0 for i = 0..deg-1 }, which is a
/// closed ray [c, inf). `exact` is set when c is rational; otherwise c lies in
/// (lower, upper]. When exact, lower = upper = c.
struct Threshold {
    std::optional<mpq_class> exact;
    mpq_class lower;
    mpq_class upper;

    bool contains(const mpq_class& x) const { return exact ? x == *exact : (lower < x && x <= upper); }
};

/// Throws NotMonic unless the leading coefficient is 1, and InvalidArgument
/// for constants. `width` bounds the width of the isolating interval when
/// the endpoint is irrational (default: whatever decides rationality).
Threshold min_threshold_all_derivs_nonneg(const UniPoly& f, const std::optional<mpq_class>& width = std::nullopt);

/// Membership in I itself.
bool all_derivs_nonneg(const UniPoly& f, const mpq_class& x);

using Exponents = std::vector<unsigned>;

/// Graded-lex descending under the roster order; the printing order.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over Q on a fixed, named variable roster.
class MultiPoly {
public:
    using Terms = std::map<Exponents, mpq_class, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const mpq_class& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& exponents, const mpq_class& coeff);
    mpq_class coeff(const Exponents& exponents) const;

    /// -1 for zero.
    int total_degree() const;
    int degree_in(std::size_t var) const;

    mpq_class eval(const std::vector<mpq_class>& point) const;
    MultiPoly derivative(std::size_t var) const;
    /// Fixes variable `var` to `value`; the roster is unchanged.
    MultiPoly substitute(std::size_t var, const mpq_class& value) const;
    /// Univariate restriction in `var`; every other variable takes its value from `point`.
    UniPoly univariate(std::size_t var, const std::vector<mpq_class>& point) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly pow(unsigned e) const;

    /// Canonical text: terms in graded-lex order, integer coefficients
    /// juxtaposed ("-2t^2x_1"), others as "p/q*"; unit coefficients dropped.
    std::string to_string() const;

private:
    void check_roster(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    Terms terms_;
};

}  // namespace rankone
