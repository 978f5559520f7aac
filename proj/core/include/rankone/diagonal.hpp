#pragma once

#include "rankone/polynomial.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace rankone {

/// n-th cyclotomic polynomial in x, by dividing x^n - 1 by Phi_m for the
/// proper divisors m of n. Throws InvalidArgument for n = 0.
UniPoly cyclotomic_poly(unsigned n);

/// Element of Z[zeta_n], stored by its coefficients in 1, zeta, ...,
/// zeta^(phi(n)-1) after reduction modulo Phi_n.
class CyclotomicInt {
public:
    CyclotomicInt() = default;
    /// The integer c in Z[zeta_n].
    CyclotomicInt(unsigned n, const mpz_class& c);

    static CyclotomicInt zeta_power(unsigned n, unsigned k);

    unsigned order() const noexcept { return n_; }
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;
    /// True when every coefficient but the constant one vanishes.
    bool is_rational() const;

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

private:
    void check(const CyclotomicInt& o) const;
    unsigned n_ = 1;
    std::vector<mpz_class> coeffs_;
};

/// Expansion limits: at most this many linear forms (n^d) and at most this
/// many potential monomials C(n^d + d, d).
inline constexpr std::size_t kMaxDiagonalForms = 64;
inline constexpr std::size_t kMaxDiagonalTerms = 500000;

/// Q_{n,d}, its compression tildeQ with Q(t, x) = tildeQ(t^n, x^n), and
/// P_i = (d/dt)^i tildeQ at t = 1 for i < n^(d-1).
///
/// Q and tildeQ live on the roster (t, x_1, ..., x_d), every P_i on
/// (x_1, ..., x_d).
struct DiagonalDescription {
    unsigned n = 1;
    unsigned d = 1;
    MultiPoly Q;
    MultiPoly tildeQ;
    std::vector<MultiPoly> P;
};

/// Throws CapExceeded beyond the expansion limits. NonRationalCoefficient and
/// NonDivisibleExponent signal an internal inconsistency.
DiagonalDescription build_description(unsigned n, unsigned d);

/// x in S_{n,d}: P_0(x) >= 0 alone for odd n, every P_i(x) >= 0 for even n.
/// Throws NegativeInput for a negative coordinate, InvalidArgument for a
/// vector of the wrong length.
bool diagonal_membership(const DiagonalDescription& description, const std::vector<mpq_class>& x);
bool diagonal_membership(unsigned n, unsigned d, const std::vector<mpq_class>& x);

enum class RootSumVerdict { BelowOne, AboveOne, WithinEps };

std::string_view verdict_name(RootSumVerdict v) noexcept;

/// Upper precision for the escalation in nth_root_sum_oracle.
inline constexpr long kMaxOraclePrecision = 1L << 14;

/// Decides sum_i x_i^(1/n) <= 1 (BelowOne, boundary included) or > 1.
/// Exact when every x_i is a perfect n-th power; otherwise outward-rounded
/// interval sums, doubling the precision up to kMaxOraclePrecision.
RootSumVerdict nth_root_sum_oracle(unsigned n, const std::vector<mpq_class>& x, long precision_bits = 64);

/// Every x_i is a rational n-th power and their roots sum to exactly 1.
bool exact_boundary_point(unsigned n, const std::vector<mpq_class>& x);

}  // namespace rankone
