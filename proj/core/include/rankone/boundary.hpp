#pragma once

#include "rankone/linalg.hpp"
#include "rankone/polynomial.hpp"
#include "rankone/tensor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankone {

/// Simplex-restricted parametrization p_i = prod_j l_{j,i_j} on a set E with
/// |E| = sum_j (d_j - 1).
///
/// Parameters are theta_{j,k} for k < d_j, named "theta_j_k" and ordered by
/// axis, then level. l_{j,k} = theta_{j,k} for k < d_j and
/// l_{j,d_j} = 1 - sum_k theta_{j,k}.
struct SimplexParametrization {
    IndexDomain domain;
    /// E in the caller's order; rows of the Jacobian follow it.
    std::vector<MultiIndex> E;
    std::vector<std::string> vars;
    /// l[j][k-1].
    std::vector<std::vector<MultiPoly>> l;
    /// p[r] belongs to E[r].
    std::vector<MultiPoly> p;
    /// Some level of some axis is met by no index of E.
    bool degenerate = false;

    /// Position of theta_{j,k} in `vars`; j is 0-based, k is 1-based and < d_j.
    std::size_t variable(std::size_t axis, int level) const;
};

/// Throws InvalidArgument when |E| is wrong, E has repeats or leaves the domain.
SimplexParametrization simplex_parametrization(const IndexDomain& domain, std::vector<MultiIndex> E);

struct JacobianFactorization {
    /// alpha[{j, k}] = |{ i in E : i_j = k }|, both 1-based.
    std::map<std::pair<int, int>, unsigned> alpha;
    /// prod l_{j,k}^(alpha - 1).
    MultiPoly monomial_factor;
    MultiPoly l_E;
    /// Rows follow E; the last column is all ones.
    IntMatrix B_E;
    /// Kernel vector of B_E with last entry det(B~_E^T).
    std::vector<mpz_class> kernel;
    mpz_class det_B_tilde;
};

/// Throws DegenerateE when E misses a slice or B_E has a kernel of dimension
/// other than one.
JacobianFactorization linear_factor(const SimplexParametrization& P);

/// J_E at a parameter point (rows follow E, columns follow vars).
RatMatrix jacobian_at(const SimplexParametrization& P, const std::vector<mpq_class>& theta);

/// det J_E as a polynomial, by cofactor expansion. TooLarge above 8 rows.
MultiPoly jacobian_determinant(const SimplexParametrization& P);

/// Compares det J_E with l_E * monomial_factor at `trials` random points
/// (numerators in [-10^6, 10^6], denominators in [1, 10^6]).
bool jacobian_identity_check(const SimplexParametrization& P, const JacobianFactorization& F, int trials,
                             std::uint64_t seed = 0);

/// x_i - p_i for i in E on the roster (vars..., x_i...), for external elimination.
std::vector<MultiPoly> graph_ideal_generators(const SimplexParametrization& P);

/// Membership of the antidiagonal 2x2x2 partial tensor in the image of the
/// simplex parametrization.
struct AntidiagVerdict {
    bool member = false;
    mpq_class e1, e2, e3;
    /// The interior sign test (mu, sigma), when it applies: all entries
    /// positive, e1 < 1 and f_2 of degree one.
    std::optional<bool> shortcut;
    /// Shortcut present and different from `member`.
    bool disagreement = false;
};

AntidiagVerdict antidiag222_analysis(const mpq_class& x112, const mpq_class& x121, const mpq_class& x211);
bool simplex_membership_antidiag222(const mpq_class& x112, const mpq_class& x121, const mpq_class& x211);

/// f_0 = x^3 + (e1 - 1) x^2 + e2 x + e3.
UniPoly antidiag222_constraint(const mpq_class& e1, const mpq_class& e2, const mpq_class& e3);

/// The constant f_3 of the Sturm sequence of f_0; nullopt when the sequence
/// stops before it.
std::optional<mpq_class> antidiag222_sturm_constant(const mpq_class& e1, const mpq_class& e2, const mpq_class& e3);

/// (e1^2 - 3 e2 - 2 e1 + 1)^2, which clears the denominator of f_3.
mpq_class antidiag222_sturm_denominator(const mpq_class& e1, const mpq_class& e2);

/// The irreducible boundary generator in x_211, x_121, x_112 (roster order).
MultiPoly antidiag222_boundary_polynomial();

}  // namespace rankone
