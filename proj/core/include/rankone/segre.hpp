#pragma once

#include "rankone/linalg.hpp"
#include "rankone/tensor.hpp"

#include <functional>

namespace rankone {

/// The 0/1 matrix of the Segre map. Row (j, k) sits at
/// domain.parameter_offset(j) + k - 1; column p is the p-th index in lex order.
struct SegreMatrix {
    IndexDomain domain;
    IntMatrix A;

    std::size_t row_of(std::size_t axis, int level) const { return domain.parameter_offset(axis) + static_cast<std::size_t>(level - 1); }
    std::size_t column_of(const MultiIndex& index) const { return domain.linear_index(index); }
    MultiIndex index_of(std::size_t column) const { return domain.from_linear(column); }
};

SegreMatrix segre_matrix(const IndexDomain& domain);

/// The column of A for one index, as a rational vector.
RatVector segre_column(const IndexDomain& domain, const MultiIndex& index);

/// A_E: columns of A for the given indices, in the given order.
IntMatrix segre_columns(const IndexDomain& domain, const std::vector<MultiIndex>& indices);

/// Product of the nonzero Smith invariants; 1 for a matrix without columns.
mpz_class saturation_index(const IntMatrix& a_e);

/// { i in D : A_i lies in the rational span of A_E }.
IndexSet matroid_closure(const IndexDomain& domain, const IndexSet& e);

/// Circuit of a column matroid: column positions (ascending) and the
/// primitive kernel vector on them, first entry positive.
struct Circuit {
    std::vector<std::size_t> support;
    std::vector<mpz_class> coefficients;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline constexpr std::size_t kMaxCircuitColumns = 24;

/// Visits every circuit once, ordered by the lexicographic order of supports
/// with the largest column last. The visitor returns false to stop early.
void for_each_circuit(const IntMatrix& a_e, const std::function<bool(const Circuit&)>& visit);

/// All circuits. Throws TooLarge above kMaxCircuitColumns columns.
std::vector<Circuit> circuits(const IntMatrix& a_e);

}  // namespace rankone
