#pragma once

// Shared plumbing for the decision and completion layers: the zero-stripped
// core of a partial tensor together with its exponent matrix.

#include "rankone/linalg.hpp"
#include "rankone/segre.hpp"
#include "rankone/tensor.hpp"

#include <optional>

namespace rankone::detail {

struct CoreSystem {
    StrippedTensor stripped;
    std::vector<MultiIndex> support;  // core indices, reduced coordinates, lex order
    IntMatrix a;                      // A_E of the core
    SmithForm snf;
    std::size_t rank = 0;

    const IndexDomain& domain() const { return stripped.core.domain(); }
    const mpq_class& value(std::size_t column) const { return stripped.core.at(support[column]); }
};

/// Throws NotZeroConsistent.
CoreSystem build_core(const PartialTensor& tensor);
/// Same, removing exactly the given zero slices.
CoreSystem build_core(const PartialTensor& tensor, const std::vector<Slice>& slices);

/// prod T_e^{u_e} == 1 over the core, exactly.
bool relation_holds(const CoreSystem& core, const std::vector<mpz_class>& u);

/// Every integer kernel vector of A_E maps to 1.
bool lattice_consistent(const CoreSystem& core);

/// Sign parities s_e (1 iff T_e < 0) in support order.
BitVector sign_parities(const CoreSystem& core);

/// The F2 sign system A_E^T eps = s; nullopt when no real sign choice exists.
std::optional<F2Solution> sign_solutions(const CoreSystem& core);

}  // namespace rankone::detail
