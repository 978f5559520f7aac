#include "core_system.hpp"

namespace rankone::detail {

namespace {

CoreSystem finish(StrippedTensor stripped) {
    CoreSystem core;
    core.stripped = std::move(stripped);
    core.support = core.stripped.core.support();
    core.a = segre_columns(core.domain(), core.support);
    core.snf = smith_normal_form(core.a);
    core.rank = core.snf.rank();
    return core;
}

}  // namespace

CoreSystem build_core(const PartialTensor& tensor) { return finish(strip_zero_slices(tensor)); }

CoreSystem build_core(const PartialTensor& tensor, const std::vector<Slice>& slices) {
    return finish(strip_slices(tensor, slices));
}

bool relation_holds(const CoreSystem& core, const std::vector<mpz_class>& u) {
    mpq_class lhs = 1, rhs = 1;
    for (std::size_t e = 0; e < u.size(); ++e) {
        if (u[e] > 0) lhs *= pow(core.value(e), u[e]);
        if (u[e] < 0) rhs *= pow(core.value(e), mpz_class(-u[e]));
    }
    return lhs == rhs;
}

bool lattice_consistent(const CoreSystem& core) {
    // With U A V = S the integer kernel of A_E is spanned by the columns of V
    // past the rank.
    const auto& v = core.snf.V;
    for (std::size_t k = core.rank; k < v.cols(); ++k) {
        if (!relation_holds(core, v.column(k))) return false;
    }
    return true;
}

BitVector sign_parities(const CoreSystem& core) {
    BitVector s(core.support.size(), 0);
    for (std::size_t e = 0; e < s.size(); ++e) s[e] = core.value(e) < 0 ? 1 : 0;
    return s;
}

std::optional<F2Solution> sign_solutions(const CoreSystem& core) {
    return solve_f2(F2Matrix::mod2(core.a.transpose()), sign_parities(core));
}

}  // namespace rankone::detail
