#include "rankone/completability.hpp"

#include "core_system.hpp"
#include "rankone/error.hpp"

#include <map>

namespace rankone {

namespace {

using detail::CoreSystem;

std::optional<CircuitWitness> find_violated_circuit(const CoreSystem& core) {
    if (core.a.cols() > kMaxCircuitColumns) return std::nullopt;
    std::optional<CircuitWitness> found;
    for_each_circuit(core.a, [&](const Circuit& c) {
        std::vector<mpz_class> u(core.support.size(), mpz_class(0));
        for (std::size_t k = 0; k < c.support.size(); ++k) u[c.support[k]] = c.coefficients[k];
        if (detail::relation_holds(core, u)) return true;
        CircuitWitness w;
        for (auto col : c.support) w.support.push_back(core.stripped.to_original(core.support[col]));
        w.coefficients = c.coefficients;
        found = std::move(w);
        return false;
    });
    return found;
}

ComplexVerdict complex_verdict(const CoreSystem& core) {
    ComplexVerdict v;
    v.completable = detail::lattice_consistent(core);
    if (!v.completable) v.witness = find_violated_circuit(core);
    return v;
}

// Uniqueness over the given field for a completable tensor.
//
// A completion theta_1 x ... x theta_n vanishes exactly on the levels where
// theta is zero. Those levels can only be taken from P*, the levels met by no
// nonzero observation, and must cover every observed zero. Distinct zero
// patterns give distinct completions, so uniqueness needs P* to be the only
// admissible pattern, and then a unique torus completion of the nonzero
// entries on the domain left after deleting P*.
bool unique_given_completable(const PartialTensor& tensor, Field field) {
    const auto& domain = tensor.domain();
    const auto n = domain.order();
    std::vector<std::vector<bool>> live(n);
    for (std::size_t j = 0; j < n; ++j) live[j].assign(static_cast<std::size_t>(domain.dim(j)), false);
    std::vector<MultiIndex> zeros;
    bool any_nonzero = false;
    for (const auto& [index, value] : tensor.entries()) {
        if (value == 0) {
            zeros.push_back(index);
            continue;
        }
        any_nonzero = true;
        for (std::size_t j = 0; j < n; ++j) live[j][static_cast<std::size_t>(index[j] - 1)] = true;
    }

    if (!any_nonzero) {
        // The zero tensor completes; a nonzero completion exists iff some
        // index u is unobserved (kill every level except those of u).
        return tensor.size() == domain.size();
    }

    auto covered_without = [&](std::size_t axis, int level) {
        for (const auto& z : zeros) {
            bool covered = false;
            for (std::size_t j = 0; j < n && !covered; ++j) {
                if (live[j][static_cast<std::size_t>(z[j] - 1)]) continue;
                if (j == axis && z[j] == level) continue;
                covered = true;
            }
            if (!covered) return false;
        }
        return true;
    };
    for (std::size_t j = 0; j < n; ++j) {
        for (int k = 1; k <= domain.dim(j); ++k) {
            if (!live[j][static_cast<std::size_t>(k - 1)] && covered_without(j, k)) return false;
        }
    }

    // Torus part on the domain of live levels.
    std::vector<std::vector<int>> position(n);
    std::vector<int> dims(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        position[j].assign(static_cast<std::size_t>(domain.dim(j)), 0);
        for (int k = 1; k <= domain.dim(j); ++k) {
            if (live[j][static_cast<std::size_t>(k - 1)]) position[j][static_cast<std::size_t>(k - 1)] = ++dims[j];
        }
    }
    auto live_domain = IndexDomain::reduced(dims);
    IndexSet nonzero;
    for (const auto& [index, value] : tensor.entries()) {
        if (value == 0) continue;
        MultiIndex r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = position[j][static_cast<std::size_t>(index[j] - 1)];
        nonzero.insert(r);
    }
    if (matroid_closure(live_domain, nonzero).size() != live_domain.size()) return false;
    mpz_class index = saturation_index(segre_columns(live_domain, {nonzero.begin(), nonzero.end()}));
    return field == Field::Complex ? index == 1 : mpz_odd_p(index.get_mpz_t()) != 0;
}

}  // namespace

ComplexVerdict is_complex_completable(const PartialTensor& tensor) {
    if (!is_zero_consistent(tensor)) return {};
    return complex_verdict(detail::build_core(tensor));
}

bool is_real_completable(const PartialTensor& tensor) {
    if (!is_zero_consistent(tensor)) throw Error(ErrorCode::NotComplexCompletable, "tensor is not zero-consistent");
    auto core = detail::build_core(tensor);
    if (!detail::lattice_consistent(core)) throw Error(ErrorCode::NotComplexCompletable, "tensor has no complex completion");
    return detail::sign_solutions(core).has_value();
}

bool is_uniquely_completable(const PartialTensor& tensor, Field field) {
    bool completable = is_complex_completable(tensor).completable;
    if (completable && field == Field::Real) completable = is_real_completable(tensor);
    if (!completable) throw Error(ErrorCode::NotCompletable, "tensor is not completable over the requested field");
    return unique_given_completable(tensor, field);
}

CompletabilityReport analyze(const PartialTensor& tensor) {
    CompletabilityReport r;
    r.zero_consistent = is_zero_consistent(tensor);
    if (!r.zero_consistent) return r;

    auto core = detail::build_core(tensor);
    r.removed_slices = core.stripped.removed;
    r.finitely_completable_entries = matroid_closure(tensor.domain(), tensor.support_set());
    r.saturation_index = saturation_index(core.a);

    auto verdict = complex_verdict(core);
    r.complex_completable = verdict.completable;
    r.failing_circuit = std::move(verdict.witness);
    if (!r.complex_completable) {
        r.uniquely_completable_complex = false;
        r.uniquely_completable_real = false;
        return r;
    }
    r.real_completable = detail::sign_solutions(core).has_value();
    r.uniquely_completable_complex = unique_given_completable(tensor, Field::Complex);
    r.uniquely_completable_real = *r.real_completable && unique_given_completable(tensor, Field::Real);
    return r;
}

}  // namespace rankone
