#pragma once

#include "rankone/segre.hpp"
#include "rankone/tensor.hpp"

#include <optional>

namespace rankone {

enum class Field { Complex, Real };

/// A circuit of A_E spelled out on original indices.
struct CircuitWitness {
    std::vector<MultiIndex> support;
    std::vector<mpz_class> coefficients;
};

struct ComplexVerdict {
    bool completable = false;
    /// A violated circuit binomial when one exists within the enumeration cap.
    std::optional<CircuitWitness> witness;
};

ComplexVerdict is_complex_completable(const PartialTensor& tensor);

/// Throws NotComplexCompletable if the tensor has no complex completion.
bool is_real_completable(const PartialTensor& tensor);

/// Throws NotCompletable unless the tensor is completable over `field`.
bool is_uniquely_completable(const PartialTensor& tensor, Field field);

struct CompletabilityReport {
    bool zero_consistent = false;
    bool complex_completable = false;
    std::optional<bool> real_completable;
    std::optional<IndexSet> finitely_completable_entries;
    std::optional<bool> uniquely_completable_complex;
    std::optional<bool> uniquely_completable_real;
    std::optional<mpz_class> saturation_index;
    std::optional<CircuitWitness> failing_circuit;
    std::vector<Slice> removed_slices;
};

/// Everything above in one pass. A tensor that is not zero-consistent gets
/// only `zero_consistent` and `complex_completable` (both false).
CompletabilityReport analyze(const PartialTensor& tensor);

}  // namespace rankone
