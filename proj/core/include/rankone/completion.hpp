#pragma once

#include "rankone/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankone {

/// sign * prod |T_e|^{exponents[e]} over observed entries e. Sign 0 stands for
/// the value zero (an entry inside a removed zero slice).
struct SignedMonomial {
    int sign = 1;
    std::map<MultiIndex, mpq_class> exponents;

    /// (m, |value|^m) with m the lcm of the exponent denominators.
    std::pair<mpz_class, mpq_class> power_form(const PartialTensor& tensor) const;
    /// The value when it is rational.
    std::optional<mpq_class> rational_value(const PartialTensor& tensor) const;
    /// Decimal rendering with `digits` significant digits.
    std::string to_decimal(const PartialTensor& tensor, int digits) const;
    /// e.g. "-T[1,1,2]^(1/2)*T[2,2,2]^(-1/2)".
    std::string to_string() const;

    friend SignedMonomial operator*(const SignedMonomial& a, const SignedMonomial& b);
    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// Exact equality of the two values.
bool same_value(const SignedMonomial& a, const SignedMonomial& b, const PartialTensor& tensor);

/// One real completion. Entries are original indices.
struct Completion {
    /// Entries of D \ E whose value is fixed once the zero slices are chosen:
    /// the closure of the nonzero core, plus unobserved entries of the zero
    /// slices (value 0).
    std::map<MultiIndex, SignedMonomial> values;
    /// The remaining unobserved entries.
    IndexSet free_entries;
    /// A full rank-one tensor realising these values, free coordinates set to 1.
    std::map<MultiIndex, SignedMonomial> witness;
    /// The witness as rationals, when every entry is rational.
    std::optional<std::map<MultiIndex, mpq_class>> rational_witness;
    /// The zero slices this completion uses, a minimal cover of the zeros.
    std::vector<Slice> zero_slices;
};

inline constexpr std::size_t kMaxCosetDimension = 20;

/// Real values of entry i over all real completions: one or two, + before -,
/// or the single value 0 when every minimal choice of zero slices contains i.
/// Empty when no real completion exists. Throws NotCompletable without a complex completion and
/// NotInClosure when i is not forced.
std::vector<SignedMonomial> complete_entry(const PartialTensor& tensor, const MultiIndex& index);

/// Every real completion, for every minimal choice of zero slices, distinct
/// on the forced entries. Throws
/// NotRealCompletable, or CosetTooLarge when more than 2^20 would result.
std::vector<Completion> enumerate_real_completions(const PartialTensor& tensor);

/// Number of complex completions of the forced entries (0 if none).
mpz_class complex_completion_count(const PartialTensor& tensor);

/// Exact check that all 2x2 minors of all flattenings vanish.
bool is_rank_one(const IndexDomain& domain, const std::map<MultiIndex, mpq_class>& full);
bool is_rank_one(const IndexDomain& domain, const std::map<MultiIndex, SignedMonomial>& full, const PartialTensor& tensor);

}  // namespace rankone
