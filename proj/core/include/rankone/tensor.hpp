#pragma once

#include "rankone/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace rankone {

/// A grid index (i_1, ..., i_n), 1-based in every coordinate.
using MultiIndex = std::vector<int>;
using IndexSet = std::set<MultiIndex>;

/// The product domain [d_1] x ... x [d_n].
///
/// User-facing domains have every d_j >= 2. Domains produced by zero-slice
/// stripping may have axes with a single level or none at all; those are
/// built through `reduced` and report `is_standard() == false`.
class IndexDomain {
public:
    IndexDomain() = default;
    explicit IndexDomain(std::vector<int> dims);

    static IndexDomain reduced(std::vector<int> dims);

    std::size_t order() const noexcept { return dims_.size(); }
    int dim(std::size_t axis) const { return dims_.at(axis); }
    const std::vector<int>& dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return size_; }
    bool is_standard() const noexcept;

    bool contains(const MultiIndex& index) const noexcept;

    /// Position of `index` in lexicographic order (last coordinate fastest).
    std::size_t linear_index(const MultiIndex& index) const;
    MultiIndex from_linear(std::size_t position) const;

    /// Every index of the domain in lexicographic order.
    std::vector<MultiIndex> indices() const;

    /// Number of parameters sum_j d_j; row offset of axis j in that count.
    std::size_t parameter_count() const noexcept;
    std::size_t parameter_offset(std::size_t axis) const;

    friend bool operator==(const IndexDomain&, const IndexDomain&) = default;

private:
    std::vector<int> dims_;
    std::size_t size_ = 0;
};

/// A maximal slice: all indices whose coordinate on `axis` equals `level`.
/// Both are 1-based.
struct Slice {
    int axis = 1;
    int level = 1;

    bool contains(const MultiIndex& index) const {
        return index.at(static_cast<std::size_t>(axis - 1)) == level;
    }
    friend auto operator<=>(const Slice&, const Slice&) = default;
};

class PartialTensor {
public:
    PartialTensor() = default;
    PartialTensor(IndexDomain domain, std::map<MultiIndex, mpq_class> entries);

    const IndexDomain& domain() const noexcept { return domain_; }
    const std::map<MultiIndex, mpq_class>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    bool observed(const MultiIndex& index) const { return entries_.count(index) != 0; }
    const mpq_class& at(const MultiIndex& index) const;

    /// The index set E, in lexicographic order.
    std::vector<MultiIndex> support() const;
    IndexSet support_set() const;

    bool has_zero_entry() const;

private:
    IndexDomain domain_;
    std::map<MultiIndex, mpq_class> entries_;
};

bool is_zero_consistent(const PartialTensor& tensor);

/// Result of removing all-zero maximal slices.
struct StrippedTensor {
    IndexDomain original_domain;
    /// Nonzero core on the reduced domain.
    PartialTensor core;
    /// Removed slices in removal order, in original coordinates.
    std::vector<Slice> removed;
    /// kept_levels[j][k-1] is the original level of reduced level k on axis j.
    std::vector<std::vector<int>> kept_levels;
    /// Axes left with one level (or none) after stripping.
    std::vector<int> collapsed_axes;

    MultiIndex to_original(const MultiIndex& reduced_index) const;
    /// Reduced coordinates of an original index, if it avoids every removed slice.
    std::optional<MultiIndex> to_reduced(const MultiIndex& original_index) const;
    bool in_removed_slice(const MultiIndex& original_index) const;
};

/// Removes all-zero slices greedily: axes in increasing order, and within an
/// axis levels in increasing order. A slice is removed when it still holds an
/// observed entry and all of its observed entries are zero.
StrippedTensor strip_zero_slices(const PartialTensor& tensor);

/// Removes exactly `slices`. Every observed zero must lie in one of them and
/// none may hold a nonzero entry.
StrippedTensor strip_slices(const PartialTensor& tensor, const std::vector<Slice>& slices);

/// Every inclusion-minimal set of slices that holds no observed nonzero entry
/// and covers every observed zero, each sorted. A tensor without zeros has the
/// single empty cover. Throws NotZeroConsistent, or TooLarge past `limit`.
std::vector<std::vector<Slice>> minimal_zero_covers(const PartialTensor& tensor, std::size_t limit = 256);

/// Lifts the core back to the original domain and puts a zero at every index
/// of `original_support` lying in a removed slice.
PartialTensor reinsert_zero_slices(const StrippedTensor& stripped, const IndexSet& original_support);

}  // namespace rankone
