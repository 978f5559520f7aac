#include "rankone/tensor.hpp"

#include "rankone/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace rankone {

namespace {

std::size_t checked_size(const std::vector<int>& dims) {
    std::size_t size = 1;
    for (int d : dims) {
        auto ud = static_cast<std::size_t>(d);
        if (ud != 0 && size > std::numeric_limits<std::size_t>::max() / ud) {
            throw Error(ErrorCode::TooLarge, "domain size overflows");
        }
        size *= ud;
    }
    return size;
}

}  // namespace

IndexDomain::IndexDomain(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw Error(ErrorCode::InvalidArgument, "domain needs at least one axis");
    for (int d : dims_) {
        if (d < 2) throw Error(ErrorCode::InvalidArgument, "every axis needs at least two levels");
    }
    size_ = checked_size(dims_);
}

IndexDomain IndexDomain::reduced(std::vector<int> dims) {
    for (int d : dims) {
        if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative axis length");
    }
    IndexDomain domain;
    domain.size_ = checked_size(dims);
    domain.dims_ = std::move(dims);
    return domain;
}

bool IndexDomain::is_standard() const noexcept {
    if (dims_.empty()) return false;
    for (int d : dims_) {
        if (d < 2) return false;
    }
    return true;
}

bool IndexDomain::contains(const MultiIndex& index) const noexcept {
    if (index.size() != dims_.size()) return false;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        if (index[j] < 1 || index[j] > dims_[j]) return false;
    }
    return true;
}

std::size_t IndexDomain::linear_index(const MultiIndex& index) const {
    if (!contains(index)) throw Error(ErrorCode::InvalidArgument, "index outside domain");
    std::size_t position = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        position = position * static_cast<std::size_t>(dims_[j]) + static_cast<std::size_t>(index[j] - 1);
    }
    return position;
}

MultiIndex IndexDomain::from_linear(std::size_t position) const {
    if (position >= size_) throw Error(ErrorCode::InvalidArgument, "linear index outside domain");
    MultiIndex index(dims_.size());
    for (std::size_t j = dims_.size(); j-- > 0;) {
        auto d = static_cast<std::size_t>(dims_[j]);
        index[j] = static_cast<int>(position % d) + 1;
        position /= d;
    }
    return index;
}

std::vector<MultiIndex> IndexDomain::indices() const {
    std::vector<MultiIndex> all;
    all.reserve(size_);
    for (std::size_t p = 0; p < size_; ++p) all.push_back(from_linear(p));
    return all;
}

std::size_t IndexDomain::parameter_count() const noexcept {
    return static_cast<std::size_t>(std::accumulate(dims_.begin(), dims_.end(), 0));
}

std::size_t IndexDomain::parameter_offset(std::size_t axis) const {
    if (axis >= dims_.size()) throw Error(ErrorCode::InvalidArgument, "axis out of range");
    return static_cast<std::size_t>(std::accumulate(dims_.begin(), dims_.begin() + static_cast<long>(axis), 0));
}

PartialTensor::PartialTensor(IndexDomain domain, std::map<MultiIndex, mpq_class> entries)
    : domain_(std::move(domain)), entries_(std::move(entries)) {
    for (auto& [index, value] : entries_) {
        if (!domain_.contains(index)) throw Error(ErrorCode::InvalidArgument, "entry index outside domain");
        value.canonicalize();
    }
}

const mpq_class& PartialTensor::at(const MultiIndex& index) const {
    auto it = entries_.find(index);
    if (it == entries_.end()) throw Error(ErrorCode::InvalidArgument, "index not observed");
    return it->second;
}

std::vector<MultiIndex> PartialTensor::support() const {
    std::vector<MultiIndex> out;
    out.reserve(entries_.size());
    for (const auto& [index, value] : entries_) out.push_back(index);
    return out;
}

IndexSet PartialTensor::support_set() const {
    IndexSet out;
    for (const auto& [index, value] : entries_) out.insert(index);
    return out;
}

bool PartialTensor::has_zero_entry() const {
    for (const auto& [index, value] : entries_) {
        if (value == 0) return true;
    }
    return false;
}

bool is_zero_consistent(const PartialTensor& tensor) {
    const auto n = tensor.domain().order();
    // zero_slice[j][k]: every observed entry with i_j = k+1 is zero.
    std::vector<std::vector<bool>> zero_slice(n);
    for (std::size_t j = 0; j < n; ++j) {
        zero_slice[j].assign(static_cast<std::size_t>(tensor.domain().dim(j)), true);
    }
    for (const auto& [index, value] : tensor.entries()) {
        if (value == 0) continue;
        for (std::size_t j = 0; j < n; ++j) zero_slice[j][static_cast<std::size_t>(index[j] - 1)] = false;
    }
    for (const auto& [index, value] : tensor.entries()) {
        if (value != 0) continue;
        bool covered = false;
        for (std::size_t j = 0; j < n && !covered; ++j) {
            covered = zero_slice[j][static_cast<std::size_t>(index[j] - 1)];
        }
        if (!covered) return false;
    }
    return true;
}

MultiIndex StrippedTensor::to_original(const MultiIndex& reduced_index) const {
    MultiIndex out(reduced_index.size());
    for (std::size_t j = 0; j < reduced_index.size(); ++j) {
        out[j] = kept_levels.at(j).at(static_cast<std::size_t>(reduced_index[j] - 1));
    }
    return out;
}

std::optional<MultiIndex> StrippedTensor::to_reduced(const MultiIndex& original_index) const {
    MultiIndex out(original_index.size());
    for (std::size_t j = 0; j < original_index.size(); ++j) {
        const auto& levels = kept_levels.at(j);
        auto it = std::find(levels.begin(), levels.end(), original_index[j]);
        if (it == levels.end()) return std::nullopt;
        out[j] = static_cast<int>(it - levels.begin()) + 1;
    }
    return out;
}

bool StrippedTensor::in_removed_slice(const MultiIndex& original_index) const {
    for (const auto& s : removed) {
        if (s.contains(original_index)) return true;
    }
    return false;
}

StrippedTensor strip_zero_slices(const PartialTensor& tensor) {
    if (!is_zero_consistent(tensor)) {
        throw Error(ErrorCode::NotZeroConsistent, "partial tensor is not zero-consistent");
    }
    const auto& domain = tensor.domain();
    std::map<MultiIndex, mpq_class> remaining = tensor.entries();
    std::vector<Slice> slices;
    for (std::size_t j = 0; j < domain.order(); ++j) {
        for (int k = 1; k <= domain.dim(j); ++k) {
            Slice slice{static_cast<int>(j) + 1, k};
            bool any = false;
            bool all_zero = true;
            for (const auto& [index, value] : remaining) {
                if (!slice.contains(index)) continue;
                any = true;
                if (value != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (!any || !all_zero) continue;
            slices.push_back(slice);
            std::erase_if(remaining, [&](const auto& kv) { return slice.contains(kv.first); });
        }
    }
    return strip_slices(tensor, slices);
}

StrippedTensor strip_slices(const PartialTensor& tensor, const std::vector<Slice>& slices) {
    const auto& domain = tensor.domain();
    const auto n = domain.order();

    StrippedTensor result;
    result.original_domain = domain;
    result.removed = slices;
    std::vector<std::vector<bool>> removed_level(n);
    for (std::size_t j = 0; j < n; ++j) removed_level[j].assign(static_cast<std::size_t>(domain.dim(j)), false);
    for (const auto& s : slices) {
        if (s.axis < 1 || static_cast<std::size_t>(s.axis) > n || s.level < 1 || s.level > domain.dim(static_cast<std::size_t>(s.axis - 1))) {
            throw Error(ErrorCode::InvalidArgument, "slice outside the domain");
        }
        removed_level[static_cast<std::size_t>(s.axis - 1)][static_cast<std::size_t>(s.level - 1)] = true;
    }

    std::vector<int> reduced_dims(n);
    result.kept_levels.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (int k = 1; k <= domain.dim(j); ++k) {
            if (!removed_level[j][static_cast<std::size_t>(k - 1)]) result.kept_levels[j].push_back(k);
        }
        reduced_dims[j] = static_cast<int>(result.kept_levels[j].size());
        if (reduced_dims[j] <= 1) result.collapsed_axes.push_back(static_cast<int>(j) + 1);
    }

    std::map<MultiIndex, mpq_class> core_entries;
    for (const auto& [index, value] : tensor.entries()) {
        auto reduced = result.to_reduced(index);
        if (!reduced) {
            if (value != 0) throw Error(ErrorCode::InvalidArgument, "removed slice holds a nonzero entry");
            continue;
        }
        if (value == 0) throw Error(ErrorCode::NotZeroConsistent, "zero entry outside the removed slices");
        core_entries.emplace(*reduced, value);
    }
    result.core = PartialTensor(IndexDomain::reduced(std::move(reduced_dims)), std::move(core_entries));
    return result;
}

std::vector<std::vector<Slice>> minimal_zero_covers(const PartialTensor& tensor, std::size_t limit) {
    const auto& domain = tensor.domain();
    const auto n = domain.order();
    // Levels that carry no observed nonzero entry.
    std::vector<std::vector<bool>> usable(n);
    for (std::size_t j = 0; j < n; ++j) usable[j].assign(static_cast<std::size_t>(domain.dim(j)), true);
    std::vector<MultiIndex> zeros;
    for (const auto& [index, value] : tensor.entries()) {
        if (value == 0) {
            zeros.push_back(index);
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) usable[j][static_cast<std::size_t>(index[j] - 1)] = false;
    }

    std::set<std::vector<Slice>> found;
    std::vector<Slice> chosen;
    auto covered = [&](const MultiIndex& z, const std::vector<Slice>& set) {
        return std::any_of(set.begin(), set.end(), [&](const Slice& s) { return s.contains(z); });
    };
    // Branch on the slices through the first uncovered zero.
    std::size_t nodes = 0;
    std::function<void()> search = [&] {
        if (++nodes > 1000000) throw Error(ErrorCode::TooLarge, "zero-slice cover search too large");
        auto it = std::find_if(zeros.begin(), zeros.end(), [&](const MultiIndex& z) { return !covered(z, chosen); });
        if (it == zeros.end()) {
            // minimal: each slice covers some zero no other slice covers
            for (std::size_t s = 0; s < chosen.size(); ++s) {
                auto rest = chosen;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
                if (std::all_of(zeros.begin(), zeros.end(), [&](const MultiIndex& z) { return covered(z, rest); })) return;
            }
            auto sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            found.insert(std::move(sorted));
            if (found.size() > limit) throw Error(ErrorCode::TooLarge, "too many ways to place the zero slices");
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const int level = (*it)[j];
            if (!usable[j][static_cast<std::size_t>(level - 1)]) continue;
            chosen.push_back(Slice{static_cast<int>(j) + 1, level});
            search();
            chosen.pop_back();
        }
    };
    search();
    if (found.empty()) throw Error(ErrorCode::NotZeroConsistent, "partial tensor is not zero-consistent");
    return {found.begin(), found.end()};
}

PartialTensor reinsert_zero_slices(const StrippedTensor& stripped, const IndexSet& original_support) {
    std::map<MultiIndex, mpq_class> entries;
    for (const auto& [index, value] : stripped.core.entries()) entries.emplace(stripped.to_original(index), value);
    for (const auto& index : original_support) {
        if (stripped.in_removed_slice(index)) entries.emplace(index, 0);
    }
    return PartialTensor(stripped.original_domain, std::move(entries));
}

}  // namespace rankone
