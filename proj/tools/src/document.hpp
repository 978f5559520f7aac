#pragma once

// JSON form of a partial tensor:
//   {"dims": [2, 2], "entries": [{"index": [1, 2], "value": "3/4"}, ...],
//    "name": "...", "comment": "..."}
// Indices are 1-based, values are exact rationals written as strings.

#include "rankone/tensor.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rankone::cli {

using nlohmann::json;

/// Malformed input. `code` is the machine-readable name printed by the tool.
class InputError : public std::runtime_error {
public:
    InputError(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct TensorDocument {
    PartialTensor tensor;
    /// Indices in the order the document lists them.
    std::vector<MultiIndex> order;
    std::optional<std::string> name;
    std::optional<std::string> comment;
};

TensorDocument parse_document(const json& j);
TensorDocument parse_document_text(const std::string& text);
TensorDocument read_document(const std::string& path);

/// Canonical form: entries in lexicographic index order, values in lowest terms.
json to_json(const TensorDocument& doc);

json index_json(const MultiIndex& index);
json index_list_json(const IndexSet& indices);

/// Indented JSON; short nested values and arrays of scalars stay on one line.
std::string pretty(const json& j);

/// Comma-separated rationals, e.g. "1/8,1/4,0".
std::vector<mpq_class> parse_point(const std::string& text);

}  // namespace rankone::cli
