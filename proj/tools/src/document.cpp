#include "document.hpp"

#include "rankone/error.hpp"
#include "rankone/rational.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rankone::cli {

namespace {

mpq_class value_of(const json& v) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return parse_rational(v.dump());
    } catch (const Error& e) {
        throw InputError("InvalidValue", e.what());
    }
    throw InputError("InvalidValue", "values must be rational strings such as \"3/4\", got " + v.dump());
}

}  // namespace

TensorDocument parse_document(const json& j) {
    if (!j.is_object()) throw InputError("InvalidDocument", "document must be a JSON object");
    if (!j.contains("dims") || !j["dims"].is_array()) throw InputError("InvalidDocument", "missing \"dims\" array");
    std::vector<int> dims;
    for (const auto& d : j["dims"]) {
        if (!d.is_number_integer() || d.get<long>() < 1 || d.get<long>() > 1000000) {
            throw InputError("InvalidDocument", "dims must be positive integers");
        }
        dims.push_back(d.get<int>());
    }
    if (dims.empty()) throw InputError("InvalidDocument", "dims must not be empty");
    IndexDomain domain(dims);

    std::map<MultiIndex, mpq_class> entries;
    std::vector<MultiIndex> order;
    if (j.contains("entries")) {
        if (!j["entries"].is_array()) throw InputError("InvalidDocument", "\"entries\" must be an array");
        for (const auto& e : j["entries"]) {
            if (!e.is_object() || !e.contains("index") || !e.contains("value") || !e["index"].is_array()) {
                throw InputError("InvalidDocument", "each entry needs \"index\" and \"value\"");
            }
            MultiIndex index;
            for (const auto& k : e["index"]) {
                if (!k.is_number_integer()) throw InputError("InvalidIndex", "index coordinates must be integers");
                index.push_back(k.get<int>());
            }
            if (!domain.contains(index)) throw InputError("InvalidIndex", "index " + e["index"].dump() + " outside dims");
            if (!entries.emplace(index, value_of(e["value"])).second) {
                throw InputError("DuplicateIndex", "index " + e["index"].dump() + " given twice");
            }
            order.push_back(index);
        }
    }

    TensorDocument doc{PartialTensor(domain, std::move(entries)), std::move(order), std::nullopt, std::nullopt};
    if (j.contains("name") && j["name"].is_string()) doc.name = j["name"].get<std::string>();
    if (j.contains("comment") && j["comment"].is_string()) doc.comment = j["comment"].get<std::string>();
    return doc;
}

TensorDocument parse_document_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("MalformedJson", e.what());
    }
    return parse_document(j);
}

TensorDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("FileNotFound", "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document_text(buffer.str());
}

json index_json(const MultiIndex& index) { return json(index); }

json index_list_json(const IndexSet& indices) {
    json out = json::array();
    for (const auto& i : indices) out.push_back(index_json(i));
    return out;
}

json to_json(const TensorDocument& doc) {
    json j;
    if (doc.name) j["name"] = *doc.name;
    if (doc.comment) j["comment"] = *doc.comment;
    j["dims"] = doc.tensor.domain().dims();
    j["entries"] = json::array();
    for (const auto& [index, value] : doc.tensor.entries()) {
        j["entries"].push_back({{"index", index_json(index)}, {"value", to_string(value)}});
    }
    return j;
}

namespace {

void pretty_into(const json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (depth > 0 && j.is_structured()) {
        // short nested values stay on one line
        auto flat = j.dump();
        if (flat.size() <= 96) {
            out += flat;
            return;
        }
    }
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t k = 0;
        for (const auto& [key, value] : j.items()) {
            out += inner + json(key).dump() + ": ";
            pretty_into(value, depth + 1, out);
            out += ++k < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
        return;
    }
    if (j.is_array() && !j.empty()) {
        const bool flat = std::none_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); });
        if (flat) {
            out += j.dump();
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += inner;
            pretty_into(j[k], depth + 1, out);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
        return;
    }
    out += j.dump();
}

}  // namespace

std::string pretty(const json& j) {
    std::string out;
    pretty_into(j, 0, out);
    return out;
}

std::vector<mpq_class> parse_point(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const Error& e) {
            throw InputError("InvalidValue", "bad coordinate \"" + item + "\" in point");
        }
    }
    if (out.empty()) throw InputError("InvalidValue", "empty point");
    return out;
}

}  // namespace rankone::cli
