#include "commands.hpp"

#include "document.hpp"
#include "rankone/boundary.hpp"
#include "rankone/completability.hpp"
#include "rankone/completion.hpp"
#include "rankone/diagonal.hpp"
#include "rankone/error.hpp"
#include "rankone/rational.hpp"
#include "rankone/segre.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace rankone::cli {

namespace {

json big(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json slices_json(const std::vector<Slice>& slices) {
    json out = json::array();
    for (const auto& s : slices) out.push_back({{"axis", s.axis}, {"level", s.level}});
    return out;
}

json circuit_json(const CircuitWitness& c) {
    json coefficients = json::array();
    for (const auto& v : c.coefficients) coefficients.push_back(big(v));
    json support = json::array();
    for (const auto& i : c.support) support.push_back(index_json(i));
    return {{"support", support}, {"coefficients", coefficients}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

// A value as exact text: the rational when it is one, the monomial otherwise.
json value_json(const MultiIndex& index, const SignedMonomial& m, const PartialTensor& t, int digits) {
    auto q = m.rational_value(t);
    return {{"index", index_json(index)},
            {"exact", q ? to_string(*q) : m.to_string()},
            {"monomial", m.to_string()},
            {"decimal", m.to_decimal(t, digits)}};
}

// --------------------------------------------------------------- subcommands

int cmd_check(const std::string& path, std::ostream& out) {
    auto doc = read_document(path);
    auto r = analyze(doc.tensor);
    json j;
    j["zero_consistent"] = r.zero_consistent;
    j["complex_completable"] = r.complex_completable;
    j["real_completable"] = optional_json(r.real_completable);
    j["finitely_completable_entries"] = r.finitely_completable_entries ? index_list_json(*r.finitely_completable_entries) : json(nullptr);
    j["uniquely_completable_complex"] = optional_json(r.uniquely_completable_complex);
    j["uniquely_completable_real"] = optional_json(r.uniquely_completable_real);
    j["saturation_index"] = r.saturation_index ? big(*r.saturation_index) : json(nullptr);
    j["failing_circuit"] = r.failing_circuit ? circuit_json(*r.failing_circuit) : json(nullptr);
    j["removed_slices"] = slices_json(r.removed_slices);
    out << pretty(j) << '\n';
    return r.complex_completable ? kExitOk : kExitNegative;
}

int cmd_complete(const std::string& path, const std::string& field, bool all, int digits, std::ostream& out) {
    auto doc = read_document(path);
    const auto& t = doc.tensor;
    json j;
    if (field == "complex-count") {
        auto count = complex_completion_count(t);
        j["field"] = "complex";
        j["count"] = big(count);
        out << pretty(j) << '\n';
        return count > 0 ? kExitOk : kExitNegative;
    }
    j["field"] = "real";
    if (!is_complex_completable(t).completable) {
        j["complex_completable"] = false;
        j["real_completable"] = false;
        out << pretty(j) << '\n';
        return kExitNegative;
    }
    if (!is_real_completable(t)) {
        j["complex_completable"] = true;
        j["real_completable"] = false;
        out << pretty(j) << '\n';
        return kExitNegative;
    }
    auto completions = enumerate_real_completions(t);
    j["complex_completable"] = true;
    j["real_completable"] = true;
    j["count"] = completions.size();
    j["completions"] = json::array();
    for (const auto& c : completions) {
        json values = json::array();
        for (const auto& [index, m] : c.values) values.push_back(value_json(index, m, t, digits));
        json witness = json::array();
        for (const auto& [index, m] : c.witness) {
            if (c.rational_witness) {
                witness.push_back({{"index", index_json(index)}, {"exact", to_string(c.rational_witness->at(index))}});
            } else {
                witness.push_back(value_json(index, m, t, digits));
            }
        }
        j["completions"].push_back({{"values", values},
                                    {"free_entries", index_list_json(c.free_entries)},
                                    {"zero_slices", slices_json(c.zero_slices)},
                                    {"witness", witness}});
        if (!all) break;
    }
    out << pretty(j) << '\n';
    return kExitOk;
}

int cmd_closure(const std::string& path, std::ostream& out) {
    auto doc = read_document(path);
    const auto& domain = doc.tensor.domain();
    auto cl = matroid_closure(domain, doc.tensor.support_set());
    IndexSet rest;
    for (const auto& i : domain.indices()) {
        if (cl.count(i) == 0) rest.insert(i);
    }
    json j;
    j["closure"] = index_list_json(cl);
    j["not_finitely_completable"] = index_list_json(rest);
    out << pretty(j) << '\n';
    return kExitOk;
}

int cmd_jacobian(const std::string& path, int trials, std::uint64_t seed, std::ostream& out) {
    auto doc = read_document(path);
    auto p = simplex_parametrization(doc.tensor.domain(), doc.order);
    auto f = linear_factor(p);
    const bool ok = jacobian_identity_check(p, f, trials, seed);
    json j;
    j["vars"] = p.vars;
    j["E"] = json::array();
    for (const auto& e : p.E) j["E"].push_back(index_json(e));
    j["alpha"] = json::array();
    for (const auto& [key, count] : f.alpha) j["alpha"].push_back({{"axis", key.first}, {"level", key.second}, {"count", count}});
    j["B_E"] = json::array();
    for (std::size_t r = 0; r < f.B_E.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < f.B_E.cols(); ++c) row.push_back(big(f.B_E(r, c)));
        j["B_E"].push_back(row);
    }
    j["kernel"] = json::array();
    for (const auto& k : f.kernel) j["kernel"].push_back(big(k));
    j["l_E"] = f.l_E.to_string();
    j["monomial_factor"] = f.monomial_factor.to_string();
    j["identity_check"] = {{"trials", trials}, {"seed", seed}, {"passed", ok}};
    out << pretty(j) << '\n';
    return ok ? kExitOk : kExitNegative;
}

int cmd_diagonal(unsigned n, unsigned d, const std::string& point, std::ostream& out) {
    auto desc = build_description(n, d);
    json j;
    j["n"] = n;
    j["d"] = d;
    j["Q"] = desc.Q.to_string();
    j["tildeQ"] = desc.tildeQ.to_string();
    j["P"] = json::array();
    for (const auto& p : desc.P) j["P"].push_back(p.to_string());
    int code = kExitOk;
    if (!point.empty()) {
        auto x = parse_point(point);
        const bool member = diagonal_membership(desc, x);
        j["point"] = json::array();
        for (const auto& v : x) j["point"].push_back(to_string(v));
        j["member"] = member;
        j["oracle"] = std::string(verdict_name(nth_root_sum_oracle(n, x)));
        code = member ? kExitOk : kExitNegative;
    }
    out << pretty(j) << '\n';
    return code;
}

int cmd_antidiag(const std::string& point, std::ostream& out) {
    auto x = parse_point(point);
    if (x.size() != 3) throw InputError("InvalidValue", "antidiag222 needs three coordinates x_112,x_121,x_211");
    auto v = antidiag222_analysis(x[0], x[1], x[2]);
    json j;
    j["point"] = {to_string(x[0]), to_string(x[1]), to_string(x[2])};
    j["member"] = v.member;
    j["e1"] = to_string(v.e1);
    j["e2"] = to_string(v.e2);
    j["e3"] = to_string(v.e3);
    j["shortcut"] = optional_json(v.shortcut);
    j["disagreement"] = v.disagreement;
    out << pretty(j) << '\n';
    return v.member ? kExitOk : kExitNegative;
}

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
    json j{{"error", {{"code", code}, {"message", message}}}};
    err << pretty(j) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rank-one tensor completion", "rankone"};
    app.require_subcommand(1);

    std::string file;
    auto* check = app.add_subcommand("check", "Completability report for a partial tensor");
    check->add_option("file", file, "Tensor document (JSON)")->required();

    std::string field = "real";
    bool all = false;
    int digits = 12;
    auto* complete = app.add_subcommand("complete", "Values of the finitely completable entries");
    complete->add_option("file", file, "Tensor document (JSON)")->required();
    complete->add_option("--field", field, "real or complex-count")->check(CLI::IsMember({"real", "complex-count"}));
    complete->add_flag("--all", all, "List every real completion");
    complete->add_option("--digits", digits, "Significant digits of the decimal rendering")->check(CLI::Range(1, 1000));

    auto* closure = app.add_subcommand("closure", "Finitely completable entries");
    closure->add_option("file", file, "Tensor document (JSON)")->required();

    int trials = 20;
    std::uint64_t seed = 0;
    auto* jacobian = app.add_subcommand("jacobian", "Jacobian factorization of the simplex parametrization");
    jacobian->add_option("file", file, "Tensor document; only the index set is used")->required();
    jacobian->add_option("--trials", trials, "Random points for the identity check")->check(CLI::Range(0, 100000));
    jacobian->add_option("--seed", seed, "Seed for the random points");

    unsigned n = 0, d = 0;
    std::string point;
    auto* diagonal = app.add_subcommand("diagonal", "Inequalities for completable diagonals");
    diagonal->add_option("--n", n, "Side length")->required()->check(CLI::Range(1U, 64U));
    diagonal->add_option("--d", d, "Number of axes")->required()->check(CLI::Range(1U, 64U));
    diagonal->add_option("--point", point, "Comma-separated diagonal x1,...,xd");

    auto* antidiag = app.add_subcommand("antidiag222", "Membership of the 2x2x2 antidiagonal in the simplex image");
    antidiag->add_option("--point", point, "x_112,x_121,x_211")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        print_error(err, "UsageError", e.what());
        return kExitError;
    }

    try {
        if (*check) return cmd_check(file, out);
        if (*complete) return cmd_complete(file, field, all, digits, out);
        if (*closure) return cmd_closure(file, out);
        if (*jacobian) return cmd_jacobian(file, trials, seed, out);
        if (*diagonal) return cmd_diagonal(n, d, point, out);
        if (*antidiag) return cmd_antidiag(point, out);
    } catch (const InputError& e) {
        print_error(err, e.code(), e.what());
        return kExitError;
    } catch (const Error& e) {
        print_error(err, error_code_name(e.code()), e.what());
        return kExitError;
    }
    return kExitError;
}

}  // namespace rankone::cli
