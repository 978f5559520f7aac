#include "rankone/completion.hpp"

#include "core_system.hpp"
#include "mpfr_value.hpp"
#include "rankone/error.hpp"

#include <algorithm>
#include <functional>

namespace rankone {

using detail::CoreSystem;

// ---------------------------------------------------------------- SignedMonomial

std::pair<mpz_class, mpq_class> SignedMonomial::power_form(const PartialTensor& tensor) const {
    if (sign == 0) return {mpz_class(1), mpq_class(0)};
    mpz_class m = 1;
    for (const auto& [index, q] : exponents) m = lcm(m, q.get_den());
    mpq_class value = 1;
    for (const auto& [index, q] : exponents) {
        mpq_class e = q * m;
        value *= pow(mpq_class(abs(tensor.at(index))), e.get_num());
    }
    return {m, value};
}

std::optional<mpq_class> SignedMonomial::rational_value(const PartialTensor& tensor) const {
    auto [m, power] = power_form(tensor);
    if (!m.fits_ulong_p()) return std::nullopt;
    auto root = exact_root(power, m.get_ui());
    if (!root) return std::nullopt;
    return sign < 0 ? mpq_class(-*root) : *root;
}

std::string SignedMonomial::to_decimal(const PartialTensor& tensor, int digits) const {
    auto bits = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    detail::MpfrValue v(bits);
    auto [m, power] = power_form(tensor);
    mpfr_set_q(v.get(), power.get_mpq_t(), MPFR_RNDN);
    if (m != 1) {
        if (!m.fits_ulong_p()) throw Error(ErrorCode::TooLarge, "root index too large for decimal rendering");
        mpfr_rootn_ui(v.get(), v.get(), m.get_ui(), MPFR_RNDN);
    }
    if (sign < 0) mpfr_neg(v.get(), v.get(), MPFR_RNDN);
    return v.to_string(digits);
}

std::string SignedMonomial::to_string() const {
    if (sign == 0) return "0";
    std::string out = sign < 0 ? "-" : "";
    if (exponents.empty()) return out + "1";
    bool first = true;
    for (const auto& [index, q] : exponents) {
        if (!first) out += "*";
        first = false;
        out += "T[";
        for (std::size_t j = 0; j < index.size(); ++j) out += (j ? "," : "") + std::to_string(index[j]);
        out += "]";
        if (q != 1) out += "^(" + q.get_str() + ")";
    }
    return out;
}

SignedMonomial operator*(const SignedMonomial& a, const SignedMonomial& b) {
    SignedMonomial r;
    r.sign = a.sign * b.sign;
    if (r.sign == 0) return r;
    r.exponents = a.exponents;
    for (const auto& [index, q] : b.exponents) {
        auto& e = r.exponents[index];
        e += q;
        if (e == 0) r.exponents.erase(index);
    }
    return r;
}

bool same_value(const SignedMonomial& a, const SignedMonomial& b, const PartialTensor& tensor) {
    if (a.sign != b.sign) return false;
    if (a.sign == 0) return true;
    auto [ma, pa] = a.power_form(tensor);
    auto [mb, pb] = b.power_form(tensor);
    // Compare |a|^L and |b|^L for L = lcm(ma, mb).
    mpz_class l = lcm(ma, mb);
    return pow(pa, mpz_class(l / ma)) == pow(pb, mpz_class(l / mb));
}

// ---------------------------------------------------------------- completion data

namespace {

using ExponentMap = std::map<MultiIndex, mpq_class>;

struct CompletionData {
    CoreSystem core;
    F2Solution signs;
    std::vector<ExponentMap> theta;        // |theta_r| per parameter row, original indices
    std::vector<MultiIndex> forced;        // core indices in cl(E) \ E
    std::vector<ExponentMap> forced_value; // magnitude exponents of those
};

// Rows of A touched by a core index.
std::vector<std::size_t> rows_of(const IndexDomain& domain, const MultiIndex& index) {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < domain.order(); ++j) rows.push_back(domain.parameter_offset(j) + static_cast<std::size_t>(index[j] - 1));
    return rows;
}

std::uint8_t sign_bit(const std::vector<std::size_t>& rows, const BitVector& eps) {
    std::uint8_t b = 0;
    for (auto r : rows) b ^= eps[r];
    return b;
}

void accumulate(ExponentMap& into, const ExponentMap& add) {
    for (const auto& [index, q] : add) {
        auto& e = into[index];
        e += q;
        if (e == 0) into.erase(index);
    }
}

// Needs a complex completion; signs stay empty when there is no real one.
// With `slices` absent the greedy zero-slice choice is used.
std::optional<CompletionData> prepare(const PartialTensor& tensor, bool need_real, const std::optional<std::vector<Slice>>& slices = std::nullopt) {
    if (!is_zero_consistent(tensor)) return std::nullopt;
    CompletionData d{slices ? detail::build_core(tensor, *slices) : detail::build_core(tensor), {}, {}, {}, {}};
    auto& core = d.core;
    if (!detail::lattice_consistent(core)) return std::nullopt;
    auto signs = detail::sign_solutions(core);
    if (need_real && !signs) return std::nullopt;
    if (signs) d.signs = std::move(*signs);

    // |theta| = |T'|^{1/s} in Smith coordinates (free ones set to 1), then
    // mapped back: log|theta_r| = sum_k U_{k,r} log|phi_k|.
    const auto& snf = core.snf;
    const std::size_t rows = core.a.rows();
    d.theta.assign(rows, {});
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < core.rank; ++k) {
            if (snf.U(k, r) == 0) continue;
            for (std::size_t e = 0; e < core.support.size(); ++e) {
                if (snf.V(e, k) == 0) continue;
                mpq_class q(snf.U(k, r) * snf.V(e, k), snf.S(k, k));
                q.canonicalize();
                accumulate(d.theta[r], {{core.stripped.to_original(core.support[e]), q}});
            }
        }
    }

    RationalSpan span(rows);
    for (std::size_t e = 0; e < core.support.size(); ++e) span.add(column_vector(core.a, e));
    const IndexSet observed(core.support.begin(), core.support.end());
    for (const auto& index : core.domain().indices()) {
        if (observed.count(index) != 0) continue;
        auto column = segre_column(core.domain(), index);
        if (!span.contains(column)) continue;
        auto lambda = solve_rational(core.a, column);
        ExponentMap value;
        for (std::size_t e = 0; e < lambda->size(); ++e) {
            if ((*lambda)[e] != 0) value[core.stripped.to_original(core.support[e])] = (*lambda)[e];
        }
        d.forced.push_back(index);
        d.forced_value.push_back(std::move(value));
    }
    return d;
}

}  // namespace

std::vector<SignedMonomial> complete_entry(const PartialTensor& tensor, const MultiIndex& index) {
    if (!tensor.domain().contains(index)) throw Error(ErrorCode::InvalidArgument, "index outside domain");
    if (tensor.observed(index)) {
        const auto& v = tensor.at(index);
        if (v == 0) return {SignedMonomial{0, {}}};
        return {SignedMonomial{sgn(v), {{index, mpq_class(1)}}}};
    }
    if (!prepare(tensor, false)) throw Error(ErrorCode::NotCompletable, "tensor has no complex completion");
    // A forced entry has every level met by a nonzero entry, so no zero-slice
    // choice can contain it. An entry zero under one choice and live under
    // another is therefore never forced.
    std::optional<std::vector<Slice>> live_cover;
    for (auto& cover : minimal_zero_covers(tensor)) {
        const bool removed = std::any_of(cover.begin(), cover.end(), [&](const Slice& sl) { return sl.contains(index); });
        if (!removed && !live_cover) live_cover = std::move(cover);
    }
    if (!live_cover) return {SignedMonomial{0, {}}};
    auto data = prepare(tensor, false, live_cover);
    const auto& core = data->core;

    auto reduced = *core.stripped.to_reduced(index);
    std::size_t slot = 0;
    while (slot < data->forced.size() && data->forced[slot] != reduced) ++slot;
    if (slot == data->forced.size()) throw Error(ErrorCode::NotInClosure, "entry is not determined by the observed entries");

    if (!detail::sign_solutions(core)) return {};
    auto rows = rows_of(core.domain(), reduced);
    bool varies = false;
    for (const auto& k : data->signs.kernel) varies = varies || sign_bit(rows, k) != 0;
    const auto& magnitude = data->forced_value[slot];
    if (varies) return {SignedMonomial{1, magnitude}, SignedMonomial{-1, magnitude}};
    return {SignedMonomial{sign_bit(rows, data->signs.particular) ? -1 : 1, magnitude}};
}

namespace {

// Completions for one choice of zero slices, appended to `out` unless an
// equal assignment of the forced entries is already there.
void completions_for_cover(const PartialTensor& tensor, const std::vector<Slice>& cover, std::vector<Completion>& out) {
    auto data = prepare(tensor, true, cover);
    if (!data) throw Error(ErrorCode::NotRealCompletable, "tensor has no real completion");
    const auto& core = data->core;
    const auto& domain = core.domain();

    std::vector<std::vector<std::size_t>> forced_rows;
    for (const auto& index : data->forced) forced_rows.push_back(rows_of(domain, index));

    // Keep kernel directions whose sign effects on the forced entries are
    // independent; each subset of them yields a different sign pattern.
    std::vector<BitVector> chosen;
    std::vector<std::pair<std::size_t, BitVector>> echelon;  // (pivot, effect)
    for (const auto& k : data->signs.kernel) {
        BitVector effect(forced_rows.size());
        for (std::size_t i = 0; i < forced_rows.size(); ++i) effect[i] = sign_bit(forced_rows[i], k);
        for (const auto& [p, row] : echelon) {
            if (effect[p] == 0) continue;
            for (std::size_t i = 0; i < effect.size(); ++i) effect[i] ^= row[i];
        }
        std::size_t p = 0;
        while (p < effect.size() && effect[p] == 0) ++p;
        if (p == effect.size()) continue;
        echelon.emplace_back(p, std::move(effect));
        chosen.push_back(k);
    }
    if (chosen.size() > kMaxCosetDimension) {
        throw Error(ErrorCode::CosetTooLarge, "real completions span a sign coset of dimension " + std::to_string(chosen.size()));
    }

    const auto& original = tensor.domain();
    for (std::size_t mask = 0; mask < (std::size_t{1} << chosen.size()); ++mask) {
        BitVector eps = data->signs.particular;
        for (std::size_t b = 0; b < chosen.size(); ++b) {
            if ((mask >> b) & 1U) {
                for (std::size_t r = 0; r < eps.size(); ++r) eps[r] ^= chosen[b][r];
            }
        }
        Completion c;
        for (std::size_t i = 0; i < data->forced.size(); ++i) {
            int s = sign_bit(forced_rows[i], eps) ? -1 : 1;
            c.values.emplace(core.stripped.to_original(data->forced[i]), SignedMonomial{s, data->forced_value[i]});
        }
        bool rational = true;
        std::map<MultiIndex, mpq_class> rational_witness;
        for (const auto& index : original.indices()) {
            SignedMonomial w{0, {}};
            if (!core.stripped.in_removed_slice(index)) {
                auto reduced = *core.stripped.to_reduced(index);
                auto rows = rows_of(domain, reduced);
                w.sign = sign_bit(rows, eps) ? -1 : 1;
                for (auto r : rows) accumulate(w.exponents, data->theta[r]);
            } else if (!tensor.observed(index)) {
                c.values.emplace(index, w);
            }
            if (rational) {
                auto q = w.rational_value(tensor);
                if (q) {
                    rational_witness.emplace(index, *q);
                } else {
                    rational = false;
                }
            }
            c.witness.emplace(index, std::move(w));
        }
        if (rational) c.rational_witness = std::move(rational_witness);
        for (const auto& index : original.indices()) {
            if (!tensor.observed(index) && c.values.count(index) == 0) c.free_entries.insert(index);
        }
        c.zero_slices = cover;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const Completion& o) { return o.values == c.values; });
        if (!seen) out.push_back(std::move(c));
    }
}

}  // namespace

std::vector<Completion> enumerate_real_completions(const PartialTensor& tensor) {
    if (!prepare(tensor, true)) throw Error(ErrorCode::NotRealCompletable, "tensor has no real completion");
    std::vector<Completion> out;
    for (const auto& cover : minimal_zero_covers(tensor)) completions_for_cover(tensor, cover, out);
    return out;
}

mpz_class complex_completion_count(const PartialTensor& tensor) {
    auto data = prepare(tensor, false);
    if (!data) return 0;
    const auto& core = data->core;
    std::vector<MultiIndex> closure = core.support;
    closure.insert(closure.end(), data->forced.begin(), data->forced.end());
    return saturation_index(core.a) / saturation_index(segre_columns(core.domain(), closure));
}

// ---------------------------------------------------------------- rank-one test

namespace {

// Calls minor(a, b, c, d) for every 2x2 minor X_a X_b - X_c X_d of every
// flattening, stopping at the first false.
bool all_minors(const IndexDomain& domain, const std::function<bool(const MultiIndex&, const MultiIndex&, const MultiIndex&, const MultiIndex&)>& minor) {
    const std::size_t n = domain.order();
    if (n < 2) return true;
    const auto all = domain.indices();
    // Flattenings up to transposition: subsets S of axes containing axis 0, S proper.
    for (std::size_t mask = 1; mask < (std::size_t{1} << n) - 1; mask += 2) {
        // Two indices a, b swapped on the S-part give c, d.
        for (std::size_t x = 0; x < all.size(); ++x) {
            for (std::size_t y = x + 1; y < all.size(); ++y) {
                const auto& a = all[x];
                const auto& b = all[y];
                MultiIndex c = a, d = b;
                bool row_differs = false, col_differs = false;
                for (std::size_t j = 0; j < n; ++j) {
                    if ((mask >> j) & 1U) {
                        std::swap(c[j], d[j]);
                        row_differs = row_differs || a[j] != b[j];
                    } else {
                        col_differs = col_differs || a[j] != b[j];
                    }
                }
                if (!row_differs || !col_differs) continue;
                if (!minor(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_rank_one(const IndexDomain& domain, const std::map<MultiIndex, mpq_class>& full) {
    if (full.size() != domain.size()) throw Error(ErrorCode::InvalidArgument, "rank-one test needs every entry");
    return all_minors(domain, [&](const MultiIndex& a, const MultiIndex& b, const MultiIndex& c, const MultiIndex& d) {
        return full.at(a) * full.at(b) == full.at(c) * full.at(d);
    });
}

bool is_rank_one(const IndexDomain& domain, const std::map<MultiIndex, SignedMonomial>& full, const PartialTensor& tensor) {
    if (full.size() != domain.size()) throw Error(ErrorCode::InvalidArgument, "rank-one test needs every entry");
    return all_minors(domain, [&](const MultiIndex& a, const MultiIndex& b, const MultiIndex& c, const MultiIndex& d) {
        return same_value(full.at(a) * full.at(b), full.at(c) * full.at(d), tensor);
    });
}

}  // namespace rankone
