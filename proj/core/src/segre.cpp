#include "rankone/segre.hpp"

#include "rankone/error.hpp"

namespace rankone {

SegreMatrix segre_matrix(const IndexDomain& domain) {
    SegreMatrix s{domain, IntMatrix(domain.parameter_count(), domain.size())};
    for (std::size_t p = 0; p < domain.size(); ++p) {
        auto index = domain.from_linear(p);
        for (std::size_t j = 0; j < domain.order(); ++j) s.A(s.row_of(j, index[j]), p) = 1;
    }
    return s;
}

RatVector segre_column(const IndexDomain& domain, const MultiIndex& index) {
    if (!domain.contains(index)) throw Error(ErrorCode::InvalidArgument, "index outside domain");
    RatVector v(domain.parameter_count(), mpq_class(0));
    for (std::size_t j = 0; j < domain.order(); ++j) {
        v[domain.parameter_offset(j) + static_cast<std::size_t>(index[j] - 1)] = 1;
    }
    return v;
}

IntMatrix segre_columns(const IndexDomain& domain, const std::vector<MultiIndex>& indices) {
    IntMatrix a(domain.parameter_count(), indices.size());
    for (std::size_t c = 0; c < indices.size(); ++c) {
        const auto& index = indices[c];
        if (!domain.contains(index)) throw Error(ErrorCode::InvalidArgument, "index outside domain");
        for (std::size_t j = 0; j < domain.order(); ++j) {
            a(domain.parameter_offset(j) + static_cast<std::size_t>(index[j] - 1), c) = 1;
        }
    }
    return a;
}

mpz_class saturation_index(const IntMatrix& a_e) {
    mpz_class index = 1;
    if (a_e.cols() == 0 || a_e.rows() == 0) return index;
    for (const auto& s : smith_normal_form(a_e).diagonal()) {
        if (s != 0) index *= s;
    }
    return index;
}

IndexSet matroid_closure(const IndexDomain& domain, const IndexSet& e) {
    RationalSpan span(domain.parameter_count());
    for (const auto& index : e) span.add(segre_column(domain, index));
    IndexSet closure = e;
    for (const auto& index : domain.indices()) {
        if (closure.count(index) == 0 && span.contains(segre_column(domain, index))) closure.insert(index);
    }
    return closure;
}

namespace {

struct CircuitSearch {
    const IntMatrix& a;
    const std::function<bool(const Circuit&)>& visit;
    std::vector<RatVector> columns;
    std::vector<std::size_t> chosen;

    // Returns false once the visitor asked to stop.
    bool extend(const RationalSpan& span, std::size_t from) {
        for (std::size_t c = from; c < a.cols(); ++c) {
            RationalSpan next = span;
            if (next.add(columns[c])) {
                chosen.push_back(c);
                bool go_on = extend(next, c + 1);
                chosen.pop_back();
                if (!go_on) return false;
                continue;
            }
            // chosen + {c} is dependent with chosen independent: one kernel
            // direction, and it is a circuit iff every coefficient is nonzero.
            auto lambda = solve_rational(a.select_columns(chosen), columns[c]);
            bool full = true;
            for (const auto& l : *lambda) full = full && l != 0;
            if (!full) continue;

            Circuit circuit;
            circuit.support = chosen;
            circuit.support.push_back(c);
            RatVector u(lambda->begin(), lambda->end());
            for (auto& x : u) x = -x;
            u.push_back(1);
            mpz_class den = 1, g = 0;
            for (const auto& x : u) den = lcm(den, x.get_den());
            for (const auto& x : u) {
                mpz_class v = x.get_num() * (den / x.get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                circuit.coefficients.push_back(v);
            }
            if (circuit.coefficients.front() < 0) g = -g;
            for (auto& v : circuit.coefficients) v /= g;
            if (!visit(circuit)) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_circuit(const IntMatrix& a_e, const std::function<bool(const Circuit&)>& visit) {
    if (a_e.cols() > kMaxCircuitColumns) {
        throw Error(ErrorCode::TooLarge, "circuit enumeration is capped at " + std::to_string(kMaxCircuitColumns) + " columns");
    }
    CircuitSearch search{a_e, visit, {}, {}};
    for (std::size_t c = 0; c < a_e.cols(); ++c) search.columns.push_back(column_vector(a_e, c));
    search.extend(RationalSpan(a_e.rows()), 0);
}

std::vector<Circuit> circuits(const IntMatrix& a_e) {
    std::vector<Circuit> out;
    for_each_circuit(a_e, [&](const Circuit& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

}  // namespace rankone
