#include "rankone/boundary.hpp"

#include "rankone/error.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <unordered_map>

namespace rankone {

namespace {

std::size_t expected_size(const IndexDomain& domain) {
    std::size_t s = 0;
    for (int d : domain.dims()) s += static_cast<std::size_t>(d - 1);
    return s;
}

// d l_{j,k'} / d theta_{j,k}
int level_derivative(int level, int k, int dim) {
    if (level == k) return 1;
    if (level == dim) return -1;
    return 0;
}

mpq_class random_rational(std::mt19937_64& engine) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    mpq_class q(num(engine), den(engine));
    q.canonicalize();
    return q;
}

}  // namespace

std::size_t SimplexParametrization::variable(std::size_t axis, int level) const {
    if (axis >= domain.order() || level < 1 || level >= domain.dim(axis)) {
        throw Error(ErrorCode::InvalidArgument, "no parameter for this axis and level");
    }
    std::size_t offset = 0;
    for (std::size_t j = 0; j < axis; ++j) offset += static_cast<std::size_t>(domain.dim(j) - 1);
    return offset + static_cast<std::size_t>(level - 1);
}

SimplexParametrization simplex_parametrization(const IndexDomain& domain, std::vector<MultiIndex> E) {
    if (!domain.is_standard()) throw Error(ErrorCode::InvalidArgument, "domain needs every axis of length >= 2");
    if (E.size() != expected_size(domain)) {
        throw Error(ErrorCode::InvalidArgument, "|E| must equal sum of (d_j - 1)");
    }
    std::set<MultiIndex> seen;
    for (const auto& i : E) {
        if (!domain.contains(i)) throw Error(ErrorCode::InvalidArgument, "index outside domain");
        if (!seen.insert(i).second) throw Error(ErrorCode::InvalidArgument, "repeated index in E");
    }

    SimplexParametrization P;
    P.domain = domain;
    P.E = std::move(E);
    const auto n = domain.order();
    for (std::size_t j = 0; j < n; ++j) {
        for (int k = 1; k < domain.dim(j); ++k) {
            P.vars.push_back("theta_" + std::to_string(j + 1) + "_" + std::to_string(k));
        }
    }
    P.l.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly last = MultiPoly::constant(P.vars, 1);
        for (int k = 1; k < domain.dim(j); ++k) {
            auto theta = MultiPoly::variable(P.vars, P.variable(j, k));
            last -= theta;
            P.l[j].push_back(std::move(theta));
        }
        P.l[j].push_back(std::move(last));
    }
    std::vector<std::vector<bool>> met(n);
    for (std::size_t j = 0; j < n; ++j) met[j].assign(static_cast<std::size_t>(domain.dim(j)), false);
    for (const auto& i : P.E) {
        MultiPoly p = MultiPoly::constant(P.vars, 1);
        for (std::size_t j = 0; j < n; ++j) {
            p = p * P.l[j][static_cast<std::size_t>(i[j] - 1)];
            met[j][static_cast<std::size_t>(i[j] - 1)] = true;
        }
        P.p.push_back(std::move(p));
    }
    for (const auto& axis : met) {
        if (std::find(axis.begin(), axis.end(), false) != axis.end()) P.degenerate = true;
    }
    return P;
}

JacobianFactorization linear_factor(const SimplexParametrization& P) {
    if (P.degenerate) throw Error(ErrorCode::DegenerateE, "E misses a maximal slice");
    const auto& domain = P.domain;
    const auto n = domain.order();
    const auto m = P.E.size();

    JacobianFactorization F;
    for (std::size_t j = 0; j < n; ++j) {
        for (int k = 1; k <= domain.dim(j); ++k) F.alpha[{static_cast<int>(j) + 1, k}] = 0;
    }
    for (const auto& i : P.E) {
        for (std::size_t j = 0; j < n; ++j) ++F.alpha[{static_cast<int>(j) + 1, i[j]}];
    }

    IntMatrix bt(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            if (P.E[r][j] < domain.dim(j)) bt(r, P.variable(j, P.E[r][j])) = 1;
        }
    }
    F.B_E = IntMatrix(m, m + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) F.B_E(r, c) = bt(r, c);
        F.B_E(r, m) = 1;
    }
    if (rank(F.B_E) != m) throw Error(ErrorCode::DegenerateE, "B_E does not have a one-dimensional kernel");

    // Cramer: the column c entry solves B~^T y = -1, scaled by det(B~^T).
    F.det_B_tilde = determinant(bt);
    F.kernel.resize(m + 1);
    for (std::size_t c = 0; c < m; ++c) {
        IntMatrix replaced = bt;
        for (std::size_t r = 0; r < m; ++r) replaced(r, c) = -1;
        F.kernel[c] = determinant(replaced);
    }
    F.kernel[m] = F.det_B_tilde;

    F.l_E = MultiPoly::constant(P.vars, mpq_class(F.kernel[m]));
    for (std::size_t c = 0; c < m; ++c) {
        F.l_E += MultiPoly::variable(P.vars, c) * mpq_class(F.kernel[c]);
    }

    F.monomial_factor = MultiPoly::constant(P.vars, 1);
    for (const auto& [jk, count] : F.alpha) {
        if (count > 1) {
            const auto& l = P.l[static_cast<std::size_t>(jk.first - 1)][static_cast<std::size_t>(jk.second - 1)];
            F.monomial_factor = F.monomial_factor * l.pow(count - 1);
        }
    }
    return F;
}

RatMatrix jacobian_at(const SimplexParametrization& P, const std::vector<mpq_class>& theta) {
    if (theta.size() != P.vars.size()) throw Error(ErrorCode::InvalidArgument, "parameter point has wrong length");
    const auto& domain = P.domain;
    const auto n = domain.order();
    std::vector<std::vector<mpq_class>> l(n);
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class last = 1;
        for (int k = 1; k < domain.dim(j); ++k) {
            l[j].push_back(theta[P.variable(j, k)]);
            last -= theta[P.variable(j, k)];
        }
        l[j].push_back(last);
    }
    RatMatrix J(P.E.size(), P.vars.size());
    for (std::size_t r = 0; r < P.E.size(); ++r) {
        const auto& i = P.E[r];
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class rest = 1;
            for (std::size_t m = 0; m < n; ++m) {
                if (m != j) rest *= l[m][static_cast<std::size_t>(i[m] - 1)];
            }
            for (int k = 1; k < domain.dim(j); ++k) {
                int dl = level_derivative(i[j], k, domain.dim(j));
                if (dl != 0) J(r, P.variable(j, k)) = dl * rest;
            }
        }
    }
    return J;
}

MultiPoly jacobian_determinant(const SimplexParametrization& P) {
    const auto m = P.E.size();
    if (m > 8) throw Error(ErrorCode::TooLarge, "symbolic Jacobian limited to 8 rows");
    std::vector<std::vector<MultiPoly>> J(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) J[r].push_back(P.p[r].derivative(c));
    }
    // Minor on rows [row, m) and the column set `mask`, memoized.
    std::unordered_map<unsigned, MultiPoly> memo;
    auto minor = [&](auto&& self, unsigned mask) -> MultiPoly {
        const auto row = m - static_cast<std::size_t>(__builtin_popcount(mask));
        if (row == m) return MultiPoly::constant(P.vars, 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        MultiPoly sum(P.vars);
        int sign = 1;
        for (std::size_t c = 0; c < m; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!J[row][c].is_zero()) {
                auto term = J[row][c] * self(self, mask & ~(1u << c));
                if (sign > 0) sum += term;
                else sum -= term;
            }
            sign = -sign;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return minor(minor, m == 0 ? 0u : (1u << m) - 1);
}

bool jacobian_identity_check(const SimplexParametrization& P, const JacobianFactorization& F, int trials,
                             std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    std::mt19937_64 engine(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<mpq_class> theta;
        for (std::size_t v = 0; v < P.vars.size(); ++v) theta.push_back(random_rational(engine));
        if (determinant(jacobian_at(P, theta)) != F.l_E.eval(theta) * F.monomial_factor.eval(theta)) return false;
    }
    return true;
}

std::vector<MultiPoly> graph_ideal_generators(const SimplexParametrization& P) {
    std::vector<std::string> roster = P.vars;
    const bool short_names = std::all_of(P.domain.dims().begin(), P.domain.dims().end(), [](int d) { return d < 10; });
    for (const auto& i : P.E) {
        std::string name = "x";
        for (std::size_t j = 0; j < i.size(); ++j) {
            name += (short_names && j > 0) ? "" : "_";
            name += std::to_string(i[j]);
        }
        roster.push_back(name);
    }
    std::vector<MultiPoly> out;
    for (std::size_t r = 0; r < P.E.size(); ++r) {
        MultiPoly g = MultiPoly::variable(roster, P.vars.size() + r);
        for (const auto& [exps, c] : P.p[r].terms()) {
            Exponents wide(exps);
            wide.resize(roster.size(), 0);
            g.add_term(wide, -c);
        }
        out.push_back(std::move(g));
    }
    return out;
}

UniPoly antidiag222_constraint(const mpq_class& e1, const mpq_class& e2, const mpq_class& e3) {
    return UniPoly({e3, e2, mpq_class(e1 - 1), mpq_class(1)});
}

namespace {

// f_2 and f_3 of the Sturm sequence, computed without rescaling.
std::pair<UniPoly, std::optional<UniPoly>> sturm_tail(const UniPoly& f0) {
    UniPoly f1 = f0.derivative();
    UniPoly f2 = -divmod(f0, f1).second;
    if (f2.degree() < 1) return {f2, std::nullopt};
    return {f2, -divmod(f1, f2).second};
}

}  // namespace

std::optional<mpq_class> antidiag222_sturm_constant(const mpq_class& e1, const mpq_class& e2, const mpq_class& e3) {
    auto [f2, f3] = sturm_tail(antidiag222_constraint(e1, e2, e3));
    if (!f3) return std::nullopt;
    return f3->coeff(0);
}

mpq_class antidiag222_sturm_denominator(const mpq_class& e1, const mpq_class& e2) {
    mpq_class lead = e1 * e1 - 3 * e2 - 2 * e1 + 1;
    return lead * lead;
}

AntidiagVerdict antidiag222_analysis(const mpq_class& x112, const mpq_class& x121, const mpq_class& x211) {
    AntidiagVerdict v;
    v.e1 = x112 + x121 + x211;
    v.e2 = x112 * x121 + x112 * x211 + x121 * x211;
    v.e3 = x112 * x121 * x211;
    const std::array<mpq_class, 3> x{x112, x121, x211};
    if (std::any_of(x.begin(), x.end(), [](const mpq_class& q) { return q < 0; })) return v;

    const auto zeros = std::count_if(x.begin(), x.end(), [](const mpq_class& q) { return q == 0; });
    const UniPoly f0 = antidiag222_constraint(v.e1, v.e2, v.e3);
    if (zeros >= 2) {
        // Setting theta_j = 0 on the axis shared by the zero entries leaves
        // the remaining entry free in [0, 1].
        v.member = v.e1 <= 1;
    } else {
        // x_111 must be positive here, and it fixes the whole tensor; the
        // entries sum to one exactly when f_0(x_111) = 0.
        v.member = count_real_roots(f0, 0, 1) >= 1;
    }

    if (zeros == 0 && v.e1 < 1) {
        auto [f2, f3] = sturm_tail(f0);
        if (f2.degree() == 1 && f3 && f3->degree() == 0) {
            const int mu = f2.sign_at(1);
            const int sigma = sgn(f3->coeff(0));
            v.shortcut = mu >= 0 && sigma > 0;
            v.disagreement = *v.shortcut != v.member;
        }
    }
    return v;
}

bool simplex_membership_antidiag222(const mpq_class& x112, const mpq_class& x121, const mpq_class& x211) {
    return antidiag222_analysis(x112, x121, x211).member;
}

MultiPoly antidiag222_boundary_polynomial() {
    // {coefficient, deg x_211, deg x_121, deg x_112}
    static constexpr std::array<std::array<int, 4>, 38> kTerms{{
        {1, 4, 2, 0},   {-2, 3, 3, 0},  {1, 2, 4, 0},   {-2, 4, 1, 1},  {2, 3, 2, 1},   {2, 2, 3, 1},
        {-2, 1, 4, 1},  {1, 4, 0, 2},   {2, 3, 1, 2},   {-6, 2, 2, 2},  {2, 1, 3, 2},   {1, 0, 4, 2},
        {-2, 3, 0, 3},  {2, 2, 1, 3},   {2, 1, 2, 3},   {-2, 0, 3, 3},  {1, 2, 0, 4},   {-2, 1, 1, 4},
        {1, 0, 2, 4},   {-2, 3, 2, 0},  {-2, 2, 3, 0},  {8, 3, 1, 1},   {-4, 2, 2, 1},  {8, 1, 3, 1},
        {-2, 3, 0, 2},  {-4, 2, 1, 2},  {-4, 1, 2, 2},  {-2, 0, 3, 2},  {-2, 2, 0, 3},  {8, 1, 1, 3},
        {-2, 0, 2, 3},  {1, 2, 2, 0},   {-10, 2, 1, 1}, {-10, 1, 2, 1}, {1, 2, 0, 2},   {-10, 1, 1, 2},
        {1, 0, 2, 2},   {4, 1, 1, 1},
    }};
    MultiPoly b({"x_211", "x_121", "x_112"});
    for (const auto& t : kTerms) {
        b.add_term({static_cast<unsigned>(t[1]), static_cast<unsigned>(t[2]), static_cast<unsigned>(t[3])}, t[0]);
    }
    return b;
}

}  // namespace rankone
