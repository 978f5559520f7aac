#include "rankone/diagonal.hpp"

#include "rankone/error.hpp"
#include "mpfr_value.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace rankone {

UniPoly cyclotomic_poly(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial needs n >= 1");
    UniPoly phi = UniPoly::monomial(1, n) - UniPoly::constant(1);
    for (unsigned m = 1; m < n; ++m) {
        if (n % m == 0) phi = divmod(phi, cyclotomic_poly(m)).first;
    }
    return phi;
}

namespace {

// Integer coefficients of Phi_n, low degree first; cached per n.
const std::vector<mpz_class>& cyclotomic_modulus(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::vector<mpz_class>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> coeffs;
    const UniPoly phi = cyclotomic_poly(n);
    for (const auto& c : phi.coefficients()) coeffs.push_back(c.get_num());
    return cache.emplace(n, std::move(coeffs)).first->second;
}

// Reduces a coefficient vector modulo the monic Phi_n.
std::vector<mpz_class> reduce(std::vector<mpz_class> v, unsigned n) {
    const auto& phi = cyclotomic_modulus(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t top = v.size(); top-- > deg;) {
        if (v[top] == 0) continue;
        mpz_class c = v[top];
        for (std::size_t k = 0; k <= deg; ++k) v[top - deg + k] -= c * phi[k];
    }
    v.resize(deg);
    return v;
}

}  // namespace

CyclotomicInt::CyclotomicInt(unsigned n, const mpz_class& c) : n_(n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
    coeffs_.assign(cyclotomic_modulus(n).size() - 1, 0);
    coeffs_[0] = c;
}

CyclotomicInt CyclotomicInt::zeta_power(unsigned n, unsigned k) {
    CyclotomicInt z(n, 0);
    std::vector<mpz_class> v(k + 1, 0);
    v[k] = 1;
    z.coeffs_ = reduce(std::move(v), n);
    return z;
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CyclotomicInt::is_rational() const {
    return std::all_of(coeffs_.begin() + (coeffs_.empty() ? 0 : 1), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

void CyclotomicInt::check(const CyclotomicInt& o) const {
    if (n_ != o.n_) throw Error(ErrorCode::InvalidArgument, "cyclotomic orders differ");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.check(b);
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size(), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CyclotomicInt out = a;
    out.coeffs_ = reduce(std::move(v), a.n_);
    return out;
}

namespace {

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 0;
        for (unsigned v : e) h = h * 131 + v;
        return h;
    }
};

std::vector<std::string> roster(unsigned d, bool with_t) {
    std::vector<std::string> vars;
    if (with_t) vars.push_back("t");
    for (unsigned i = 1; i <= d; ++i) vars.push_back("x_" + std::to_string(i));
    return vars;
}

// C(a + b, b), saturating above `limit`.
std::size_t binomial_capped(std::size_t a, std::size_t b, std::size_t limit) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), a + b, b);
    return c > limit ? limit + 1 : c.get_ui();
}

}  // namespace

DiagonalDescription build_description(unsigned n, unsigned d) {
    if (n == 0 || d == 0) throw Error(ErrorCode::InvalidArgument, "n and d must be positive");
    std::size_t forms = 1;
    for (unsigned i = 0; i < d; ++i) {
        forms *= n;
        if (forms > kMaxDiagonalForms) throw Error(ErrorCode::CapExceeded, "n^d exceeds the expansion cap");
    }
    if (binomial_capped(forms, d, kMaxDiagonalTerms) > kMaxDiagonalTerms) {
        throw Error(ErrorCode::CapExceeded, "product expansion would exceed the term cap");
    }

    std::vector<CyclotomicInt> zeta;
    for (unsigned k = 0; k < n; ++k) zeta.push_back(CyclotomicInt::zeta_power(n, k));

    // Product of (t - sum_i zeta^sigma_i x_i) over sigma in {0..n-1}^d.
    using Expansion = std::unordered_map<Exponents, CyclotomicInt, ExponentsHash>;
    Expansion q;
    q.emplace(Exponents(d + 1, 0), CyclotomicInt(n, 1));
    std::vector<unsigned> sigma(d, 0);
    for (std::size_t f = 0; f < forms; ++f) {
        Expansion next;
        next.reserve(q.size() * 2);
        for (const auto& [e, c] : q) {
            Exponents shifted = e;
            ++shifted[0];
            next.try_emplace(shifted, n, 0).first->second += c;
            for (unsigned i = 0; i < d; ++i) {
                shifted = e;
                ++shifted[i + 1];
                next.try_emplace(shifted, n, 0).first->second -= zeta[sigma[i]] * c;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        q = std::move(next);
        for (unsigned i = d; i-- > 0;) {
            if (++sigma[i] < n) break;
            sigma[i] = 0;
        }
    }

    DiagonalDescription out;
    out.n = n;
    out.d = d;
    out.Q = MultiPoly(roster(d, true));
    out.tildeQ = MultiPoly(roster(d, true));
    for (const auto& [e, c] : q) {
        if (!c.is_rational()) throw Error(ErrorCode::NonRationalCoefficient, "Q has a coefficient outside Q");
        Exponents compressed(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] % n != 0) throw Error(ErrorCode::NonDivisibleExponent, "Q has an exponent not divisible by n");
            compressed[k] = e[k] / n;
        }
        out.Q.add_term(e, mpq_class(c.coefficients()[0]));
        out.tildeQ.add_term(compressed, mpq_class(c.coefficients()[0]));
    }

    const std::size_t count = forms / n;
    const auto xvars = roster(d, false);
    MultiPoly derivative = out.tildeQ;
    for (std::size_t i = 0; i < count; ++i) {
        MultiPoly p(xvars);
        const MultiPoly at_one = derivative.substitute(0, 1);
        for (const auto& [e, c] : at_one.terms()) {
            p.add_term(Exponents(e.begin() + 1, e.end()), c);
        }
        out.P.push_back(std::move(p));
        derivative = derivative.derivative(0);
    }
    return out;
}

bool diagonal_membership(const DiagonalDescription& description, const std::vector<mpq_class>& x) {
    if (x.size() != description.d) throw Error(ErrorCode::InvalidArgument, "point has the wrong length");
    for (const auto& v : x) {
        if (v < 0) throw Error(ErrorCode::NegativeInput, "diagonal entries must be nonnegative");
    }
    const std::size_t used = description.n % 2 == 1 ? 1 : description.P.size();
    for (std::size_t i = 0; i < used; ++i) {
        if (description.P[i].eval(x) < 0) return false;
    }
    return true;
}

bool diagonal_membership(unsigned n, unsigned d, const std::vector<mpq_class>& x) {
    return diagonal_membership(build_description(n, d), x);
}

std::string_view verdict_name(RootSumVerdict v) noexcept {
    switch (v) {
        case RootSumVerdict::BelowOne: return "BelowOne";
        case RootSumVerdict::AboveOne: return "AboveOne";
        case RootSumVerdict::WithinEps: return "WithinEps";
    }
    return "?";
}

namespace {

std::optional<mpq_class> exact_root_sum(unsigned n, const std::vector<mpq_class>& x) {
    mpq_class sum = 0;
    for (const auto& v : x) {
        auto r = exact_root(v, n);
        if (!r) return std::nullopt;
        sum += *r;
    }
    return sum;
}

}  // namespace

bool exact_boundary_point(unsigned n, const std::vector<mpq_class>& x) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "root order must be positive");
    if (std::any_of(x.begin(), x.end(), [](const mpq_class& v) { return v < 0; })) return false;
    auto sum = exact_root_sum(n, x);
    return sum && *sum == 1;
}

RootSumVerdict nth_root_sum_oracle(unsigned n, const std::vector<mpq_class>& x, long precision_bits) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "root order must be positive");
    for (const auto& v : x) {
        if (v < 0) throw Error(ErrorCode::NegativeInput, "oracle needs nonnegative entries");
    }
    if (auto sum = exact_root_sum(n, x)) return *sum <= 1 ? RootSumVerdict::BelowOne : RootSumVerdict::AboveOne;

    for (long bits = std::max(precision_bits, 16L); bits <= kMaxOraclePrecision; bits *= 2) {
        const auto prec = static_cast<mpfr_prec_t>(bits);
        detail::MpfrValue lo(prec), hi(prec), term(prec);
        mpfr_set_zero(lo.get(), 1);
        mpfr_set_zero(hi.get(), 1);
        for (const auto& v : x) {
            mpfr_set_q(term.get(), v.get_mpq_t(), MPFR_RNDD);
            mpfr_rootn_ui(term.get(), term.get(), n, MPFR_RNDD);
            mpfr_add(lo.get(), lo.get(), term.get(), MPFR_RNDD);
            mpfr_set_q(term.get(), v.get_mpq_t(), MPFR_RNDU);
            mpfr_rootn_ui(term.get(), term.get(), n, MPFR_RNDU);
            mpfr_add(hi.get(), hi.get(), term.get(), MPFR_RNDU);
        }
        if (mpfr_cmp_ui(hi.get(), 1) <= 0) return RootSumVerdict::BelowOne;
        if (mpfr_cmp_ui(lo.get(), 1) > 0) return RootSumVerdict::AboveOne;
    }
    return RootSumVerdict::WithinEps;
}

}  // namespace rankone
