#include "rankone/polynomial.hpp"

#include "rankone/error.hpp"

#include <algorithm>
#include <numeric>

namespace rankone {

namespace {

// "3", "3/4", "x", "2x^3", "3/4*x^3" etc. for a term with positive coefficient c.
std::string term_text(const mpq_class& c, const std::string& monomial) {
    if (monomial.empty()) return c.get_str();
    if (c == 1) return monomial;
    if (c.get_den() == 1) return c.get_str() + monomial;
    return c.get_str() + "*" + monomial;
}

void append_term(std::string& out, const mpq_class& c, const std::string& monomial) {
    if (c < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    out += term_text(abs(c), monomial);
}

std::string power_text(const std::string& var, unsigned e) {
    if (e == 0) return {};
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const mpq_class& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> v(degree + 1, mpq_class(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<mpq_class>& roots) {
    UniPoly f = constant(1);
    for (const auto& r : roots) f = f * UniPoly({-r, mpq_class(1)});
    return f;
}

const mpq_class& UniPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

mpq_class UniPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative(std::size_t times) const {
    UniPoly d = *this;
    for (std::size_t k = 0; k < times && !d.is_zero(); ++k) {
        std::vector<mpq_class> v;
        for (std::size_t i = 1; i < d.coeffs_.size(); ++i) v.push_back(d.coeffs_[i] * static_cast<unsigned long>(i));
        d = UniPoly(std::move(v));
    }
    return d;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * mpq_class(1 / leading());
}

std::vector<mpz_class> UniPoly::primitive_integer() const {
    mpz_class den = 1;
    for (const auto& c : coeffs_) den = lcm(den, c.get_den());
    std::vector<mpz_class> out;
    mpz_class content = 0;
    for (const auto& c : coeffs_) {
        mpz_class v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (out.empty()) return out;
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

UniPoly operator-(const UniPoly& a) { return a * mpq_class(-1); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        append_term(out, coeffs_[i], power_text(var, static_cast<unsigned>(i)));
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    std::vector<mpq_class> r = a.coefficients();
    const auto& d = b.coefficients();
    const std::size_t db = d.size() - 1;
    if (r.size() < d.size()) return {UniPoly{}, a};
    std::vector<mpq_class> q(r.size() - db, mpq_class(0));
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        mpq_class c = r[k] / d[db];
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * d[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(1);
    return divmod(f, gcd(f, f.derivative())).first.monic();
}

// ---------------------------------------------------------------- Sturm

namespace {

int count_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Sign of p on (x, x + eps) for small eps: the first nonvanishing derivative.
int sign_right_of(const UniPoly& p, const mpq_class& x) {
    UniPoly d = p;
    while (!d.is_zero()) {
        int s = d.sign_at(x);
        if (s != 0) return s;
        d = d.derivative();
    }
    return 0;
}

}  // namespace

int SturmSequence::variations(const mpq_class& x) const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmSequence::variations_right_of(const mpq_class& x) const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(sign_right_of(p, x));
    return count_variations(signs);
}

SturmSequence sturm_sequence(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
    SturmSequence s;
    s.polys.push_back(f);
    UniPoly next = f.derivative();
    while (!next.is_zero()) {
        s.polys.push_back(next);
        const auto& a = s.polys[s.polys.size() - 2];
        const auto& b = s.polys.back();
        next = -divmod(a, b).second;
    }
    return s;
}

namespace {

int count_with(const SturmSequence& seq, const mpq_class& a, const mpq_class& b) {
    return seq.variations_right_of(a) - seq.variations(b);
}

}  // namespace

int count_real_roots(const UniPoly& f, const mpq_class& a, const mpq_class& b) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
    if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "root count needs a < b");
    if (f.degree() == 0) return 0;
    return count_with(sturm_sequence(squarefree_part(f)), a, b);
}

mpq_class root_bound(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
    mpq_class m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, mpq_class(abs(f.coeff(static_cast<std::size_t>(i)) / f.leading())));
    return m + 1;
}

mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi) {
    if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty interval");
    if (lo <= 0 && 0 <= hi) return 0;
    if (hi < 0) return -simplest_rational(-hi, -lo);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (fl == lo) return mpq_class(fl);
    if (fl + 1 <= hi) return mpq_class(fl + 1);
    mpq_class inner = simplest_rational(1 / (hi - fl), 1 / (lo - fl));
    mpq_class r = fl + 1 / inner;
    r.canonicalize();
    return r;
}

bool all_derivs_nonneg(const UniPoly& f, const mpq_class& x) {
    UniPoly d = f;
    for (int i = 0; i < f.degree(); ++i) {
        if (d.sign_at(x) < 0) return false;
        d = d.derivative();
    }
    return true;
}

Threshold min_threshold_all_derivs_nonneg(const UniPoly& f, const std::optional<mpq_class>& width) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "threshold of the zero polynomial");
    if (f.leading() != 1) throw Error(ErrorCode::NotMonic, "threshold needs a monic polynomial");
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "threshold needs degree at least one");
    if (width && *width <= 0) throw Error(ErrorCode::InvalidArgument, "interval width must be positive");

    // The endpoint is the largest real root over all f^(i), i < deg. A rational
    // root of f^(i) has denominator dividing the leading coefficient of its
    // primitive integer form, so width below 1/A^2 (A the largest such
    // coefficient) leaves at most one candidate of that height.
    std::vector<UniPoly> derivs;
    mpz_class height = 1;
    for (int i = 0; i < f.degree(); ++i) {
        derivs.push_back(f.derivative(static_cast<std::size_t>(i)));
        height = std::max(height, derivs.back().primitive_integer().back());
    }
    mpq_class target(1, height * height);
    if (width && *width < target) target = *width;

    bool found = false;
    mpq_class lower, upper;
    for (const auto& g : derivs) {
        auto seq = sturm_sequence(squarefree_part(g));
        mpq_class hi = root_bound(g);
        mpq_class lo = -hi;
        if (count_with(seq, lo, hi) == 0) continue;
        // Skip derivatives whose largest root is already known to lie below.
        if (found && count_with(seq, lower, hi) == 0) continue;
        while (hi - lo >= target) {
            mpq_class mid = (lo + hi) / 2;
            if (count_with(seq, mid, hi) > 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if (!found || lo > lower) lower = lo;
        if (!found || hi > upper) upper = hi;
        found = true;
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "no real root among the derivatives");

    Threshold t;
    mpq_class q = simplest_rational(lower, upper);
    if (all_derivs_nonneg(f, q) && std::any_of(derivs.begin(), derivs.end(), [&](const UniPoly& g) { return g.eval(q) == 0; })) {
        t.exact = q;
        t.lower = q;
        t.upper = q;
    } else {
        t.lower = lower;
        t.upper = upper;
    }
    return t;
}

// ---------------------------------------------------------------- MultiPoly

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0U);
    unsigned db = std::accumulate(b.begin(), b.end(), 0U);
    if (da != db) return da > db;
    return b < a;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const mpq_class& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
    MultiPoly p(std::move(vars));
    if (index >= p.nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& exponents, const mpq_class& coeff) {
    if (exponents.size() != vars_.size()) throw Error(ErrorCode::InvalidArgument, "exponent length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

mpq_class MultiPoly::coeff(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0U));
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.at(var)));
    return d;
}

mpq_class MultiPoly::eval(const std::vector<mpq_class>& point) const {
    if (point.size() != vars_.size()) throw Error(ErrorCode::InvalidArgument, "point length mismatch");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] != 0) t *= rankone::pow(point[j], static_cast<long>(e[j]));
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    MultiPoly d(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        --f[var];
        d.add_term(f, c * e[var]);
    }
    return d;
}

MultiPoly MultiPoly::substitute(std::size_t var, const mpq_class& value) const {
    if (var >= vars_.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c * rankone::pow(value, static_cast<long>(e[var])));
    }
    return out;
}

UniPoly MultiPoly::univariate(std::size_t var, const std::vector<mpq_class>& point) const {
    if (var >= vars_.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    if (point.size() != vars_.size()) throw Error(ErrorCode::InvalidArgument, "point length mismatch");
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, mpq_class(0));
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j != var && e[j] != 0) t *= rankone::pow(point[j], static_cast<long>(e[j]));
        }
        coeffs[e[var]] += t;
    }
    return UniPoly(std::move(coeffs));
}

void MultiPoly::check_roster(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw Error(ErrorCode::InvalidArgument, "polynomials live on different variable rosters");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_roster(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_roster(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator-(const MultiPoly& a) { return a * mpq_class(-1); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_roster(b);
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string monomial;
        for (std::size_t j = 0; j < e.size(); ++j) monomial += power_text(vars_[j], e[j]);
        append_term(out, c, monomial);
    }
    return out;
}

}  // namespace rankone
