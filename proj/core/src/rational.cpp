#include "rankone/rational.hpp"

#include "rankone/error.hpp"

#include <cctype>

namespace rankone {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NotZeroConsistent: return "NotZeroConsistent";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotInClosure: return "NotInClosure";
        case ErrorCode::NotCompletable: return "NotCompletable";
        case ErrorCode::NotComplexCompletable: return "NotComplexCompletable";
        case ErrorCode::NotRealCompletable: return "NotRealCompletable";
        case ErrorCode::CosetTooLarge: return "CosetTooLarge";
        case ErrorCode::DegenerateE: return "DegenerateE";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NonRationalCoefficient: return "NonRationalCoefficient";
        case ErrorCode::NonDivisibleExponent: return "NonDivisibleExponent";
        case ErrorCode::NegativeInput: return "NegativeInput";
    }
    return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    mpq_class r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }
std::string to_string(const mpz_class& z) { return z.get_str(); }

mpq_class pow(const mpq_class& base, long exponent) {
    if (exponent == 0) return 1;
    if (base == 0) {
        if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "zero raised to a negative power");
        return 0;
    }
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class r = exponent > 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return r;
}

mpq_class pow(const mpq_class& base, const mpz_class& exponent) {
    if (!exponent.fits_slong_p()) throw Error(ErrorCode::TooLarge, "exponent out of range");
    return pow(base, exponent.get_si());
}

std::optional<mpq_class> exact_root(const mpq_class& q, unsigned long n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
    if (n == 1 || q == 0) return q;
    bool negative = q < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    mpz_class num = abs(q.get_num());
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), n) == 0) return std::nullopt;
    mpq_class r(negative ? mpz_class(-rn) : rn, rd);
    r.canonicalize();
    return r;
}

int sign(const mpq_class& q) { return sgn(q); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace rankone
