#include "hyperzeta/bignum.hpp"

#include <cmath>
#include <cstring>
#include <utility>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

int checked_bits(int bits) {
    if (bits < MPFR_PREC_MIN || bits > 1 << 20) {
        throw InvalidParameter("precision out of range: " + std::to_string(bits), "precision_bits");
    }
    return bits;
}

}  // namespace

BigReal::BigReal(int bits) {
    mpfr_init2(v_, checked_bits(bits));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, int bits) {
    mpfr_init2(v_, checked_bits(bits));
    mpfr_set_si(v_, value, kRnd);
}

BigReal::BigReal(double value, int bits) {
    mpfr_init2(v_, checked_bits(bits));
    mpfr_set_d(v_, value, kRnd);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
    std::memcpy(v_, other.v_, sizeof(v_));
    other.v_->_mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this == &other) return *this;
    if (v_->_mpfr_d == nullptr) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
    } else if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    }
    mpfr_set(v_, other.v_, kRnd);
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    std::swap(*v_, *other.v_);
    return *this;
}

BigReal::~BigReal() {
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

BigReal BigReal::parse(std::string_view text, int bits) {
    BigReal r(bits);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
    if (s.empty() || end == s.c_str() || *end != '\0') {
        throw InvalidParameter("cannot parse number '" + s + "'");
    }
    return r;
}

BigComplex BigComplex::parse(std::string_view text, int bits) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.empty()) throw InvalidParameter("cannot parse complex number ''");
    const char last = s.back();
    if (last != 'i' && last != 'j') return BigComplex(BigReal::parse(s, bits));
    s.pop_back();
    // split at the last sign that is not a leading sign or an exponent sign
    std::size_t pos = std::string::npos;
    for (std::size_t q = s.size(); q-- > 1;) {
        if ((s[q] == '+' || s[q] == '-') && s[q - 1] != 'e' && s[q - 1] != 'E') {
            pos = q;
            break;
        }
    }
    const std::string re = pos == std::string::npos ? "0" : s.substr(0, pos);
    std::string im = pos == std::string::npos ? s : s.substr(pos);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    try {
        return {BigReal::parse(re, bits), BigReal::parse(im, bits)};
    } catch (const InvalidParameter&) {
        throw InvalidParameter("cannot parse complex number '" + std::string(text) + "'");
    }
}

BigReal BigReal::pi(int bits) {
    BigReal r(bits);
    mpfr_const_pi(r.v_, kRnd);
    return r;
}

BigReal BigReal::log2(int bits) {
    BigReal r(bits);
    mpfr_const_log2(r.v_, kRnd);
    return r;
}

BigReal BigReal::infinity(int bits) {
    BigReal r(bits);
    mpfr_set_inf(r.v_, 1);
    return r;
}

BigReal BigReal::with_bits(int bits) const {
    BigReal r(bits);
    mpfr_set(r.v_, v_, kRnd);
    return r;
}

std::string BigReal::to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string BigReal::to_string() const { return to_string(decimal_digits(bits())); }

long BigReal::exponent() const noexcept {
    if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? -(1L << 40) : (1L << 40);
    return mpfr_get_exp(v_);
}

BigReal BigReal::operator-() const {
    BigReal r(bits());
    mpfr_neg(r.v_, v_, kRnd);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

#define HYPERZETA_BINOP(op, fn)                                   \
    BigReal operator op(const BigReal& a, const BigReal& b) {     \
        BigReal r(std::min(a.bits(), b.bits()));                  \
        fn(r.v_, a.v_, b.v_, kRnd);                               \
        return r;                                                 \
    }
HYPERZETA_BINOP(+, mpfr_add)
HYPERZETA_BINOP(-, mpfr_sub)
HYPERZETA_BINOP(*, mpfr_mul)
HYPERZETA_BINOP(/, mpfr_div)
#undef HYPERZETA_BINOP

#define HYPERZETA_SIOP(op, fn)                                    \
    BigReal operator op(const BigReal& a, long b) {               \
        BigReal r(a.bits());                                      \
        fn(r.v_, a.v_, b, kRnd);                                  \
        return r;                                                 \
    }
HYPERZETA_SIOP(+, mpfr_add_si)
HYPERZETA_SIOP(-, mpfr_sub_si)
HYPERZETA_SIOP(*, mpfr_mul_si)
HYPERZETA_SIOP(/, mpfr_div_si)
#undef HYPERZETA_SIOP

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.bits());
    mpfr_si_sub(r.v_, a, b.v_, kRnd);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.bits());
    mpfr_si_div(r.v_, a, b.v_, kRnd);
    return r;
}

BigReal operator*(const BigReal& a, double b) {
    BigReal r(a.bits());
    mpfr_mul_d(r.v_, a.v_, b, kRnd);
    return r;
}

#define HYPERZETA_UNARY(name, fn)                                 \
    BigReal name(const BigReal& x) {                              \
        BigReal r(x.bits());                                      \
        fn(r.raw(), x.raw(), kRnd);                               \
        return r;                                                 \
    }
HYPERZETA_UNARY(abs, mpfr_abs)
HYPERZETA_UNARY(sqrt, mpfr_sqrt)
HYPERZETA_UNARY(exp, mpfr_exp)
HYPERZETA_UNARY(expm1, mpfr_expm1)
HYPERZETA_UNARY(log, mpfr_log)
HYPERZETA_UNARY(log1p, mpfr_log1p)
HYPERZETA_UNARY(sin, mpfr_sin)
HYPERZETA_UNARY(cos, mpfr_cos)
#undef HYPERZETA_UNARY

BigReal floor(const BigReal& x) {
    BigReal r(x.bits());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::min(x.bits(), y.bits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), kRnd);
    return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
    BigReal r(std::min(x.bits(), y.bits()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), kRnd);
    return r;
}

BigReal pow(const BigReal& x, long n) {
    BigReal r(x.bits());
    mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(std::min(x.bits(), y.bits()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
    return r;
}

BigReal ldexp(const BigReal& x, long n) {
    BigReal r(x.bits());
    mpfr_mul_2si(r.raw(), x.raw(), n, kRnd);
    return r;
}

const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
const BigReal& min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------

BigComplex BigComplex::two_pi_i(int bits) {
    return {BigReal(bits), ldexp(BigReal::pi(bits), 1)};
}

std::string BigComplex::to_string(int digits) const {
    std::string s = re_.to_string(digits);
    std::string t = im_.to_string(digits);
    if (t.empty() || t[0] != '-') t = "+" + t;
    return s + t + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.real() + b.real(), a.imag() + b.imag()};
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.real() - b.real(), a.imag() - b.imag()};
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    if (a.imag().is_zero()) return {a.real() * b.real(), a.real() * b.imag()};
    if (b.imag().is_zero()) return {a.real() * b.real(), a.imag() * b.real()};
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.imag().is_zero()) return {a.real() / b.real(), a.imag() / b.real()};
    BigReal den = norm(b);
    return {(a.real() * b.real() + a.imag() * b.imag()) / den,
            (a.imag() * b.real() - a.real() * b.imag()) / den};
}
BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.real() + b, a.imag().with_bits(std::min(a.bits(), b.bits()))}; }
BigComplex operator-(const BigComplex& a, const BigReal& b) { return {a.real() - b, a.imag().with_bits(std::min(a.bits(), b.bits()))}; }
BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.real() * b, a.imag() * b}; }
BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.real() / b, a.imag() / b}; }
BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
BigComplex operator+(const BigComplex& a, long b) { return {a.real() + b, a.imag()}; }
BigComplex operator-(const BigComplex& a, long b) { return {a.real() - b, a.imag()}; }
BigComplex operator*(const BigComplex& a, long b) { return {a.real() * b, a.imag() * b}; }
BigComplex operator/(const BigComplex& a, long b) { return {a.real() / b, a.imag() / b}; }
BigComplex operator-(const BigReal& a, const BigComplex& b) { return {a - b.real(), -b.imag().with_bits(std::min(a.bits(), b.bits()))}; }
BigComplex operator-(long a, const BigComplex& b) { return {a - b.real(), -b.imag()}; }
BigComplex operator/(long a, const BigComplex& b) { return BigComplex(a, b.bits()) / b; }

BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }
BigReal norm(const BigComplex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }
BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.real());
    if (z.imag().is_zero()) return {m, BigReal(z.bits())};
    BigReal s(z.bits()), c(z.bits());
    mpfr_sin_cos(s.raw(), c.raw(), z.imag().raw(), kRnd);
    return {m * c, m * s};
}

BigComplex expm1(const BigComplex& z) {
    if (z.imag().is_zero()) return {expm1(z.real()), BigReal(z.bits())};
    const int bits = z.bits();
    BigReal s(bits), c(bits);
    mpfr_sin_cos(s.raw(), c.raw(), z.imag().raw(), kRnd);
    // cos y - 1 = -2 sin^2(y/2)
    BigReal h = sin(ldexp(z.imag(), -1));
    BigReal cosm1 = -ldexp(h * h, 1);
    BigReal em1 = expm1(z.real());
    return {em1 * c + cosm1, (em1 + 1L) * s};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw DomainError("log of zero");
    return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
    if (z.is_zero()) return z;
    BigReal r = abs(z);
    BigReal a = sqrt(ldexp(r + abs(z.real()), -1));
    if (z.real() >= 0.0) return {a, z.imag() / ldexp(a, 1)};
    BigReal b = z.imag().sign() < 0 ? -a : a;
    return {abs(z.imag()) / ldexp(a, 1), b};
}

BigComplex pow(const BigComplex& z, const BigComplex& e) {
    if (z.is_zero()) {
        if (e.real() > 0.0) return BigComplex(std::min(z.bits(), e.bits()));
        throw DomainError("zero raised to a power with non-positive real part");
    }
    return exp(e * log(z));
}

BigComplex pow(const BigComplex& z, long n) {
    if (n < 0) return 1L / pow(z, -n);
    BigComplex result(1L, z.bits());
    BigComplex base = z;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

PrecisionPolicy PrecisionPolicy::with_bits(int bits) {
    PrecisionPolicy p;
    p.precision_bits = bits;
    p.target_abs_error = std::max(1e-32, std::ldexp(1.0, -(bits - 8)));
    p.target_rel_error = p.target_abs_error;
    p.validate();
    return p;
}

void PrecisionPolicy::validate() const {
    if (precision_bits < kMinPrecisionBits) {
        throw InvalidParameter("precision_bits must be at least 64", "precision_bits");
    }
    const double floor_err = std::ldexp(1.0, -precision_bits);
    if (!(target_abs_error > 0) || !(target_rel_error > 0)) {
        throw InvalidParameter("target errors must be positive", "tol");
    }
    if (target_abs_error < floor_err || target_rel_error < floor_err) {
        throw InvalidParameter("target error is not representable at the working precision", "tol");
    }
}

double PrecisionPolicy::epsilon() const { return std::ldexp(1.0, -precision_bits); }

double PrecisionPolicy::tolerance(double scale) const {
    return std::max(target_abs_error, target_rel_error * std::abs(scale));
}

int decimal_digits(int bits) {
    return static_cast<int>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace hyperzeta
