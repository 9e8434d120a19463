#pragma once

// Arbitrary-precision real and complex scalars on top of MPFR.
//
// Every value carries its own precision in bits. Binary operations produce a
// result at the smaller of the two operand precisions; operations with a
// machine integer or double keep the precision of the big operand.

#include <algorithm>
#include <complex>
#include <string>
#include <string_view>

#include <mpfr.h>

namespace hyperzeta {

inline constexpr int kDefaultPrecisionBits = 192;
inline constexpr int kMinPrecisionBits = 64;

class BigReal {
public:
    explicit BigReal(int bits = kDefaultPrecisionBits);
    BigReal(long value, int bits);
    BigReal(int value, int bits) : BigReal(static_cast<long>(value), bits) {}
    BigReal(double value, int bits);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    /// Parses a decimal (or "inf"/"nan") literal. Throws InvalidParameter on garbage.
    static BigReal parse(std::string_view text, int bits);
    static BigReal pi(int bits);
    static BigReal log2(int bits);
    static BigReal infinity(int bits);

    int bits() const noexcept { return static_cast<int>(mpfr_get_prec(v_)); }
    /// Copy rounded to a different precision.
    BigReal with_bits(int bits) const;

    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits.
    std::string to_string(int digits) const;
    std::string to_string() const;

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    /// Binary exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
    long exponent() const noexcept;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator/(long a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, double b);

    friend int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend int compare(const BigReal& a, double b) { return mpfr_cmp_d(a.v_, b); }

private:
    mpfr_t v_;
};

inline BigReal operator+(long a, const BigReal& b) { return b + a; }
inline BigReal operator*(long a, const BigReal& b) { return b * a; }
inline BigReal operator*(double a, const BigReal& b) { return b * a; }

inline bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0; }
inline bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }
inline bool operator<(const BigReal& a, double b) { return compare(a, b) < 0; }
inline bool operator>(const BigReal& a, double b) { return compare(a, b) > 0; }
inline bool operator<=(const BigReal& a, double b) { return compare(a, b) <= 0; }
inline bool operator>=(const BigReal& a, double b) { return compare(a, b) >= 0; }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
/// x * 2^n, exact.
BigReal ldexp(const BigReal& x, long n);
BigReal floor(const BigReal& x);
const BigReal& max(const BigReal& a, const BigReal& b);
const BigReal& min(const BigReal& a, const BigReal& b);

class BigComplex {
public:
    explicit BigComplex(int bits = kDefaultPrecisionBits) : re_(bits), im_(bits) {}
    explicit BigComplex(BigReal re) : im_(re.bits()) { re_ = std::move(re); }
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(long re, int bits) : re_(re, bits), im_(bits) {}
    BigComplex(int re, int bits) : re_(static_cast<long>(re), bits), im_(bits) {}
    BigComplex(double re, double im, int bits) : re_(re, bits), im_(im, bits) {}
    BigComplex(std::complex<double> z, int bits) : re_(z.real(), bits), im_(z.imag(), bits) {}

    /// Accepts "x", "x+yi", "x-yi", "yi" (j is accepted for i). Throws InvalidParameter.
    static BigComplex parse(std::string_view text, int bits);
    static BigComplex i(int bits) { return BigComplex(BigReal(0L, bits), BigReal(1L, bits)); }
    /// 2*pi*i at the given precision.
    static BigComplex two_pi_i(int bits);

    const BigReal& real() const noexcept { return re_; }
    const BigReal& imag() const noexcept { return im_; }
    BigReal& real() noexcept { return re_; }
    BigReal& imag() noexcept { return im_; }
    int bits() const noexcept { return std::min(re_.bits(), im_.bits()); }
    BigComplex with_bits(int bits) const { return {re_.with_bits(bits), im_.with_bits(bits)}; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }
    std::complex<double> to_std() const { return {re_.to_double(), im_.to_double()}; }
    std::string to_string(int digits) const;

    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);

private:
    BigReal re_;
    BigReal im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator+(const BigComplex& a, const BigReal& b);
BigComplex operator-(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator+(const BigComplex& a, long b);
BigComplex operator-(const BigComplex& a, long b);
BigComplex operator*(const BigComplex& a, long b);
BigComplex operator/(const BigComplex& a, long b);
inline BigComplex operator*(long a, const BigComplex& b) { return b * a; }
inline BigComplex operator+(const BigReal& a, const BigComplex& b) { return b + a; }
BigComplex operator-(const BigReal& a, const BigComplex& b);
BigComplex operator-(long a, const BigComplex& b);
BigComplex operator/(long a, const BigComplex& b);

BigReal abs(const BigComplex& z);
/// |z|^2
BigReal norm(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// exp(z) - 1 without cancellation near z = 0.
BigComplex expm1(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
/// Principal branch, exp(e * log z).
BigComplex pow(const BigComplex& z, const BigComplex& e);
BigComplex pow(const BigComplex& z, long n);

/// Working precision and accuracy targets shared by every analytic module.
struct PrecisionPolicy {
    int precision_bits = kDefaultPrecisionBits;
    double target_abs_error = 1e-32;
    double target_rel_error = 1e-32;

    /// Default targets (1e-32) raised to 2^-(bits-8) when the precision cannot carry them.
    static PrecisionPolicy with_bits(int bits);

    /// Throws InvalidParameter when the invariants do not hold.
    void validate() const;
    /// Smallest meaningful relative step at this precision, 2^-precision_bits.
    double epsilon() const;
    /// Acceptance threshold for a value of magnitude `scale`.
    double tolerance(double scale) const;
};

/// Number of significant decimal digits printed for `bits` of precision, plus one guard digit.
int decimal_digits(int bits);

}  // namespace hyperzeta
