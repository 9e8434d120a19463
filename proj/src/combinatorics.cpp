#include "hyperzeta/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

void require_nonnegative(int v, const char* name) {
    if (v < 0) throw InvalidParameter(std::string(name) + " must be non-negative", name);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Rows H_k(0..mu_max) for k = 0..k_max via k H_k(mu) = H_k(mu-1) + k H_{k-1}(mu).
std::vector<std::vector<Rational>> harmonic_table(int k_max, int mu_max) {
    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(k_max) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(mu_max) + 1));
    t[0][0] = 1;
    for (int k = 1; k <= k_max; ++k) {
        t[k][0] = 1;
        for (int mu = 1; mu <= mu_max; ++mu) {
            t[k][mu] = t[k - 1][mu] + t[k][mu - 1] / k;
        }
    }
    return t;
}

class HarmonicMemo {
public:
    Rational get(int k, int mu) {
        {
            std::shared_lock lock(mutex_);
            if (k < static_cast<int>(table_.size()) && mu < static_cast<int>(table_[0].size())) {
                return table_[k][mu];
            }
        }
        std::unique_lock lock(mutex_);
        int k_cap = std::max(k, static_cast<int>(table_.size()) - 1);
        int mu_cap = std::max(mu, table_.empty() ? 0 : static_cast<int>(table_[0].size()) - 1);
        // grow geometrically so repeated requests do not rebuild every time
        k_cap = std::min(kHarmonicMemoBound, std::max(k_cap, 2 * static_cast<int>(table_.size())));
        mu_cap = std::min(kHarmonicMemoBound, std::max(mu_cap, 8));
        table_ = harmonic_table(k_cap, mu_cap);
        return table_[k][mu];
    }

private:
    std::shared_mutex mutex_;
    std::vector<std::vector<Rational>> table_;
};

HarmonicMemo& harmonic_memo() {
    static HarmonicMemo memo;
    return memo;
}

class BernoulliCache {
public:
    Rational get(int n) {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(values_.size()) <= n) {
            const int m = static_cast<int>(values_.size());
            if (m == 0) {
                values_.emplace_back(1);
                continue;
            }
            // sum_{j=0}^{m} C(m+1, j) B_j = 0
            Rational acc = 0;
            for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[j];
            values_.push_back(-acc / Rational(m + 1));
        }
        return values_[n];
    }

private:
    std::mutex mutex_;
    std::vector<Rational> values_;
};

}  // namespace

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    const int n = std::min(a.order(), b.order());
    RationalSeries out{std::vector<Rational>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; i + j < n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

RationalSeries inverse(const RationalSeries& a) {
    if (a.order() == 0) return a;
    if (a.coeffs[0] == 0) throw DivisionByZeroSeries("rational series has zero constant term");
    const int n = a.order();
    RationalSeries out{std::vector<Rational>(static_cast<std::size_t>(n))};
    out.coeffs[0] = 1 / a.coeffs[0];
    for (int i = 1; i < n; ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j) acc += a.coeffs[j] * out.coeffs[i - j];
        out.coeffs[i] = -acc * out.coeffs[0];
    }
    return out;
}

Rational multi_harmonic(int k, int mu) {
    require_nonnegative(k, "k");
    require_nonnegative(mu, "mu");
    if (mu == 0) return 1;
    if (k == 0) return 0;
    if (k <= kHarmonicMemoBound && mu <= kHarmonicMemoBound) return harmonic_memo().get(k, mu);
    return harmonic_table(k, mu)[k][mu];
}

Rational harmonic(int N) {
    require_nonnegative(N, "N");
    Rational acc = 0;
    for (int i = 1; i <= N; ++i) acc += Rational(1, i);
    return acc;
}

Rational coeff_c(int m, int mu, int k) {
    require_nonnegative(m, "m");
    require_nonnegative(k, "k");
    if (mu < 0 || mu > m) {
        throw IndexError("coeff_c requires 0 <= mu <= m (mu=" + std::to_string(mu) +
                             ", m=" + std::to_string(m) + ")",
                         "mu");
    }
    Rational sign_over_fact = make_rational(k % 2 == 0 ? BigInt(1) : BigInt(-1), factorial(k));
    Rational falling = make_rational(factorial(m), factorial(m - mu));
    return sign_over_fact * falling * multi_harmonic(k, mu);
}

Rational pochhammer(const Rational& a, int k) {
    require_nonnegative(k, "k");
    Rational acc = 1;
    for (int j = 0; j < k; ++j) acc *= a + j;
    return acc;
}

RationalSeries gen_F(int k, int order) {
    require_nonnegative(k, "k");
    if (order < 1) throw InvalidParameter("order must be positive", "order");
    RationalSeries prod{std::vector<Rational>(static_cast<std::size_t>(order))};
    prod.coeffs[0] = 1;
    for (int j = 1; j <= k; ++j) {
        RationalSeries factor{std::vector<Rational>(static_cast<std::size_t>(order))};
        factor.coeffs[0] = 1;
        if (order > 1) factor.coeffs[1] = Rational(-1, j);
        prod = prod * factor;
    }
    return inverse(prod);
}

BigInt factorial(int n) {
    require_nonnegative(n, "n");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt stirling1_unsigned(int n, int k) {
    require_nonnegative(n, "n");
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row{1};  // n = 0
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> next(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j] * i;
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Rational bernoulli_number(int n) {
    require_nonnegative(n, "n");
    static BernoulliCache cache;
    return cache.get(n);
}

BigReal to_real(const Rational& q, int bits) {
    BigReal r(bits);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal to_real(const BigInt& z, int bits) {
    BigReal r(bits);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

}  // namespace hyperzeta
