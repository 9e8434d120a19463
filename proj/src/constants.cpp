#include "hyperzeta/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "hyperzeta/combinatorics.hpp"
#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

// Cutoff N with e^(-2 pi N) comfortably below 2^-bits: the Euler-Maclaurin
// terms for both sums bottom out near that size.
long cutoff_for(int bits) { return static_cast<long>(std::ceil(bits * 0.6931471805599453 / (2 * M_PI))) + 12; }

BigReal euler_gamma_uncached(int bits) {
    const int work = bits + 32;
    const long N = cutoff_for(work);
    BigReal acc(work);
    for (long n = N; n >= 1; --n) acc += 1L / BigReal(n, work);
    const BigReal bigN(N, work);
    acc -= log(bigN);
    acc -= 1L / (bigN * 2L);
    const BigReal target = ldexp(BigReal(1L, work), -(bits + 8));
    const BigReal n2 = bigN * bigN;
    BigReal npow = n2;
    for (int j = 1; j < 4 * N; ++j) {
        // + B_{2j} / (2j N^{2j})
        BigReal term = to_real(bernoulli_number(2 * j), work) / (npow * static_cast<long>(2 * j));
        acc += term;
        BigReal next = abs(to_real(bernoulli_number(2 * j + 2), work)) /
                       (npow * n2 * static_cast<long>(2 * j + 2));
        if (next < target) return acc.with_bits(bits);
        npow = npow * n2;
    }
    throw PrecisionUnreachable("Euler-Maclaurin remainder for Euler's constant did not reach target");
}

BigReal zeta_int_uncached(int j, int bits) {
    const int work = bits + 32;
    const long N = cutoff_for(work) + j;
    BigReal acc(work);
    for (long n = N - 1; n >= 1; --n) acc += pow(BigReal(n, work), -static_cast<long>(j));
    const BigReal bigN(N, work);
    acc += pow(bigN, 1L - j) / static_cast<long>(j - 1);
    acc += ldexp(pow(bigN, -static_cast<long>(j)), -1);
    const BigReal target = ldexp(BigReal(1L, work), -(bits + 8));
    // term_i = B_{2i}/(2i)! (j)_{2i-1} N^{-j-2i+1}
    BigReal rising(static_cast<long>(j), work);  // (j)_1
    BigReal npow = pow(bigN, -static_cast<long>(j) - 1);
    const BigReal inv_n2 = 1L / (bigN * bigN);
    for (int i = 1; i < 4 * N; ++i) {
        BigReal term = to_real(bernoulli_number(2 * i), work) / to_real(factorial(2 * i), work) * rising * npow;
        acc += term;
        // (j)_{2i+1} = (j)_{2i-1} (j+2i-1)(j+2i)
        rising = rising * static_cast<long>(j + 2 * i - 1) * static_cast<long>(j + 2 * i);
        npow = npow * inv_n2;
        BigReal next = abs(to_real(bernoulli_number(2 * i + 2), work)) / to_real(factorial(2 * i + 2), work) *
                       rising * npow;
        if (next < target) return acc.with_bits(bits);
    }
    throw PrecisionUnreachable("Euler-Maclaurin remainder for zeta(" + std::to_string(j) +
                               ") did not reach target");
}

template <class Key>
class ConstantCache {
public:
    template <class Fn>
    BigReal get(const Key& key, Fn&& compute) {
        {
            std::lock_guard lock(mutex_);
            auto it = values_.find(key);
            if (it != values_.end()) return it->second;
        }
        BigReal v = compute();
        std::lock_guard lock(mutex_);
        return values_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, BigReal> values_;
};

void check_target(const PrecisionPolicy& p) {
    p.validate();
}

}  // namespace

BigReal euler_gamma(int bits) {
    static ConstantCache<int> cache;
    return cache.get(bits, [bits] { return euler_gamma_uncached(bits); });
}

BigReal zeta_int(int j, int bits) {
    if (j < 2) throw InvalidParameter("zeta_int requires j >= 2", "j");
    static ConstantCache<std::pair<int, int>> cache;
    return cache.get({j, bits}, [j, bits] { return zeta_int_uncached(j, bits); });
}

BigReal const_pi(int bits) { return BigReal::pi(bits); }

BigComplex const_gamma(const PrecisionPolicy& p) {
    check_target(p);
    return BigComplex(euler_gamma(p.precision_bits));
}

BigComplex const_zeta_int(int j, const PrecisionPolicy& p) {
    check_target(p);
    return BigComplex(zeta_int(j, p.precision_bits));
}

}  // namespace hyperzeta
