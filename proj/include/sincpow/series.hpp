#pragma once

#include <vector>

#include "sincpow/exact.hpp"
#include "sincpow/rational.hpp"

namespace sincpow {

/// Truncated Maclaurin series over Gaussian rationals. The order is explicit:
/// a zero series of order m is distinct from one of order m', and trailing
/// zero coefficients are retained.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order)
        : order_(order), coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw InvalidDomain("series order must be >= 0");
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }

    int order() const { return order_; }

    const GaussianRational& coeff(int j) const {
        check_index(j);
        return coeffs_[static_cast<size_t>(j)];
    }
    void set_coeff(int j, GaussianRational v) {
        check_index(j);
        coeffs_[static_cast<size_t>(j)] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        if (o.order_ != order_) throw InvalidDomain("series order mismatch in addition");
        for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

    TruncatedSeries scaled(const GaussianRational& s) const {
        TruncatedSeries r(order_);
        for (size_t j = 0; j < coeffs_.size(); ++j) r.coeffs_[j] = coeffs_[j] * s;
        return r;
    }

    /// Product truncated at min(order a, order b); coefficients up to that
    /// order are exact (truncation algebra mod x^{order+1}).
    friend TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int m = a.order_ < b.order_ ? a.order_ : b.order_;
        TruncatedSeries r(m);
        for (int j = 0; j <= m; ++j) {
            GaussianRational acc;
            for (int i = 0; i <= j; ++i) acc += a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j - i)];
            r.coeffs_[static_cast<size_t>(j)] = std::move(acc);
        }
        return r;
    }

    TruncatedSeries truncated(int m) const {
        if (m > order_) throw InvalidDomain("cannot extend a truncated series");
        TruncatedSeries r(m);
        for (int j = 0; j <= m; ++j) r.coeffs_[static_cast<size_t>(j)] = coeffs_[static_cast<size_t>(j)];
        return r;
    }

    /// Horner evaluation in double complex arithmetic.
    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc = 0.0;
        for (size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j].to_complex();
        return acc;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    void check_index(int j) const {
        if (j < 0 || j > order_) throw InvalidDomain("series coefficient index out of range");
    }

    int order_;
    std::vector<GaussianRational> coeffs_;
};

/// Series of P_m(scale * x), where P_m is the order-m Maclaurin polynomial of
/// e^x and P_{-1} = 0 (returned as the zero series of order 0).
inline TruncatedSeries maclaurin_exp(int m, const GaussianRational& scale) {
    if (m < -1) throw InvalidDomain("maclaurin_exp requires m >= -1");
    if (m == -1) return TruncatedSeries::zero(0);
    TruncatedSeries s(m);
    GaussianRational c(Rational(1)); // scale^j / j!
    s.set_coeff(0, c);
    for (int j = 1; j <= m; ++j) {
        c *= scale;
        c /= Rational(j);
        s.set_coeff(j, c);
    }
    return s;
}

/// Maclaurin series of sin x through x^order, exact.
inline TruncatedSeries sin_series(int order) {
    TruncatedSeries s(order);
    Rational c(1); // (-1)^m / (2m+1)!
    for (int j = 1; j <= order; j += 2) {
        if (j > 1) c /= Rational(BigInt(-(j - 1)) * j);
        s.set_coeff(j, GaussianRational(c));
    }
    return s;
}

/// Maclaurin series of sin^n x through x^order, by exact repeated squaring of
/// the sine series. All-zero whenever order < n (zero of order n at 0).
inline TruncatedSeries sin_pow_series(int n, int order) {
    if (n < 1) throw InvalidDomain("sin_pow_series requires n >= 1");
    if (order < 0) throw InvalidDomain("sin_pow_series requires order >= 0");
    TruncatedSeries base = sin_series(order);
    TruncatedSeries acc(order);
    acc.set_coeff(0, GaussianRational(Rational(1)));
    int e = n;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return acc;
}

/// One term of the expansion sin^n x = sum_k coeff_k e^{i frequency_k x}.
struct ExponentialTerm {
    GaussianRational coeff;
    long long frequency = 0;
};

/// The n+1 pairs ((-1)^k C(n,k) / (2i)^n, n-2k) for k = 0..n.
inline std::vector<ExponentialTerm> sin_pow_exponential_coeffs(int n) {
    if (n < 1) throw InvalidDomain("sin_pow_exponential_coeffs requires n >= 1");
    // (2i)^{-n} = 2^{-n} i^{-n}
    const GaussianRational inv_2i_n =
        GaussianRational::i_power(-n) * GaussianRational(Rational(1, pow_int(BigInt(2), n)));
    std::vector<ExponentialTerm> terms;
    terms.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        GaussianRational c = inv_2i_n * GaussianRational(Rational(binomial(n, k) * parity_sign(k)));
        terms.push_back({std::move(c), n - 2LL * k});
    }
    return terms;
}

/// Sum over the full range k = 0..n of (-1)^k C(n,k) f(n-2k).
template <class F>
GaussianRational full_range_sum(int n, F&& f) {
    GaussianRational acc;
    for (int k = 0; k <= n; ++k)
        acc += GaussianRational(Rational(binomial(n, k) * parity_sign(k))) * f(n - 2LL * k);
    return acc;
}

/// Same value as full_range_sum, computed over k <= floor((n-1)/2) by pairing
/// k with n-k: the partner contributes (-1)^n f(-(n-2k)) with the same
/// binomial weight, and for even n the self-paired middle term f(0) is added
/// once. This encodes the proof's passage between the two summation ranges.
template <class F>
GaussianRational half_range_folded_sum(int n, F&& f) {
    GaussianRational acc;
    const int mirror = parity_sign(n);
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        const long long freq = n - 2LL * k;
        GaussianRational pair = f(freq) + GaussianRational(Rational(mirror)) * f(-freq);
        acc += GaussianRational(Rational(binomial(n, k) * parity_sign(k))) * pair;
    }
    if (n % 2 == 0)
        acc += GaussianRational(Rational(binomial(n, n / 2) * parity_sign(n / 2))) * f(0);
    return acc;
}

/// Exact x^j coefficient of sum_k coeff_k e^{i freq_k x} over the full range:
/// (1/(2i)^n) sum_k (-1)^k C(n,k) (i(n-2k))^j / j!.
inline GaussianRational exponential_combination_coefficient(int n, int j) {
    if (j < 0) throw InvalidDomain("coefficient index must be >= 0");
    const GaussianRational inv_2i_n =
        GaussianRational::i_power(-n) * GaussianRational(Rational(1, pow_int(BigInt(2), n)));
    const Rational inv_fact(BigInt(1), factorial(j));
    GaussianRational sum = full_range_sum(n, [&](long long freq) {
        return GaussianRational(Rational(0), Rational(freq)).pow(j); // (i freq)^j
    });
    return inv_2i_n * sum * GaussianRational(inv_fact);
}

/// True iff the Gaussian-rational combination
///   (1/(2i)^n) sum_{k=0..n} (-1)^k C(n,k) P_{q-2}(i(n-2k) x)
/// is the identically-zero series of order q-2. Holds for all n >= q >= 1.
inline bool maclaurin_combination_is_zero(int n, int q) {
    if (n < q || q < 1) throw InvalidDomain("requires n >= q >= 1");
    const int m = q - 2;
    TruncatedSeries total = TruncatedSeries::zero(m >= 0 ? m : 0);
    for (const auto& term : sin_pow_exponential_coeffs(n)) {
        GaussianRational scale(Rational(0), Rational(term.frequency)); // i * freq
        total += maclaurin_exp(m, scale).scaled(term.coeff);
    }
    return total.is_zero();
}

} // namespace sincpow
