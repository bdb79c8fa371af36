#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "sincpow/bigint.hpp"
#include "sincpow/errors.hpp"
#include "sincpow/rational.hpp"

namespace sincpow {

/// The index pair (n, q) of I(n,q) = integral of sin^n x / x^q over (0, inf).
struct IntegralSpec {
    int n = 1;
    int q = 1;

    bool in_domain() const { return n >= q && q >= 1; }
    // q = 1 with even n diverges at infinity; everything else in the domain converges.
    bool convergent() const { return in_domain() && (q >= 2 || n % 2 == 1); }

    void validate() const {
        if (!in_domain()) throw InvalidDomain("requires n >= q >= 1");
        if (!convergent()) throw DivergentIntegral("divergent: q=1 requires odd n");
    }

    friend bool operator==(const IntegralSpec& a, const IntegralSpec& b) {
        return a.n == b.n && a.q == b.q;
    }
    friend bool operator<(const IntegralSpec& a, const IntegralSpec& b) {
        return a.n != b.n ? a.n < b.n : a.q < b.q;
    }
};

/// Symbolic value of I(n,q): either (rational) * pi, or a finite rational
/// combination of logarithms of integer bases.
///
/// Log combinations are normalized: base 1 dropped, equal bases merged,
/// zero coefficients removed, bases kept in increasing order.
class ExactValue {
public:
    enum class Kind { PiMultiple, LogCombination };

    static ExactValue pi_multiple(Rational coeff) {
        ExactValue v;
        v.kind_ = Kind::PiMultiple;
        v.pi_coeff_ = std::move(coeff);
        return v;
    }

    static ExactValue log_combination(const std::vector<std::pair<long long, Rational>>& terms) {
        ExactValue v;
        v.kind_ = Kind::LogCombination;
        for (const auto& [base, coeff] : terms) {
            if (base < 1) throw InvalidDomain("log base must be a positive integer");
            if (base == 1) continue; // log 1 = 0
            v.log_terms_[base] += coeff;
        }
        std::erase_if(v.log_terms_, [](const auto& t) { return t.second.is_zero(); });
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_pi_multiple() const { return kind_ == Kind::PiMultiple; }

    const Rational& pi_coefficient() const {
        if (kind_ != Kind::PiMultiple) throw InvalidDomain("not a pi multiple");
        return pi_coeff_;
    }
    const std::map<long long, Rational>& log_terms() const {
        if (kind_ != Kind::LogCombination) throw InvalidDomain("not a log combination");
        return log_terms_;
    }

    bool is_zero() const {
        return kind_ == Kind::PiMultiple ? pi_coeff_.is_zero() : log_terms_.empty();
    }

    /// Double-precision evaluation (used for oracle comparisons).
    double to_double() const {
        if (kind_ == Kind::PiMultiple) return pi_coeff_.to_double() * std::numbers::pi;
        double acc = 0.0;
        for (const auto& [base, coeff] : log_terms_)
            acc += coeff.to_double() * std::log(static_cast<double>(base));
        return acc;
    }

    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::PiMultiple) return a.pi_coeff_ == b.pi_coeff_;
        return a.log_terms_ == b.log_terms_;
    }
    friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

private:
    Kind kind_ = Kind::PiMultiple;
    Rational pi_coeff_;
    std::map<long long, Rational> log_terms_;
};

/// C(n, k), exact.
inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) throw InvalidDomain("binomial requires 0 <= k <= n");
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

/// Sum over k = 0..floor((n-1)/2) of (-1)^k C(n,k) (n-2k)^{q-1}.
/// Vanishes exactly whenever n > q >= 2 and n + q is odd.
inline BigInt alternating_sum(int n, int q) {
    if (n < 1 || q < 1) throw InvalidDomain("alternating_sum requires n >= 1 and q >= 1");
    BigInt total = 0;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        BigInt term = binomial(n, k) * pow_int(BigInt(n - 2 * k), q - 1);
        total += parity_sign(k) * term;
    }
    return total;
}

/// H_m = 1 + 1/2 + ... + 1/m (H_0 = 0).
inline Rational harmonic(int m) {
    if (m < 0) throw InvalidDomain("harmonic requires m >= 0");
    Rational h(0);
    for (int k = 1; k <= m; ++k) h += Rational(1, k);
    return h;
}

/// c_q = i^{q-1} H_{q-1} / (q-1)!, with c_1 = 0.
inline GaussianRational c_constant(int q) {
    if (q < 1) throw InvalidDomain("c_constant requires q >= 1");
    if (q == 1) return GaussianRational(Rational(0));
    GaussianRational unit = GaussianRational::i_power(q - 1);
    Rational mag = harmonic(q - 1) / Rational(factorial(q - 1));
    return unit * GaussianRational(mag);
}

/// Exact value of I(n,q).
///
/// n + q even:  (-1)^{(q-n)/2} / (2^n (q-1)!) * alternating_sum(n, q), times pi.
/// n + q odd:   sum over k of (-1)^{(q-n+1)/2} (-1)^k C(n,k) (n-2k)^{q-1}
///              / (2^{n-1} (q-1)!) * log(n-2k), with log 1 dropped.
inline ExactValue closed_form(const IntegralSpec& spec) {
    spec.validate();
    const int n = spec.n, q = spec.q;
    const BigInt fact = factorial(q - 1);
    if ((n + q) % 2 == 0) {
        Rational coeff(alternating_sum(n, q) * parity_sign((q - n) / 2),
                       pow_int(BigInt(2), n) * fact);
        return ExactValue::pi_multiple(coeff);
    }
    const int lead = parity_sign((q - n + 1) / 2);
    const BigInt denom = pow_int(BigInt(2), n - 1) * fact;
    std::vector<std::pair<long long, Rational>> terms;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        const long long base = n - 2 * k;
        BigInt num = binomial(n, k) * pow_int(BigInt(base), q - 1);
        terms.emplace_back(base, Rational(num * (lead * parity_sign(k)), denom));
    }
    return ExactValue::log_combination(terms);
}

inline ExactValue closed_form(int n, int q) { return closed_form(IntegralSpec{n, q}); }

} // namespace sincpow
