#pragma once

/*
 * Exact integer and rational arithmetic plus the combinatorial primitives
 * (factorials, generalized binomials, equal-part multinomials, harmonic
 * numbers) that every sequence and congruence in this project is built from.
 *
 * Integers are GMP bignums; rationals are kept normalized at all times:
 * gcd(|num|, den) = 1 and den >= 1.  No floating point anywhere.
 */

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace az {

using Int = mpz_class;

/// Normalized arbitrary-precision fraction.  The denominator is always
/// positive and coprime to the numerator; an integer embeds as den = 1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    // accept GMP integer expression templates (products of binomials etc.)
    template <class E>
    Rat(const __gmp_expr<mpz_t, E>& e) : q_(Int(e)) {}
    template <class E1, class E2>
    Rat(const __gmp_expr<mpz_t, E1>& num, const __gmp_expr<mpz_t, E2>& den)
        : Rat(Int(num), Int(den)) {}

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(a.q_ / b.q_));
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    /// "num/den", or just "num" when den = 1.
    std::string str() const;

    /// Inverse of str(); accepts "num" and "num/den", normalizes.
    static Rat parse(const std::string& s);

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// n!, memoized across calls.  Throws on n < 0.
Int factorial(long n);

/// Generalized binomial: 0 for k < 0, otherwise the falling factorial
/// a(a-1)...(a-k+1)/k!.  Valid for negative a, e.g. C(-1, j) = (-1)^j.
Int binomial(const Int& a, long k);
inline Int binomial(long a, long k) { return binomial(Int(a), k); }

/// Central trinomial-style coefficient C(3k; k,k,k) = (3k)!/(k!)^3.
Int trinomial(long k);

/// Equal-part multinomial (A*m)!/(m!)^A for A >= 1 parts.
Int multinomial_equal(long parts, long m);

/// H_n = sum_{j=1..n} 1/j, H_0 = 0.  Memoized.
Rat harmonic(long n);

/// Exact x^e by repeated squaring; e may be negative (x must be nonzero then).
Rat pow_rat(const Rat& x, long e);

}  // namespace az
