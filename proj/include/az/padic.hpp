#pragma once

/*
 * p-adic valuations over exact rationals, the congruence predicate
 * x = y (mod p^k)  <=>  v_p(x - y) >= k, Fermat quotients, and canonical
 * residue reduction for reporting witnesses.
 *
 * Congruences are always decided by exact subtraction and valuation, never
 * by fixed-modulus arithmetic: the sums compared in the checks routinely
 * contain terms of negative valuation that cancel.
 */

#include "az/exact.hpp"

namespace az {

/// Deterministic trial-division primality (desk-scale inputs).
bool is_prime(long n);

/// v_p of a rational: a finite integer (possibly negative), or infinite
/// exactly for the rational 0.  Infinite compares greater than every
/// finite valuation.
class Valuation {
public:
    static Valuation finite(long v) { return Valuation(v, false); }
    static Valuation infinite() { return Valuation(0, true); }

    bool is_infinite() const { return inf_; }
    long value() const {
        if (inf_)
            throw std::logic_error("Valuation: value() of infinite");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    Valuation(long v, bool inf) : v_(v), inf_(inf) {}
    long v_;
    bool inf_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

/// A prime p >= 5 together with a target precision k >= 1; fixes the
/// modulus p^k of the congruence predicate.
struct PadicContext {
    long p;
    long k;
    PadicContext(long p_, long k_);
};

/// v_p(x) = v_p(num) - v_p(den); infinite for x = 0.
Valuation vp(const Rat& x, long p);
inline Valuation vp(const Int& x, long p) { return vp(Rat(x), p); }

/// x = y (mod p^k), i.e. v_p(x - y) >= k.
bool congruent(const Rat& x, const Rat& y, const PadicContext& ctx);
inline bool congruent(const Rat& x, const Rat& y, long p, long k) {
    return congruent(x, y, PadicContext(p, k));
}

/// Fermat quotient q_p(x) = (x^{p-1} - 1)/p; x must be a p-adic unit.
Rat fermat_quotient(const Rat& x, long p);

/// The unique r in [0, p^k) with x = r (mod p^k); x must be p-integral.
Int reduce_residue(const Rat& x, const PadicContext& ctx);

}  // namespace az
