#include "az/padic.hpp"

namespace az {

bool is_prime(long n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

PadicContext::PadicContext(long p_, long k_) : p(p_), k(k_) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("PadicContext: p must be a prime >= 5");
    if (k < 1)
        throw std::domain_error("PadicContext: precision k must be >= 1");
}

Valuation vp(const Rat& x, long p) {
    if (!is_prime(p))
        throw std::domain_error("vp: p must be prime");
    if (x.is_zero())
        return Valuation::infinite();
    Int f(p), scratch;
    long vnum = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.num().get_mpz_t(), f.get_mpz_t()));
    long vden = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.den().get_mpz_t(), f.get_mpz_t()));
    return Valuation::finite(vnum - vden);
}

bool congruent(const Rat& x, const Rat& y, const PadicContext& ctx) {
    return vp(x - y, ctx.p) >= Valuation::finite(ctx.k);
}

Rat fermat_quotient(const Rat& x, long p) {
    if (!is_prime(p))
        throw std::domain_error("fermat_quotient: p must be prime");
    Valuation v = vp(x, p);
    if (v.is_infinite() || v.value() != 0)
        throw std::domain_error("fermat_quotient: x is not a p-adic unit");
    return (pow_rat(x, p - 1) - Rat(1)) / Rat(p);
}

Int reduce_residue(const Rat& x, const PadicContext& ctx) {
    Valuation v = vp(x, ctx.p);
    if (!v.is_infinite() && v.value() < 0)
        throw std::domain_error("reduce_residue: x is not p-integral");
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                  static_cast<unsigned long>(ctx.k));
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), x.den().get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::domain_error("reduce_residue: denominator not invertible");  // unreachable for p-integral x
    Int r = (x.num() * dinv) % modulus;
    if (r < 0)
        r += modulus;
    return r;
}

}  // namespace az
