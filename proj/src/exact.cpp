#include "az/exact.hpp"

#include <mutex>
#include <vector>

namespace az {

std::string Rat::str() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rat(num, den);
}

namespace {
// factorial and harmonic tables grow monotonically under their own locks;
// callers get copies, never references into the tables.
std::mutex fac_mutex;
std::vector<Int> fac_table = {Int(1)};

std::mutex harm_mutex;
std::vector<Rat> harm_table = {Rat(0)};
}  // namespace

Int factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    std::lock_guard lock(fac_mutex);
    while (static_cast<long>(fac_table.size()) <= n) {
        long i = static_cast<long>(fac_table.size());
        fac_table.push_back(Int(fac_table.back() * i));
    }
    return fac_table[static_cast<size_t>(n)];
}

Int binomial(const Int& a, long k) {
    if (k < 0)
        return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int trinomial(long k) {
    return multinomial_equal(3, k);
}

Int multinomial_equal(long parts, long m) {
    if (parts < 1)
        throw std::domain_error("multinomial_equal: need at least one part");
    if (m < 0)
        throw std::domain_error("multinomial_equal: negative m");
    Int r = factorial(parts * m);
    Int d;
    mpz_pow_ui(d.get_mpz_t(), factorial(m).get_mpz_t(), static_cast<unsigned long>(parts));
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    return r;
}

Rat harmonic(long n) {
    if (n < 0)
        throw std::domain_error("harmonic: negative argument");
    std::lock_guard lock(harm_mutex);
    while (static_cast<long>(harm_table.size()) <= n) {
        long i = static_cast<long>(harm_table.size());
        harm_table.push_back(harm_table.back() + Rat(1, i));
    }
    return harm_table[static_cast<size_t>(n)];
}

Rat pow_rat(const Rat& x, long e) {
    if (e < 0) {
        if (x.is_zero())
            throw std::domain_error("pow_rat: zero base with negative exponent");
        return pow_rat(Rat(x.den(), x.num()), -e);
    }
    Rat result(1);
    Rat base = x;
    unsigned long exp = static_cast<unsigned long>(e);
    while (exp > 0) {
        if (exp & 1)
            result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

}  // namespace az
