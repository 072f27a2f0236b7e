#include "az/checks.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace az {

namespace {

std::string format_params(const ParamMap& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first)
            os << ' ';
        os << k << '=' << v;
        first = false;
    }
    return os.str();
}

void require_prime(long p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("p must be a prime >= 5, got " + std::to_string(p));
}

CheckCase make_case(std::string id, ParamMap params) {
    return CheckCase{std::move(id), std::move(params)};
}

CheckOutcome congruence_outcome(CheckCase c, std::string part, const Rat& lhs, const Rat& rhs,
                                long p, long required, bool conjectural,
                                std::string note = "") {
    CheckOutcome o;
    o.part = std::move(part);
    o.lhs = lhs;
    o.rhs = rhs;
    o.required = Valuation::finite(required);
    o.achieved = vp(lhs - rhs, p);
    o.passed = *o.achieved >= o.required;
    o.conjectural = conjectural;
    o.note = std::move(note);
    if (conjectural && !o.passed) {
        std::string flag = "conjecture violated at " + format_params(c.params);
        o.note = o.note.empty() ? flag : o.note + "; " + flag;
    }
    o.kase = std::move(c);
    return o;
}

CheckOutcome exact_outcome(CheckCase c, std::string part, const Rat& lhs, const Rat& rhs,
                           std::optional<long> p, std::string note = "") {
    CheckOutcome o;
    o.kase = std::move(c);
    o.part = std::move(part);
    o.lhs = lhs;
    o.rhs = rhs;
    o.required = Valuation::infinite();
    o.passed = lhs == rhs;
    if (o.passed)
        o.achieved = Valuation::infinite();
    else if (p)
        o.achieved = vp(lhs - rhs, *p);
    o.note = std::move(note);
    return o;
}

Rat sign_rat(long exponent) { return exponent % 2 != 0 ? Rat(-1) : Rat(1); }

Rat three_pow(long e) { return pow_rat(Rat(3), e); }

}  // namespace

std::vector<CheckOutcome> check_main(long p, long n) {
    require_prime(p);
    if (n < 1)
        throw std::domain_error("check_main: n must be >= 1");
    CheckCase c = make_case("MAIN_SUPERCONGRUENCE", {{"p", p}, {"n", n}});
    return {congruence_outcome(c, "", Rat(az_a(0, p * n)), Rat(az_a(0, n)), p, 3, false)};
}

std::vector<CheckOutcome> check_higher(long p, long r, long n) {
    require_prime(p);
    if (r < 1)
        throw std::domain_error("check_higher: r must be >= 1");
    if (n < 1)
        throw std::domain_error("check_higher: n must be >= 1");
    long hi = n, lo = n;
    for (long t = 0; t < r; ++t) {
        if (hi > 1000000 / p)
            throw std::domain_error("check_higher: p^r n too large for desk scale");
        hi *= p;
        if (t < r - 1)
            lo *= p;
    }
    CheckCase c = make_case("HIGHER", {{"p", p}, {"r", r}, {"n", n}});
    bool conjectural = r >= 2;
    std::string note = conjectural ? "strengthened exponent 3r, conjectural" : "";
    return {congruence_outcome(c, "", Rat(az_a(0, hi)), Rat(az_a(0, lo)), p, 3 * r,
                               conjectural, note)};
}

std::vector<CheckOutcome> check_ai_vanish(long p, long i, long n) {
    require_prime(p);
    if (i < 1 || 3 * i >= p)
        throw std::domain_error("check_ai_vanish: hypothesis requires 0 < i < p/3");
    if (n < 1)
        throw std::domain_error("check_ai_vanish: n must be >= 1");
    CheckCase c = make_case("THM31_VANISH", {{"p", p}, {"i", i}, {"n", n}});
    return {congruence_outcome(c, "", Rat(az_a(i, p * n)), Rat(0), p, 2, false)};
}

std::vector<CheckOutcome> check_lucas(long p, long b, long c, long d, long e) {
    require_prime(p);
    if (b < 0 || c < 0 || d < 0 || e < 0)
        throw std::domain_error("check_lucas: digits must be nonnegative");
    if (c >= p || e >= p)
        throw std::domain_error("check_lucas: base-p digits c, e must be < p");
    CheckCase cc = make_case("LUCAS", {{"p", p}, {"b", b}, {"c", c}, {"d", d}, {"e", e}});
    std::vector<CheckOutcome> out;
    out.push_back(congruence_outcome(cc, "mod_p",
                                     Rat(binomial(p * b + c, p * d + e)),
                                     Rat(binomial(b, d) * binomial(c, e)), p, 1, false));
    out.push_back(congruence_outcome(cc, "mod_p3", Rat(binomial(p * b, p * d)),
                                     Rat(binomial(b, d)), p, 3, false));
    return out;
}

std::vector<CheckOutcome> check_gessel(long p, long j) {
    require_prime(p);
    if (j <= 0 || j >= p)
        throw std::domain_error("check_gessel: hypothesis requires 0 < j < p");
    CheckCase c = make_case("GESSEL", {{"p", p}, {"j", j}});
    Rat rhs = sign_rat(j - 1) * Rat(p, j);
    return {congruence_outcome(c, "", Rat(binomial(p, j)), rhs, p, 2, false)};
}

std::vector<CheckOutcome> check_harmonic_identity(long n) {
    if (n < 1)
        throw std::domain_error("check_harmonic_identity: n must be >= 1");
    Rat lhs(0);
    for (long k = 1; k <= n; ++k)
        lhs += sign_rat(k) * Rat(binomial(n, k) * binomial(n + k, k), Int(k));
    Rat rhs = Rat(-2) * harmonic(n);
    CheckCase c = make_case("IDH", {{"n", n}});
    return {exact_outcome(c, "", lhs, rhs, std::nullopt)};
}

std::vector<CheckOutcome> check_partial_fraction(long n, const Rat& y) {
    if (n < 1)
        throw std::domain_error("check_partial_fraction: n must be >= 1");
    for (long t = 0; t <= n; ++t)
        if (y == Rat(-t))
            throw std::domain_error("check_partial_fraction: y hits a pole in {0,-1,...,-n}");
    Rat lhs(0);
    for (long k = 0; k <= n; ++k)
        lhs += sign_rat(k) * Rat(binomial(n, k) * binomial(n + k, k)) / (Rat(k) + y);
    Rat rhs = sign_rat(n) / y;
    for (long j = 1; j <= n; ++j)
        rhs *= (y - Rat(j)) / (y + Rat(j));
    CheckCase c = make_case(
        "MORT", {{"n", n}, {"ynum", y.num().get_si()}, {"yden", y.den().get_si()}});
    return {exact_outcome(c, "", lhs, rhs, std::nullopt)};
}

std::vector<CheckOutcome> check_floor_binomial(long p, long k) {
    require_prime(p);
    if (k < 0 || 3 * k >= p)
        throw std::domain_error("check_floor_binomial: hypothesis requires 0 <= k < p/3");
    long f = p / 3;
    Rat lhs = sign_rat(k) * Rat(binomial(f, k) * binomial(f + k, k));
    Rat rhs = Rat(trinomial(k)) * three_pow(-3 * k);
    CheckCase c = make_case("FLOOR_BINOMIAL", {{"p", p}, {"k", k}});
    return {congruence_outcome(c, "", lhs, rhs, p, 1, false)};
}

std::vector<CheckOutcome> check_trinomial_sums(long p, long i) {
    require_prime(p);
    if (i <= 0 || 3 * i >= p)
        throw std::domain_error("check_trinomial_sums: hypothesis requires 0 < i < p/3");
    long f = p / 3;
    Rat k_full(0), k_trunc(0), ki_full(0), ki_trunc(0);
    for (long k = 1; k <= p - 1; ++k) {
        Rat t = Rat(trinomial(k)) * three_pow(-3 * k) / Rat(k);
        k_full += t;
        if (k <= f)
            k_trunc += t;
    }
    for (long k = 0; k <= p - 1; ++k) {
        Rat t = Rat(trinomial(k)) * three_pow(-3 * k) / Rat(k + i);
        ki_full += t;
        if (k <= f)
            ki_trunc += t;
    }
    CheckCase c = make_case("TRINOMIAL_SUMS", {{"p", p}, {"i", i}});
    std::vector<CheckOutcome> out;
    out.push_back(congruence_outcome(c, "k_full_vs_truncated", k_full, k_trunc, p, 1, false));
    out.push_back(congruence_outcome(c, "k_truncated_vs_3qp3", k_trunc,
                                     Rat(3) * fermat_quotient(Rat(3), p), p, 1, false));
    out.push_back(congruence_outcome(c, "ki_full_vs_truncated", ki_full, ki_trunc, p, 1, false));
    out.push_back(congruence_outcome(c, "ki_truncated_vs_zero", ki_trunc, Rat(0), p, 1, false));
    return out;
}

std::vector<CheckOutcome> check_reduction(long p, long m, long n) {
    require_prime(p);
    if (m < 0 || n < 1)
        throw std::domain_error("check_reduction: need m >= 0 and n >= 1");
    CheckCase c = make_case("REDUCTION", {{"p", p}, {"m", m}, {"n", n}});
    std::vector<CheckOutcome> out;
    out.push_back(congruence_outcome(c, "q_form", reduction_lhs(p, m, n, false),
                                     reduction_rhs(p, m, n, RhsForm::QForm), p, 3, false));
    out.push_back(congruence_outcome(c, "power_form", reduction_lhs(p, m, n, true),
                                     reduction_rhs(p, m, n, RhsForm::PowerForm), p, 3, false));
    return out;
}

namespace {

long need(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("missing parameter " + name);
    return it->second;
}

}  // namespace

std::vector<CheckOutcome> check_lemma51(long p, Lemma51Part part, const ParamMap& params) {
    require_prime(p);
    switch (part) {
        case Lemma51Part::L1a:
        case Lemma51Part::L1b: {
            long a = need(params, "a"), b = need(params, "b"), j = need(params, "j");
            if (!(a > b && b >= 0))
                throw std::domain_error("lemma51 L1: hypothesis requires a > b >= 0");
            if (j <= 0 || j >= p)
                throw std::domain_error("lemma51 L1: hypothesis requires 0 < j < p");
            bool first = part == Lemma51Part::L1a;
            CheckCase c = make_case(first ? "LEMMA51_L1A" : "LEMMA51_L1B",
                                    {{"p", p}, {"a", a}, {"b", b}, {"j", j}});
            Rat lhs(binomial(a * p, first ? b * p + j : b * p - j));
            Rat rhs = Rat(first ? a - b : b) * Rat(binomial(a, b) * binomial(p, j));
            return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
        }
        case Lemma51Part::L2: {
            long m = need(params, "m"), n = need(params, "n"), r = need(params, "r");
            if (m < 0 || n < 1 || r < 0 || r >= p)
                throw std::domain_error("lemma51 L2: need m >= 0, n >= 1, 0 <= r < p");
            CheckCase c = make_case("LEMMA51_L2", {{"p", p}, {"m", m}, {"n", n}, {"r", r}});
            Rat lhs(binomial(p * (n + m) + r, p * m + r));
            Rat rhs = Rat(binomial(n + m, m)) *
                      (Rat(1) + Rat(n) * (Rat(binomial(p + r, r)) - Rat(1)));
            return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
        }
        case Lemma51Part::L3: {
            long m = need(params, "m"), r = need(params, "r");
            if (m < 0 || r < 0 || r >= p)
                throw std::domain_error("lemma51 L3: need m >= 0 and 0 <= r < p");
            CheckCase c = make_case("LEMMA51_L3", {{"p", p}, {"m", m}, {"r", r}});
            Rat lhs(binomial(2 * p * m + 2 * r, p * m + r));
            Rat rhs = Rat(binomial(2 * m, m)) *
                      (Rat(binomial(2 * r, r)) + Rat(2 * m) * Rat(binomial(p + 2 * r, r)) -
                       Rat(2 * m) * Rat(binomial(2 * r, r)));
            return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
        }
        case Lemma51Part::L4: {
            long m = need(params, "m"), r = need(params, "r");
            if (m < 0 || r < 0 || r >= p)
                throw std::domain_error("lemma51 L4: need m >= 0 and 0 <= r < p");
            CheckCase c = make_case("LEMMA51_L4", {{"p", p}, {"m", m}, {"r", r}});
            Rat lhs(binomial(3 * p * m + 3 * r, p * m + r));
            Rat rhs = Rat(binomial(3 * m, m)) *
                          (Rat(2 * m) * Rat(binomial(p + 3 * r, r)) +
                           Rat(m) * Rat(binomial(p + 3 * r, 2 * r)) -
                           Rat(3 * m - 1) * Rat(binomial(3 * r, r))) +
                      Rat(binomial(3 * m, m - 1)) *
                          (Rat(binomial(3 * r, p + r)) +
                           Rat(m - 1) * Rat(binomial(p + 3 * r, 2 * p + r)) -
                           Rat(3 * m) * Rat(binomial(3 * r, p + r)));
            return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
        }
        case Lemma51Part::L5V2: {
            long m = need(params, "m"), n = need(params, "n"), r = need(params, "r");
            if (m < 0 || n < 1 || r <= 0 || r >= p)
                throw std::domain_error("lemma51 L5V2: need m >= 0, n >= 1, 0 < r < p");
            long eps = (3 * r) / p;
            CheckCase c = make_case("LEMMA51_L5V2", {{"p", p}, {"m", m}, {"n", n}, {"r", r}});
            Rat lhs(binomial(p * n, 3 * p * m + 3 * r));
            Rat bracket = Rat(n) * Rat(binomial(p - 1, 3 * r - 1 - eps * p)) +
                          sign_rat(r - eps) * Rat(n - 1);
            Rat rhs = Rat(Int(p) * n, Int(3 * p * m + 3 * r)) *
                      Rat(binomial(n - 1, 3 * m + eps)) * bracket;
            return {congruence_outcome(c, "", lhs, rhs, p, 3, false)};
        }
    }
    throw std::logic_error("check_lemma51: unknown part");
}

std::vector<CheckOutcome> check_sagan(long p, SaganPart part, const ParamMap& params) {
    require_prime(p);
    if (part == SaganPart::EQ26) {
        long n = need(params, "n"), k1 = need(params, "k1"), k0 = need(params, "k0");
        if (n < 1 || k1 < 0)
            throw std::domain_error("sagan EQ26: need n >= 1 and k1 >= 0");
        if (k0 <= 0 || k0 >= p)
            throw std::domain_error("sagan EQ26: digit hypothesis requires 0 < k0 < p");
        CheckCase c = make_case("SAGAN_EQ26", {{"p", p}, {"n", n}, {"k1", k1}, {"k0", k0}});
        Rat lhs(binomial(n * p, k1 * p + k0));
        Rat rhs = Rat(n) * Rat(binomial(n - 1, k1) * binomial(p, k0));
        return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
    }
    long n1 = need(params, "n1"), n0 = need(params, "n0");
    long k1 = need(params, "k1"), k0 = need(params, "k0");
    if (n1 < 0 || k1 < 0)
        throw std::domain_error("sagan EQ27: need n1 >= 0 and k1 >= 0");
    if (n0 <= 0 || n0 >= p || k0 <= 0 || k0 >= p)
        throw std::domain_error("sagan EQ27: digit hypothesis requires 0 < n0, k0 < p");
    CheckCase c = make_case("SAGAN_EQ27",
                            {{"p", p}, {"n1", n1}, {"n0", n0}, {"k1", k1}, {"k0", k0}});
    Rat lhs(binomial(n1 * p + n0, k1 * p + k0));
    Rat rhs = Rat(binomial(n1, k1)) *
              (Rat(1 + n1) * Rat(binomial(n0, k0)) -
               Rat(n1 + k1) * Rat(binomial(n0 - p, k0)) -
               Rat(k1) * Rat(binomial(n0 - p, k0 + p)));
    return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
}

std::vector<CheckOutcome> check_cor52(long p, long m, long r, long parts) {
    require_prime(p);
    if (m < 0 || r < 0 || r >= p)
        throw std::domain_error("check_cor52: need m >= 0 and 0 <= r < p");
    if (parts < 1)
        throw std::domain_error("check_cor52: need at least one part");
    CheckCase c = make_case("COR52", {{"p", p}, {"m", m}, {"r", r}, {"A", parts}});
    Rat lhs(multinomial_equal(parts, p * m + r));
    Rat rhs = Rat(multinomial_equal(parts, m) * multinomial_equal(parts, r)) *
              (Rat(1) + Rat(parts) * Rat(p) * Rat(m) * (harmonic(parts * r) - harmonic(r)));
    return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
}

std::vector<CheckOutcome> check_cor54(long p, long m, long n, long r) {
    require_prime(p);
    if (m < 0 || n < 1 || r < 0 || r >= p)
        throw std::domain_error("check_cor54: need m >= 0, n >= 1, 0 <= r < p");
    CheckCase c = make_case("COR54", {{"p", p}, {"m", m}, {"n", n}, {"r", r}});
    Rat lhs(binomial(p * (n + m) + r, p * m + r));
    Rat rhs = Rat(binomial(n + m, m)) * (Rat(1) + Rat(p) * Rat(n) * harmonic(r));
    return {congruence_outcome(c, "", lhs, rhs, p, 2, false)};
}

std::vector<CheckOutcome> check_cor55(long p, long m, long n, long r) {
    require_prime(p);
    if (m < 0 || n < 1 || r <= 0 || r >= p)
        throw std::domain_error("check_cor55: need m >= 0, n >= 1, 0 < r < p");
    long bigN = n - 3 * m;
    Rat branch_factor;
    std::string branch;
    if (3 * r < p) {
        branch_factor = Rat(bigN) * (Rat(-1) + Rat(p) * Rat(n) * harmonic(3 * r - 1));
        branch = "branch 1 (0 < 3r < p)";
    } else if (3 * r < 2 * p) {
        branch_factor = Rat(binomial(bigN, 2)) * Rat(2) *
                        (Rat(1) - Rat(p) * Rat(n) * harmonic(3 * r - 1 - p)) /
                        Rat(3 * m + 1);
        branch = "branch 2 (p < 3r < 2p)";
    } else {
        branch_factor = Rat(binomial(bigN, 3)) * Rat(6) *
                        (Rat(-1) + Rat(p) * Rat(n) * harmonic(3 * r - 1 - 2 * p)) /
                        Rat((3 * m + 1) * (3 * m + 2));
        branch = "branch 3 (2p < 3r < 3p)";
    }
    Rat prefactor = (Rat(p, 3 * r) - Rat(Int(p) * p * m, Int(3) * r * r)) * sign_rat(r) *
                    Rat(binomial(n, 3 * m));
    CheckCase c = make_case("COR55", {{"p", p}, {"m", m}, {"n", n}, {"r", r}});
    Rat lhs(binomial(p * n, 3 * p * m + 3 * r));
    return {congruence_outcome(c, "", lhs, prefactor * branch_factor, p, 3, false, branch)};
}

std::vector<CheckOutcome> check_T(long p, TPart which) {
    require_prime(p);
    Rat q = fermat_quotient(Rat(1, 3), p);
    Rat lhs(0);
    Rat rhs;
    std::string id;
    long required = 1;
    switch (which) {
        case TPart::T1:
            for (long r = 1; r <= p - 1; ++r)
                lhs += Rat(trinomial(r)) * three_pow(-3 * r) / Rat(r);
            rhs = Rat(-3) * q + Rat(3 * p, 2) * q * q;
            id = "T1";
            required = 2;
            break;
        case TPart::T2:
            for (long r = 1; r <= p - 1; ++r)
                lhs += Rat(trinomial(r)) * three_pow(-3 * r) / Rat(Int(r) * r);
            rhs = Rat(-9, 2) * q * q;
            id = "T2";
            break;
        case TPart::T3:
            for (long r = 1; r <= p - 1; ++r)
                lhs += Rat(trinomial(r)) * (harmonic(3 * r) - harmonic(r)) *
                       three_pow(-3 * r) / Rat(r);
            rhs = Rat(0);
            id = "T3";
            break;
    }
    CheckCase c = make_case(id, {{"p", p}});
    return {congruence_outcome(c, "", lhs, rhs, p, required, false)};
}

std::vector<CheckOutcome> check_closecong(long p, long m, long n) {
    require_prime(p);
    if (m < 0 || n < 1 || 3 * m >= n)
        throw std::domain_error("check_closecong: need m >= 0 and 3m < n");
    long bigN = n - 3 * m;
    Rat lhs(0);
    for (long r = 1; r <= p - 1; ++r) {
        Rat br;
        if (3 * r < p)
            br = Rat(-1) + Rat(p) * Rat(n) * harmonic(3 * r - 1);
        else if (3 * r < 2 * p)
            br = Rat(bigN - 1) * (Rat(1) - Rat(p) * Rat(n) * harmonic(3 * r - 1 - p)) /
                 Rat(3 * m + 1);
        else
            br = Rat(bigN - 1) * Rat(bigN - 2) *
                 (Rat(-1) + Rat(p) * Rat(n) * harmonic(3 * r - 1 - 2 * p)) /
                 Rat((3 * m + 1) * (3 * m + 2));
        Rat weight = Rat(1, 3 * r) - Rat(Int(p) * m, Int(3) * r * r);
        lhs += Rat(trinomial(r)) *
               (Rat(1) + Rat(3 * p * m) * (harmonic(3 * r) - harmonic(r))) *
               (Rat(1) + Rat(p) * Rat(n) * harmonic(r)) * weight * br * three_pow(-3 * r);
    }
    Rat q = fermat_quotient(Rat(1, 3), p);
    Rat rhs = q + Rat(Int(p) * (bigN - 1), Int(2)) * q * q;
    CheckCase c = make_case("CLOSECONG", {{"p", p}, {"m", m}, {"n", n}});
    std::string note;
    if ((3 * m + 1) % p == 0 || (3 * m + 2) % p == 0)
        note = "branch denominator (3m+1)(3m+2) is divisible by p; the displayed "
               "congruence can lose a power of p here (the reduction itself still "
               "holds mod p^3)";
    return {congruence_outcome(c, "", lhs, rhs, p, 2, false, note)};
}

std::vector<CheckOutcome> check_conj71(long p, long i, long n) {
    require_prime(p);
    if (i < 1 || n < 1)
        throw std::domain_error("check_conj71: need i >= 1 and n >= 1");
    if (p <= 2 * i)
        throw std::domain_error("check_conj71: hypothesis requires p > 2i");
    CheckCase c = make_case("CONJ71", {{"p", p}, {"i", i}, {"n", n}});
    Rat denom(Int(i) * i * binomial(2 * i - 1, i - 1));
    Rat middle = sign_rat(i - 1) * Rat(az_a(1, p * n)) / denom;
    Rat right = sign_rat(i - 1) * Rat(Int(p) * p) * Rat(binomial(n + 2, 2)) *
                Rat(az_a(1, n)) / denom;
    std::string note;
    {
        Valuation v = vp(middle, p);
        if (!v.is_infinite() && v.value() < 0)
            note = "quotient a_1(pn)/(i^2 C(2i-1,i-1)) is not p-integral";
    }
    std::vector<CheckOutcome> out;
    out.push_back(congruence_outcome(c, "chain1", Rat(az_a(i, p * n)), middle, p, 3, true, note));
    out.push_back(congruence_outcome(c, "chain2", middle, right, p, 3, true));
    return out;
}

std::vector<CheckOutcome> check_b1_chain(long p, long n, long m) {
    require_prime(p);
    if (n < 1 || m < 0)
        throw std::domain_error("check_b1_chain: need n >= 1 and m >= 0");
    CheckCase c = make_case("B1_CHAIN", {{"p", p}, {"n", n}, {"m", m}});
    std::vector<CheckOutcome> out;

    Rat coeff = Rat(1) - Rat(Int(p) * n, Int(3)) -
                Rat(Int(p) * p * (n + 3) * (7 * n + 6), Int(18));
    Rat rhs1 = Rat(Int(p) * p) * Rat(binomial(n + 3, 3)) * az_b(1, n) +
               coeff * Rat(az_a(0, n));
    out.push_back(congruence_outcome(c, "b1_recursion", az_b(1, n * p), rhs1, p, 3, true));

    long bigN = n - 3 * m;
    Rat lhs2(0);
    for (long r = 0; r <= p - 1; ++r) {
        Int num = binomial(3 * p * m + 3 * r, p * m + r) *
                  binomial(2 * p * m + 2 * r, p * m + r) *
                  binomial(p * n, 3 * p * m + 3 * r) *
                  binomial(p * (n + m) + r, p * m + r);
        if (num == 0)
            continue;
        Rat term = Rat(num) * three_pow(-3 * r) / Rat(p * m + r + 1);
        lhs2 += r % 2 != 0 ? -term : term;
    }
    Rat rhs2 = (Rat(Int(p) * p, Int(m + 1)) * Rat(binomial(n + 3, 3)) + coeff) *
               Rat(binomial(3 * m, m) * binomial(2 * m, m) * binomial(n, 3 * m) *
                   binomial(n + m, m)) *
               three_pow(-bigN * (p - 1));
    out.push_back(congruence_outcome(c, "single_sum_m", lhs2, rhs2, p, 3, true));
    return out;
}

std::vector<CheckOutcome> check_D_identities(long p) {
    require_prime(p);
    Rat s1(0), s2(0);
    for (long r = 0; r <= p - 1; ++r) {
        Rat t = Rat(trinomial(r)) * three_pow(-3 * r);
        s1 += t / Rat(r + 1);
        s2 += t / Rat(Int(r + 1) * (r + 1));
    }
    Rat closed = Rat(trinomial(p)) * three_pow(-3 * p);
    Rat rhs1 = Rat(9 * p, 2) * closed;
    Rat rhs2 = Rat(Int(9) * (9 * p + 2), Int(4)) * closed - Rat(9, 2);
    CheckCase c = make_case("D_IDENTITIES", {{"p", p}});
    std::vector<CheckOutcome> out;
    out.push_back(exact_outcome(c, "first_exact", s1, rhs1, p));
    out.push_back(exact_outcome(c, "second_exact", s2, rhs2, p));
    Rat red1 = Rat(p) - Rat(Int(3) * p * p) * fermat_quotient(Rat(1, 3), p);
    out.push_back(congruence_outcome(c, "first_reduction", s1, red1, p, 2, false,
                                     "stated modulus ambiguous between p^2 and p^3; "
                                     "achieved valuation decides the sharper reading"));
    out.push_back(congruence_outcome(c, "second_reduction", s2, Rat(-7, 2), p, 1, false));
    return out;
}

std::vector<CheckOutcome> check_E(long p) {
    require_prime(p);
    Rat lhs(0);
    for (long r = 0; r <= p - 1; ++r)
        lhs += Rat(trinomial(r)) * (harmonic(3 * r) - harmonic(r)) * three_pow(-3 * r) /
               Rat(r + 1);
    CheckCase c = make_case("E_SUM", {{"p", p}});
    return {congruence_outcome(c, "", lhs, Rat(-3, 2), p, 1, false)};
}

// ---------------------------------------------------------------------------
// registry, grids, batch runner
// ---------------------------------------------------------------------------

namespace {

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long p = lo; p <= hi; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

std::vector<long> seq_range(long lo, long hi) {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

// Override-or-fallback for one grid dimension.
std::vector<long> dim(const GridOverrides& ov, const std::string& name,
                      std::vector<long> fallback) {
    auto it = ov.values.find(name);
    return it != ov.values.end() ? it->second : std::move(fallback);
}

std::vector<long> prime_dim(const GridOverrides& ov, std::vector<long> fallback) {
    std::vector<long> ps = dim(ov, "p", std::move(fallback));
    for (long p : ps)
        if (p < 5 || !is_prime(p))
            throw std::invalid_argument("prime grid contains non-prime " + std::to_string(p));
    return ps;
}

ParamMap pm(std::initializer_list<std::pair<const std::string, long>> init) {
    return ParamMap(init);
}

std::vector<CheckCase> grid_main(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11, 13}))
        for (long n : dim(ov, "n", seq_range(1, 12)))
            if (n >= 1)
                cases.push_back({"MAIN_SUPERCONGRUENCE", pm({{"p", p}, {"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_higher(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5}))
        for (long r : dim(ov, "r", {2}))
            for (long n : dim(ov, "n", {1, 2}))
                if (r >= 1 && n >= 1)
                    cases.push_back({"HIGHER", pm({{"p", p}, {"r", r}, {"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_thm31(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {7, 11, 13}))
        for (long i : dim(ov, "i", seq_range(1, 4)))
            for (long n : dim(ov, "n", seq_range(1, 8)))
                if (i >= 1 && 3 * i < p && n >= 1)
                    cases.push_back({"THM31_VANISH", pm({{"p", p}, {"i", i}, {"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_lucas(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long b : dim(ov, "b", seq_range(0, 3)))
            for (long d : dim(ov, "d", seq_range(0, 3)))
                for (long c : dim(ov, "c", seq_range(0, p - 1)))
                    for (long e : dim(ov, "e", seq_range(0, p - 1)))
                        if (b >= 0 && d >= 0 && c >= 0 && c < p && e >= 0 && e < p)
                            cases.push_back(
                                {"LUCAS", pm({{"p", p}, {"b", b}, {"c", c}, {"d", d}, {"e", e}})});
    return cases;
}

std::vector<CheckCase> grid_gessel(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11, 13}))
        for (long j : dim(ov, "j", seq_range(1, p - 1)))
            if (j > 0 && j < p)
                cases.push_back({"GESSEL", pm({{"p", p}, {"j", j}})});
    return cases;
}

std::vector<CheckCase> grid_idh(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long n : dim(ov, "n", seq_range(1, 50)))
        if (n >= 1)
            cases.push_back({"IDH", pm({{"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_mort(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    std::vector<Rat> ys =
        ov.y ? *ov.y : std::vector<Rat>{Rat(1, 2), Rat(1, 3), Rat(2), Rat(5), Rat(-1, 2)};
    for (long n : dim(ov, "n", seq_range(1, 12)))
        for (const Rat& y : ys) {
            if (n < 1)
                continue;
            bool pole = false;
            for (long t = 0; t <= n; ++t)
                pole = pole || y == Rat(-t);
            if (pole)
                continue;
            cases.push_back({"MORT", pm({{"n", n},
                                         {"ynum", y.num().get_si()},
                                         {"yden", y.den().get_si()}})});
        }
    return cases;
}

std::vector<CheckCase> grid_floor_binomial(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, primes_in(5, 31)))
        for (long k : dim(ov, "k", seq_range(0, (p - 1) / 3)))
            if (k >= 0 && 3 * k < p)
                cases.push_back({"FLOOR_BINOMIAL", pm({{"p", p}, {"k", k}})});
    return cases;
}

std::vector<CheckCase> grid_trinomial_sums(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, primes_in(5, 31)))
        for (long i : dim(ov, "i", seq_range(1, 5)))
            if (i > 0 && i <= 5 && 3 * i < p)
                cases.push_back({"TRINOMIAL_SUMS", pm({{"p", p}, {"i", i}})});
    return cases;
}

std::vector<CheckCase> grid_reduction(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long m : dim(ov, "m", seq_range(0, 3)))
            for (long n : dim(ov, "n", seq_range(1, 8)))
                if (m >= 0 && n >= 1)
                    cases.push_back({"REDUCTION", pm({{"p", p}, {"m", m}, {"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_l1(const std::string& id, const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11}))
        for (long a : dim(ov, "a", seq_range(1, 5)))
            for (long b : dim(ov, "b", seq_range(0, 4)))
                for (long j : dim(ov, "j", seq_range(1, p - 1)))
                    if (a > b && b >= 0 && j > 0 && j < p)
                        cases.push_back({id, pm({{"p", p}, {"a", a}, {"b", b}, {"j", j}})});
    return cases;
}

std::vector<CheckCase> grid_mnr(const std::string& id, const GridOverrides& ov, bool with_n,
                                long r_lo) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11}))
        for (long m : dim(ov, "m", seq_range(0, 3)))
            for (long n : with_n ? dim(ov, "n", seq_range(1, 5)) : std::vector<long>{1})
                for (long r : dim(ov, "r", seq_range(r_lo, p - 1))) {
                    if (m < 0 || n < 1 || r < r_lo || r >= p)
                        continue;
                    ParamMap params = pm({{"p", p}, {"m", m}, {"r", r}});
                    if (with_n)
                        params["n"] = n;
                    cases.push_back({id, params});
                }
    return cases;
}

std::vector<CheckCase> grid_sagan26(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long n : dim(ov, "n", seq_range(1, 3)))
            for (long k1 : dim(ov, "k1", seq_range(0, 3)))
                for (long k0 : dim(ov, "k0", seq_range(1, p - 1)))
                    if (n >= 1 && k1 >= 0 && k0 > 0 && k0 < p)
                        cases.push_back(
                            {"SAGAN_EQ26", pm({{"p", p}, {"n", n}, {"k1", k1}, {"k0", k0}})});
    return cases;
}

std::vector<CheckCase> grid_sagan27(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long n1 : dim(ov, "n1", seq_range(0, 3)))
            for (long n0 : dim(ov, "n0", seq_range(1, p - 1)))
                for (long k1 : dim(ov, "k1", seq_range(0, 3)))
                    for (long k0 : dim(ov, "k0", seq_range(1, p - 1)))
                        if (n1 >= 0 && k1 >= 0 && n0 > 0 && n0 < p && k0 > 0 && k0 < p)
                            cases.push_back({"SAGAN_EQ27",
                                             pm({{"p", p},
                                                 {"n1", n1},
                                                 {"n0", n0},
                                                 {"k1", k1},
                                                 {"k0", k0}})});
    return cases;
}

std::vector<CheckCase> grid_cor52(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    std::set<std::string> seen;
    auto add = [&](long p, long m, long r, long parts) {
        if (m < 0 || r < 0 || r >= p || parts < 1)
            return;
        CheckCase c{"COR52", pm({{"p", p}, {"m", m}, {"r", r}, {"A", parts}})};
        if (seen.insert(format_params(c.params)).second)
            cases.push_back(c);
    };
    bool custom = ov.values.count("A") || ov.values.count("m") || ov.values.count("r") ||
                  ov.values.count("p");
    if (custom) {
        for (long p : prime_dim(ov, {5, 7, 11}))
            for (long parts : dim(ov, "A", {3}))
                for (long m : dim(ov, "m", seq_range(0, 3)))
                    for (long r : dim(ov, "r", seq_range(0, p - 1)))
                        add(p, m, r, parts);
        return cases;
    }
    for (long p : {5L, 7L, 11L})
        for (long m = 0; m <= 3; ++m)
            for (long r = 0; r < p; ++r)
                add(p, m, r, 3);
    for (long parts : {2L, 3L, 4L, 5L})
        for (long p : {5L, 7L})
            for (long m = 0; m <= 2; ++m)
                for (long r = 0; r < p; ++r)
                    add(p, m, r, parts);
    return cases;
}

std::vector<CheckCase> grid_cor54(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11}))
        for (long m : dim(ov, "m", seq_range(0, 3)))
            for (long n : dim(ov, "n", seq_range(1, 5)))
                for (long r : dim(ov, "r", seq_range(0, p - 1)))
                    if (m >= 0 && n >= 1 && r >= 0 && r < p)
                        cases.push_back(
                            {"COR54", pm({{"p", p}, {"m", m}, {"n", n}, {"r", r}})});
    return cases;
}

std::vector<CheckCase> grid_cor55(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11}))
        for (long m : dim(ov, "m", seq_range(0, 3)))
            for (long n : dim(ov, "n", seq_range(1, 5)))
                for (long r : dim(ov, "r", seq_range(1, p - 1)))
                    if (m >= 0 && n >= 1 && r > 0 && r < p)
                        cases.push_back(
                            {"COR55", pm({{"p", p}, {"m", m}, {"n", n}, {"r", r}})});
    return cases;
}

std::vector<CheckCase> grid_T(const std::string& id, const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, primes_in(5, 31)))
        cases.push_back({id, pm({{"p", p}})});
    return cases;
}

std::vector<CheckCase> grid_closecong(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long m : dim(ov, "m", seq_range(0, 2)))
            for (long n : dim(ov, "n", seq_range(1, 7)))
                if (m >= 0 && 3 * m < n)
                    cases.push_back({"CLOSECONG", pm({{"p", p}, {"m", m}, {"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_conj71(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long i : dim(ov, "i", {1, 2}))
            for (long n : dim(ov, "n", seq_range(1, 5)))
                if (i >= 1 && p > 2 * i && n >= 1)
                    cases.push_back({"CONJ71", pm({{"p", p}, {"i", i}, {"n", n}})});
    return cases;
}

std::vector<CheckCase> grid_b1_chain(const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7}))
        for (long n : dim(ov, "n", seq_range(1, 5)))
            for (long m : dim(ov, "m", {0, 1}))
                if (n >= 1 && m >= 0)
                    cases.push_back({"B1_CHAIN", pm({{"p", p}, {"n", n}, {"m", m}})});
    return cases;
}

std::vector<CheckCase> grid_p_only(const std::string& id, const GridOverrides& ov) {
    std::vector<CheckCase> cases;
    for (long p : prime_dim(ov, {5, 7, 11, 13}))
        cases.push_back({id, pm({{"p", p}})});
    return cases;
}

long param(const CheckCase& c, const char* name) { return c.params.at(name); }

std::vector<CheckInfo> build_registry() {
    std::vector<CheckInfo> reg;
    auto add = [&](CheckInfo info) { reg.push_back(std::move(info)); };

    add({"MAIN_SUPERCONGRUENCE", {"p", "n"}, {}, false,
         [](const CheckCase& c) { return check_main(param(c, "p"), param(c, "n")); },
         grid_main});
    add({"HIGHER", {"p", "r", "n"}, {}, true,
         [](const CheckCase& c) {
             return check_higher(param(c, "p"), param(c, "r"), param(c, "n"));
         },
         grid_higher});
    add({"THM31_VANISH", {"p", "i", "n"}, {}, false,
         [](const CheckCase& c) {
             return check_ai_vanish(param(c, "p"), param(c, "i"), param(c, "n"));
         },
         grid_thm31});
    add({"LUCAS", {"p", "b", "c", "d", "e"}, {}, false,
         [](const CheckCase& c) {
             return check_lucas(param(c, "p"), param(c, "b"), param(c, "c"), param(c, "d"),
                                param(c, "e"));
         },
         grid_lucas});
    add({"GESSEL", {"p", "j"}, {}, false,
         [](const CheckCase& c) { return check_gessel(param(c, "p"), param(c, "j")); },
         grid_gessel});
    add({"IDH", {"n"}, {}, false,
         [](const CheckCase& c) { return check_harmonic_identity(param(c, "n")); }, grid_idh});
    add({"MORT", {"n", "ynum"}, {{"yden", 1}}, false,
         [](const CheckCase& c) {
             return check_partial_fraction(param(c, "n"),
                                           Rat(param(c, "ynum"), param(c, "yden")));
         },
         grid_mort});
    add({"FLOOR_BINOMIAL", {"p", "k"}, {}, false,
         [](const CheckCase& c) { return check_floor_binomial(param(c, "p"), param(c, "k")); },
         grid_floor_binomial});
    add({"TRINOMIAL_SUMS", {"p", "i"}, {}, false,
         [](const CheckCase& c) { return check_trinomial_sums(param(c, "p"), param(c, "i")); },
         grid_trinomial_sums});
    add({"REDUCTION", {"p", "m", "n"}, {}, false,
         [](const CheckCase& c) {
             return check_reduction(param(c, "p"), param(c, "m"), param(c, "n"));
         },
         grid_reduction});
    add({"LEMMA51_L1A", {"p", "a", "b", "j"}, {}, false,
         [](const CheckCase& c) {
             return check_lemma51(param(c, "p"), Lemma51Part::L1a, c.params);
         },
         [](const GridOverrides& ov) { return grid_l1("LEMMA51_L1A", ov); }});
    add({"LEMMA51_L1B", {"p", "a", "b", "j"}, {}, false,
         [](const CheckCase& c) {
             return check_lemma51(param(c, "p"), Lemma51Part::L1b, c.params);
         },
         [](const GridOverrides& ov) { return grid_l1("LEMMA51_L1B", ov); }});
    add({"LEMMA51_L2", {"p", "m", "n", "r"}, {}, false,
         [](const CheckCase& c) {
             return check_lemma51(param(c, "p"), Lemma51Part::L2, c.params);
         },
         [](const GridOverrides& ov) { return grid_mnr("LEMMA51_L2", ov, true, 0); }});
    add({"LEMMA51_L3", {"p", "m", "r"}, {}, false,
         [](const CheckCase& c) {
             return check_lemma51(param(c, "p"), Lemma51Part::L3, c.params);
         },
         [](const GridOverrides& ov) { return grid_mnr("LEMMA51_L3", ov, false, 0); }});
    add({"LEMMA51_L4", {"p", "m", "r"}, {}, false,
         [](const CheckCase& c) {
             return check_lemma51(param(c, "p"), Lemma51Part::L4, c.params);
         },
         [](const GridOverrides& ov) { return grid_mnr("LEMMA51_L4", ov, false, 0); }});
    add({"LEMMA51_L5V2", {"p", "m", "n", "r"}, {}, false,
         [](const CheckCase& c) {
             return check_lemma51(param(c, "p"), Lemma51Part::L5V2, c.params);
         },
         [](const GridOverrides& ov) { return grid_mnr("LEMMA51_L5V2", ov, true, 1); }});
    add({"SAGAN_EQ26", {"p", "n", "k1", "k0"}, {}, false,
         [](const CheckCase& c) { return check_sagan(param(c, "p"), SaganPart::EQ26, c.params); },
         grid_sagan26});
    add({"SAGAN_EQ27", {"p", "n1", "n0", "k1", "k0"}, {}, false,
         [](const CheckCase& c) { return check_sagan(param(c, "p"), SaganPart::EQ27, c.params); },
         grid_sagan27});
    add({"COR52", {"p", "m", "r"}, {{"A", 3}}, false,
         [](const CheckCase& c) {
             return check_cor52(param(c, "p"), param(c, "m"), param(c, "r"), param(c, "A"));
         },
         grid_cor52});
    add({"COR54", {"p", "m", "n", "r"}, {}, false,
         [](const CheckCase& c) {
             return check_cor54(param(c, "p"), param(c, "m"), param(c, "n"), param(c, "r"));
         },
         grid_cor54});
    add({"COR55", {"p", "m", "n", "r"}, {}, false,
         [](const CheckCase& c) {
             return check_cor55(param(c, "p"), param(c, "m"), param(c, "n"), param(c, "r"));
         },
         grid_cor55});
    add({"T1", {"p"}, {}, false,
         [](const CheckCase& c) { return check_T(param(c, "p"), TPart::T1); },
         [](const GridOverrides& ov) { return grid_T("T1", ov); }});
    add({"T2", {"p"}, {}, false,
         [](const CheckCase& c) { return check_T(param(c, "p"), TPart::T2); },
         [](const GridOverrides& ov) { return grid_T("T2", ov); }});
    add({"T3", {"p"}, {}, false,
         [](const CheckCase& c) { return check_T(param(c, "p"), TPart::T3); },
         [](const GridOverrides& ov) { return grid_T("T3", ov); }});
    add({"CLOSECONG", {"p", "m", "n"}, {}, false,
         [](const CheckCase& c) {
             return check_closecong(param(c, "p"), param(c, "m"), param(c, "n"));
         },
         grid_closecong});
    add({"CONJ71", {"p", "i", "n"}, {}, true,
         [](const CheckCase& c) {
             return check_conj71(param(c, "p"), param(c, "i"), param(c, "n"));
         },
         grid_conj71});
    add({"B1_CHAIN", {"p", "n"}, {{"m", 0}}, true,
         [](const CheckCase& c) {
             return check_b1_chain(param(c, "p"), param(c, "n"), param(c, "m"));
         },
         grid_b1_chain});
    add({"D_IDENTITIES", {"p"}, {}, false,
         [](const CheckCase& c) { return check_D_identities(param(c, "p")); },
         [](const GridOverrides& ov) { return grid_p_only("D_IDENTITIES", ov); }});
    add({"E_SUM", {"p"}, {}, false,
         [](const CheckCase& c) { return check_E(param(c, "p")); },
         [](const GridOverrides& ov) { return grid_p_only("E_SUM", ov); }});
    return reg;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> reg = build_registry();
    return reg;
}

const CheckInfo* find_check(const std::string& id) {
    for (const auto& info : check_registry())
        if (info.id == id)
            return &info;
    return nullptr;
}

std::vector<CheckOutcome> run_check(const CheckCase& c) {
    const CheckInfo* info = find_check(c.check_id);
    if (!info)
        throw std::invalid_argument("unknown check id: " + c.check_id);
    CheckCase filled = c;
    for (const auto& [name, fallback] : info->optional_params)
        filled.params.try_emplace(name, fallback);
    for (const auto& name : info->required_params)
        if (!filled.params.count(name))
            throw std::invalid_argument(c.check_id + ": missing parameter " + name);
    for (const auto& entry : filled.params) {
        const std::string& name = entry.first;
        bool known = std::find(info->required_params.begin(), info->required_params.end(),
                               name) != info->required_params.end();
        for (const auto& opt : info->optional_params)
            known = known || opt.first == name;
        if (!known)
            throw std::invalid_argument(c.check_id + ": unknown parameter " + name);
    }
    return info->run(filled);
}

std::vector<CheckOutcome> run_suite(const std::vector<CheckCase>& cases, int jobs) {
    std::vector<std::vector<CheckOutcome>> slots(cases.size());
    auto eval = [&](size_t idx) {
        try {
            slots[idx] = run_check(cases[idx]);
        } catch (const std::exception& e) {
            CheckOutcome o;
            o.kase = cases[idx];
            o.error = true;
            o.passed = false;
            o.note = std::string("error: ") + e.what();
            if (const CheckInfo* info = find_check(cases[idx].check_id))
                o.conjectural = info->conjectural;
            slots[idx] = {o};
        }
    };
    if (jobs <= 1 || cases.size() <= 1) {
        for (size_t i = 0; i < cases.size(); ++i)
            eval(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1))
                eval(i);
        };
        std::vector<std::thread> pool;
        int n_workers = std::min<int>(jobs, static_cast<int>(cases.size()));
        pool.reserve(static_cast<size_t>(n_workers));
        for (int t = 0; t < n_workers; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::vector<CheckOutcome> out;
    for (auto& slot : slots)
        for (auto& o : slot)
            out.push_back(std::move(o));
    return out;
}

}  // namespace az
