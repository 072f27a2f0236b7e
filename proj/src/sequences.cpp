#include "az/sequences.hpp"

#include "az/padic.hpp"

namespace az {

std::string family_name(Family f) {
    switch (f) {
        case Family::AZ_A: return "AZ_A";
        case Family::APERY: return "APERY";
        case Family::B: return "B";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "AZ_A") return Family::AZ_A;
    if (s == "APERY") return Family::APERY;
    if (s == "B") return Family::B;
    return std::nullopt;
}

std::optional<Rat> SequenceCache::lookup(const SeqKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end())
        return std::nullopt;
    return it->second;
}

void SequenceCache::store(const SeqKey& key, const Rat& value) {
    std::lock_guard lock(mutex_);
    map_.insert_or_assign(key, value);
}

std::vector<SequenceValue> SequenceCache::snapshot() const {
    std::lock_guard lock(mutex_);
    std::vector<SequenceValue> out;
    out.reserve(map_.size());
    for (const auto& [k, v] : map_)
        out.push_back({k, v});
    return out;
}

void SequenceCache::clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
}

size_t SequenceCache::size() const {
    std::lock_guard lock(mutex_);
    return map_.size();
}

SequenceCache& sequence_cache() {
    static SequenceCache cache;
    return cache;
}

namespace {
Int pow3(long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
}
}  // namespace

Int az_a(long i, long n) {
    if (i < 0 || n < 0)
        throw std::domain_error("az_a: need i >= 0 and n >= 0");
    SeqKey key{Family::AZ_A, i, n};
    if (auto hit = sequence_cache().lookup(key))
        return hit->num();
    Int sum = 0;
    if (n >= i) {
        long kmax = (n - i) / 3;
        for (long k = 0; k <= kmax; ++k) {
            Int term = binomial(3 * k + i, k) * binomial(2 * k + i, k) *
                       binomial(n, 3 * k + i) * binomial(n + k, k) *
                       pow3(n - 3 * k - i);
            if ((n - k) % 2 != 0)
                term = -term;
            sum += term;
        }
    }
    sequence_cache().store(key, Rat(sum));
    return sum;
}

Int apery(long n) {
    if (n < 0)
        throw std::domain_error("apery: negative n");
    SeqKey key{Family::APERY, 0, n};
    if (auto hit = sequence_cache().lookup(key))
        return hit->num();
    Int sum = 0;
    for (long k = 0; k <= n; ++k) {
        Int b1 = binomial(n, k);
        Int b2 = binomial(n + k, k);
        sum += b1 * b1 * b2 * b2;
    }
    sequence_cache().store(key, Rat(sum));
    return sum;
}

Rat az_b(long j, long n) {
    if (j < 1 || n < 1)
        throw std::domain_error("az_b: need j >= 1 and n >= 1");
    SeqKey key{Family::B, j, n};
    if (auto hit = sequence_cache().lookup(key))
        return *hit;
    Rat sum(0);
    for (long k = 0; k <= n - 1; ++k) {
        Int num = binomial(3 * k, k) * binomial(2 * k, k) * binomial(n, 3 * k) *
                  binomial(n + k, k);
        if (num == 0)
            continue;
        num *= pow3(n - 3 * k);
        Rat term(num, Int(k + j));
        sum += (n - k) % 2 != 0 ? -term : term;
    }
    sequence_cache().store(key, sum);
    return sum;
}

Rat reduction_lhs(long p, long m, long n, bool include_r0) {
    if (!is_prime(p) || p < 5)
        throw std::domain_error("reduction_lhs: p must be a prime >= 5");
    if (m < 0 || n < 1)
        throw std::domain_error("reduction_lhs: need m >= 0 and n >= 1");
    Rat sum(0);
    for (long r = include_r0 ? 0 : 1; r <= p - 1; ++r) {
        Int num = binomial(3 * p * m + 3 * r, p * m + r) *
                  binomial(2 * p * m + 2 * r, p * m + r) *
                  binomial(p * n, 3 * p * m + 3 * r) *
                  binomial(p * (n + m) + r, p * m + r);
        if (num == 0)
            continue;
        Rat term(num, pow3(3 * r));
        sum += r % 2 != 0 ? -term : term;
    }
    return sum;
}

Rat reduction_rhs(long p, long m, long n, RhsForm form) {
    if (!is_prime(p) || p < 5)
        throw std::domain_error("reduction_rhs: p must be a prime >= 5");
    if (m < 0 || n < 1)
        throw std::domain_error("reduction_rhs: need m >= 0 and n >= 1");
    Int binoms = binomial(3 * m, m) * binomial(2 * m, m) * binomial(n, 3 * m) *
                 binomial(n + m, m);
    if (binoms == 0)
        return Rat(0);
    long bigN = n - 3 * m;
    if (form == RhsForm::QForm)
        return Rat(p) * Rat(binoms) * fermat_quotient(pow_rat(Rat(3), -bigN), p);
    return Rat(binoms) * pow_rat(Rat(3), -bigN * (p - 1));
}

}  // namespace az
