#pragma once

/*
 * Generators for the sequences under study: the alternating binomial sums
 * a_i(n), the Apery numbers A(n), the auxiliary rational sums b_j(n), and
 * the two sides of the single-sum reduction that drives the main
 * supercongruence proof.
 *
 * a_i(n) = sum_{k=0}^{floor((n-i)/3)} (-1)^{n-k} C(3k+i,k) C(2k+i,k)
 *          C(n,3k+i) C(n+k,k) 3^{n-3k-i}
 * A(n)   = sum_{k=0}^{n} C(n,k)^2 C(n+k,k)^2
 * b_j(n) = sum_{k=0}^{n-1} (-1)^{n-k} C(3k,k) C(2k,k) C(n,3k) C(n+k,k)
 *          3^{n-3k} / (k+j)
 *
 * Values are memoized in-process by (family, index, n); the cache can be
 * persisted through the report layer.
 */

#include "az/exact.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace az {

enum class Family { AZ_A, APERY, B };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct SeqKey {
    Family family;
    long index;  // i for AZ_A, j for B, 0 for APERY
    long n;
    friend auto operator<=>(const SeqKey&, const SeqKey&) = default;
};

struct SequenceValue {
    SeqKey key;
    Rat value;
};

/// Deterministic values, so concurrent double-compute is harmless; the map
/// itself is guarded.
class SequenceCache {
public:
    std::optional<Rat> lookup(const SeqKey& key) const;
    void store(const SeqKey& key, const Rat& value);
    std::vector<SequenceValue> snapshot() const;  // sorted by key
    void clear();
    size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<SeqKey, Rat> map_;
};

/// Process-wide cache used by the generators below.
SequenceCache& sequence_cache();

/// a_i(n); 0 when n < i (empty sum).  n = 0 is allowed and gives a_0(0) = 1.
Int az_a(long i, long n);

/// Apery number A(n), n >= 0.
Int apery(long n);

/// b_j(n), j >= 1, n >= 1.  Terms with 3k > n vanish through C(n, 3k).
Rat az_b(long j, long n);

/// Which side of the reduction's right-hand display to evaluate.
enum class RhsForm { QForm, PowerForm };

/// sum_{r} (-1)^r C(3pm+3r, pm+r) C(2pm+2r, pm+r) C(pn, 3pm+3r)
/// C(p(n+m)+r, pm+r) 3^{-3r}, from r = 1 (or r = 0 when include_r0).
Rat reduction_lhs(long p, long m, long n, bool include_r0);

/// QForm:     p C(3m,m) C(2m,m) C(n,3m) C(n+m,m) q_p(3^{-(n-3m)})
/// PowerForm:   C(3m,m) C(2m,m) C(n,3m) C(n+m,m) 3^{-(n-3m)(p-1)}
Rat reduction_rhs(long p, long m, long n, RhsForm form);

}  // namespace az
