#pragma once

/*
 * One check per verifiable congruence or identity in scope.  Every check
 * instantiates concrete parameters, evaluates both sides exactly, and
 * reports the achieved p-adic valuation next to the required one.
 *
 * Checks whose statements are conjectural (HIGHER with r >= 2, CONJ71,
 * B1_CHAIN) are first-class: a violation is a reported finding, not an
 * evaluation error.
 *
 * Out-of-hypothesis parameters throw std::domain_error; run_suite captures
 * such errors per case instead of aborting the batch.
 */

#include "az/padic.hpp"
#include "az/sequences.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace az {

using ParamMap = std::map<std::string, long>;

struct CheckCase {
    std::string check_id;
    ParamMap params;
};

/// Verdict for one congruence (multi-part checks emit one outcome per part,
/// labeled through `part`).  passed <=> achieved >= required; `achieved` is
/// absent only for error outcomes and for an unequal exact identity that has
/// no prime to measure against.
struct CheckOutcome {
    CheckCase kase;
    std::string part;
    bool passed = false;
    bool error = false;
    bool conjectural = false;
    Valuation required = Valuation::finite(1);
    std::optional<Valuation> achieved;
    Rat lhs;
    Rat rhs;
    std::string note;
};

// --- individual checks; each returns one outcome per verified congruence ---

/// a_0(pn) = a_0(n) (mod p^3).
std::vector<CheckOutcome> check_main(long p, long n);

/// a_0(p^r n) = a_0(p^{r-1} n) (mod p^{3r}); conjectural for r >= 2.
std::vector<CheckOutcome> check_higher(long p, long r, long n);

/// a_i(pn) = 0 (mod p^2) for 0 < i < p/3.
std::vector<CheckOutcome> check_ai_vanish(long p, long i, long n);

/// C(pb+c, pd+e) = C(b,d)C(c,e) (mod p) and C(pb, pd) = C(b,d) (mod p^3).
std::vector<CheckOutcome> check_lucas(long p, long b, long c, long d, long e);

/// C(p,j) = (-1)^{j-1} p/j (mod p^2) for 0 < j < p.
std::vector<CheckOutcome> check_gessel(long p, long j);

/// sum_{k=1..n} (-1)^k C(n,k) C(n+k,k)/k = -2 H_n, exactly.
std::vector<CheckOutcome> check_harmonic_identity(long n);

/// sum_{k=0..n} (-1)^k C(n,k) C(n+k,k)/(k+y) = ((-1)^n/y) prod (y-j)/(y+j),
/// exactly; y must avoid the poles {0, -1, ..., -n}.
std::vector<CheckOutcome> check_partial_fraction(long n, const Rat& y);

/// (-1)^k C(floor(p/3),k) C(floor(p/3)+k,k) = C(3k;k,k,k) 3^{-3k} (mod p).
std::vector<CheckOutcome> check_floor_binomial(long p, long k);

/// The four chained congruences on trinomial sums (full range vs floor(p/3)
/// range, values 3 q_p(3) and 0), each mod p.
std::vector<CheckOutcome> check_trinomial_sums(long p, long i);

/// Both displayed forms of the single-sum reduction, mod p^3.
std::vector<CheckOutcome> check_reduction(long p, long m, long n);

enum class Lemma51Part { L1a, L1b, L2, L3, L4, L5V2 };

/// The binomial toolbox congruences; mod p^2 for L1-L4, mod p^3 for L5V2.
/// Parameter names per part: L1a/L1b use (a, b, j); L2 and L5V2 use
/// (m, n, r); L3 and L4 use (m, r).
std::vector<CheckOutcome> check_lemma51(long p, Lemma51Part part, const ParamMap& params);

enum class SaganPart { EQ26, EQ27 };

/// Base-p digit congruences mod p^2: EQ26 takes (n, k1, k0) for C(np, k);
/// EQ27 takes (n1, n0, k1, k0) for C(n, k).
std::vector<CheckOutcome> check_sagan(long p, SaganPart part, const ParamMap& params);

/// (A(pm+r))!/((pm+r)!)^A = M(A,m) M(A,r) [1 + A p m (H_{Ar} - H_r)] (mod p^2),
/// where M is the equal-part multinomial; A = 3 is the trinomial case.
std::vector<CheckOutcome> check_cor52(long p, long m, long r, long parts);

/// C(p(n+m)+r, pm+r) = C(n+m, m)[1 + p n H_r] (mod p^2).
std::vector<CheckOutcome> check_cor54(long p, long m, long n, long r);

/// The three-branch congruence for C(pn, 3pm+3r) mod p^3, branch selected
/// by r against p/3 and 2p/3.
std::vector<CheckOutcome> check_cor55(long p, long m, long n, long r);

enum class TPart { T1, T2, T3 };

/// Trinomial power-sum congruences: T1 mod p^2, T2 and T3 mod p.
std::vector<CheckOutcome> check_T(long p, TPart which);

/// The weighted single-sum equivalent of the reduction, mod p^2.
std::vector<CheckOutcome> check_closecong(long p, long m, long n);

/// a_i(pn) = (-1)^{i-1} a_1(pn)/(i^2 C(2i-1,i-1))
///         = (-1)^{i-1} p^2 C(n+2,2) a_1(n)/(i^2 C(2i-1,i-1)) (mod p^3),
/// checked as the two adjacent congruences of the chain.  Conjectural.
std::vector<CheckOutcome> check_conj71(long p, long i, long n);

/// The b_1 recursion mod p^3 and its per-m single-sum refinement.
/// Conjectural.
std::vector<CheckOutcome> check_b1_chain(long p, long n, long m);

/// Two exact closed forms for trinomial sums weighted by 1/(r+1) and
/// 1/(r+1)^2, plus their stated congruence reductions.
std::vector<CheckOutcome> check_D_identities(long p);

/// sum_r C(3r;r,r,r)(H_{3r}-H_r) 3^{-3r}/(r+1) = -3/2 (mod p).
std::vector<CheckOutcome> check_E(long p);

// --- dispatch, parameter grids, batch runner ---

/// Per-dimension replacements for the built-in sweep grids.  A check only
/// consults the dimensions it uses; values violating a hypothesis are
/// filtered out rather than enqueued.
struct GridOverrides {
    std::map<std::string, std::vector<long>> values;
    std::optional<std::vector<Rat>> y;  // MORT's rational parameter
};

struct CheckInfo {
    std::string id;
    std::vector<std::string> required_params;
    std::vector<std::pair<std::string, long>> optional_params;  // name, default
    bool conjectural;  // HIGHER is conjectural only for r >= 2
    std::function<std::vector<CheckOutcome>(const CheckCase&)> run;
    std::function<std::vector<CheckCase>(const GridOverrides&)> grid;
    std::vector<CheckCase> default_grid() const { return grid(GridOverrides{}); }
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& id);

/// Validates presence of parameters and dispatches; throws on unknown id,
/// missing/extra parameters, or violated hypotheses.
std::vector<CheckOutcome> run_check(const CheckCase& c);

/// Runs each case, capturing per-case errors as error outcomes; results are
/// concatenated in input order regardless of worker count.
std::vector<CheckOutcome> run_suite(const std::vector<CheckCase>& cases, int jobs = 1);

}  // namespace az
