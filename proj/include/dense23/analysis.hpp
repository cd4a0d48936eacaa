#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dense23/bignat.hpp"
#include "dense23/construction.hpp"
#include "dense23/word.hpp"

namespace dense23 {

// exact nonnegative rational, reduced, den > 0
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    friend bool operator==(const Rational& a, const Rational& b) = default;
};
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
std::ostream& operator<<(std::ostream& os, const Rational& q);

// Overlapping occurrence count of `block` among the first N digits:
// windows starting at positions 1 .. N - |block| + 1.
struct BlockCount {
    int base = 2;
    Word block;
    long N = 0;
    long count = 0;
    long window = 0;  // N - |block| + 1, clamped at 0
};

// throws std::invalid_argument on base mismatch, empty block, or N > |digits|
BlockCount block_count(const Word& digits, const Word& block, long N);

// Frequency of a block (default 0^m) in the binary prefix at the
// checkpoints N = t_1, ..., t_K, together with the gap-sum bounds it is
// measured against: sum_p_before = p_1 + ... + p_{k-1}, reported both
// against n_k and against the prefix length t_{k-1} + n_k.
struct ProfileEntry {
    long k = 0;
    long checkpoint = 0;   // t_k
    long count = 0;        // occurrences among first t_k digits
    long window = 0;
    long prefix_len = 0;   // t_{k-1} + n_k
    long count_prefix = 0; // occurrences among first prefix_len digits
    long sum_p_before = 0;
    Rational bound_over_n;       // sum_p_before / n_k
    Rational bound_over_prefix;  // sum_p_before / prefix_len
};
struct NonnormalityProfile {
    Word block;
    std::vector<ProfileEntry> entries;
};

NonnormalityProfile nonnormality_profile(const ConstructionState& state);
NonnormalityProfile nonnormality_profile(const ConstructionState& state, const Word& block);

// A position j with T_base^j x in [word]: the expansion digits at
// j+1 .. j+|word| equal word.
struct OrbitWitness {
    Word word;
    int base = 2;
    long position = 0;
};

// For each k <= K: (w_k, base 2, j = t_{k-1} + n_k) and (v_k, base 3,
// j = rho_k), each checked against the actual digit prefixes. Throws
// WitnessFailed if a predicted occurrence does not match.
std::vector<OrbitWitness> orbit_witnesses(const ConstructionState& state);

using Trace = std::vector<StepInfo>;

// Number of order-t 2-adic cylinders meeting the depth-covering level set,
// by the piecewise closed form: with t_k < t <= t_{k+1}, s = t - t_k and
// P = prod_{j<=k} 2^(ell_j m - 2 ell_j),
//   b_t = P * 2^(s-2l)      if s = l*m for some l < ell_{k+1}
//   b_t = P * 2^(s-2l-1)    if l*m < s < (l+1)*m for some l < ell_{k+1}
//   b_t = P * 2^(ell_{k+1} m - 2 ell_{k+1})   if n_{k+1} <= s <= n_{k+1}+p_{k+1}
// throws std::out_of_range for t < 1 or t beyond the trace
BigNat count_formula(const Schedule& schedule, const Trace& trace, long t);
long count_formula_exponent(const Schedule& schedule, const Trace& trace, long t);

// Exact count of order-t 2-adic cylinders with nonempty intersection with
// the level set, by exhaustive scan over all 2^t digit prefixes, checking
// each against the forced block digits and the gap digits the construction
// derives from it. Independent of count_formula. Requires 2^t <= cap,
// else CapExceeded with the exact required budget.
BigNat count_bruteforce(const Schedule& schedule, const Trace& trace, long t,
                        unsigned long long cap);

// b_t for a range of t, all powers of two by construction
struct LevelCountTable {
    int m = 2;
    std::string schedule_desc;
    long t_min = 1;
    std::vector<long> exponents;  // b_t = 2^exponents[t - t_min]

    long t_max() const { return t_min + static_cast<long>(exponents.size()) - 1; }
    long exponent(long t) const;
    BigNat b(long t) const;
    Rational quotient(long t) const;  // log2(b_t) / t
    std::string to_csv() const;       // header t,b_t,quotient_num,quotient_den
};

LevelCountTable build_count_table(const Schedule& schedule, const Trace& trace,
                                  long t_min, long t_max);

// The largest rational theta with b_t >= 2^(theta * t) for every t in
// [t0, t1], i.e. min over the range of log2(b_t)/t, verified by integer
// cross-multiplication. This is the finite-depth stand-in for the
// Billingsley quotient liminf log mu(I_t) / log |I_t|.
Rational dimension_lower_bound(const LevelCountTable& table, long t0, long t1);

}  // namespace dense23
