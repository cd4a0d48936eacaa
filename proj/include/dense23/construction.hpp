#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dense23/cylinder.hpp"
#include "dense23/enumeration.hpp"
#include "dense23/word.hpp"

namespace dense23 {

// Source of the (w_k, v_k) sequence, 1-indexed. The default is item_at;
// a caller may substitute any provider whose words recur infinitely often.
// Note the default schedule's block lengths are derived from the built-in
// enumeration, so custom providers belong with test schedules.
using ItemProvider = std::function<EnumerationItem(long)>;

// Parameters of the nested construction: the block length m and the rule
// k -> ell_k. Block k has n_k = ell_k * m binary digits.
//
// The default rule ell_k = k * G_k (G_k the running sum of enumeration gap
// bounds) keeps G_k / n_k = 1/(m*k), so the total gap length is vanishing
// relative to the block lengths. The "test" rule fixes a small constant
// ell for exhaustive enumeration tests; it deliberately does not satisfy
// the vanishing-ratio condition and must not be used to approximate
// dimension quotients at depth.
struct Schedule {
    enum class Kind { Default, Test };

    int m = 2;
    Kind kind = Kind::Default;
    long fixed_ell = 1;  // Test only

    long ell(long k) const;
    long n(long k) const { return ell(k) * m; }
    std::string describe() const;  // "default" or "test:<ell>"
};

// throws std::invalid_argument for m < 2
Schedule default_schedule(int m);
Schedule test_schedule(int m, long ell);
Schedule schedule_from_descriptor(const std::string& descriptor, int m);

// Selects one branch of the Cantor tree: how the unconstrained block
// digits are filled. Deterministic given mode and seed.
struct FreeDigitPolicy {
    enum class Mode { Zero, One, Random };
    Mode mode = Mode::Zero;
    std::uint64_t seed = 0;

    std::string describe() const;  // "zero" | "one" | "random"
};

FreeDigitPolicy policy_from_descriptor(const std::string& descriptor, std::uint64_t seed);

// A binary block of length ell*m with digit 1 forced at the first and last
// position of each length-m sub-block (1-indexed: positions l*m+1 and
// l*m+m for 0 <= l < ell).
struct ConstrainedBlock {
    int m = 2;
    long ell = 1;
    Word digits;  // base 2, length ell*m
};

ConstrainedBlock make_block(const Schedule& schedule, long k, const FreeDigitPolicy& policy);
// all 2^(ell*(m-2)) admissible blocks for step k, lexicographic;
// throws CapExceeded if there are more than cap
std::vector<ConstrainedBlock> all_blocks(const Schedule& schedule, long k,
                                         unsigned long long cap);

// classification of one digit position of the binary expansion
enum class Mark : unsigned char {
    ForcedOne,  // block position l*m+1 or l*m+m
    Free,       // block position chosen by the policy
    WordSeg,    // prescribed word w_k
    TildeSeg,   // digits forced by descending through the 3-adic cylinder
};

// Per-step summary: the chosen enumeration item, block shape, the 3-adic
// order rho_k, the 2-adic order t_k, and the gap length p_k = t_k - t_{k-1} - n_k.
struct StepInfo {
    long k = 0;
    EnumerationItem item;
    long ell = 0;
    long n = 0;
    long rho = 0;
    long t = 0;
    long p = 0;
};

// The state after k steps. eta is the current 2-adic cylinder of order t_k;
// eps_v the current 3-adic cylinder of order rho_k + |v_k| (its word is the
// ternary prefix shared by every point of eta). marks classifies the t_k
// binary digit positions.
struct ConstructionState {
    Schedule schedule;
    long k = 0;
    Cylinder eta{2, 0, BigNat{}};
    Cylinder eps_v{3, 0, BigNat{}};
    std::vector<StepInfo> steps;
    std::vector<Mark> marks;

    long t() const { return steps.empty() ? 0 : steps.back().t; }
    const StepInfo& step_info(long k1) const { return steps.at(k1 - 1); }
    Word binary_word() const { return cylinder_to_word(eta); }
    Word ternary_word() const { return cylinder_to_word(eps_v); }
};

ConstructionState initial_state(const Schedule& schedule);

// One refinement step:
//  (a) extend eta by the block and w_k, giving a 2-adic cylinder of order
//      t_{k-1} + n_k + |w_k|;
//  (b) rho_k = min_inner_order(that order, 2, 3, margin 3); pick the 3-adic
//      cylinder [eps_k] of order rho_k inside it with the smallest index;
//  (c) extend by v_k;
//  (d) t_k = min_inner_order(rho_k + |v_k|, 3, 2, margin 2); pick the 2-adic
//      cylinder [eta_k] of order t_k inside [eps_k, v_k], smallest index;
//  (e) check the three inclusions
//      [eta_k]_2 ⊆ [eps_k, v_k]_3 ⊆ [eta_{k-1}, block, w_k]_2
//      and record p_k.
// Throws std::logic_error if an inclusion fails (cannot happen when the
// margins are honored); NotContainable propagates from the cylinder search.
ConstructionState step(const ConstructionState& state, const ConstrainedBlock& block,
                       const EnumerationItem& item);

// runs step for k = 1..depth with blocks filled by the policy
ConstructionState generate_point(const Schedule& schedule, long depth,
                                 const FreeDigitPolicy& policy);
ConstructionState generate_point(const Schedule& schedule, long depth,
                                 const FreeDigitPolicy& policy, const ItemProvider& items);

// The complete level-k set: one 2-adic cylinder of order t_k per choice of
// free digits in blocks 1..k. Count is prod_{j<=k} 2^(ell_j*(m-2)); throws
// CapExceeded (with the exact required count) if that exceeds cap.
std::vector<Cylinder> enumerate_level(const Schedule& schedule, long k,
                                      unsigned long long cap);
std::vector<Cylinder> enumerate_level(const Schedule& schedule, long k,
                                      unsigned long long cap, const ItemProvider& items);

// The order data (rho_k, t_k, p_k) for k = 1..depth. These do not depend
// on the block digits or the policy, only on the schedule and enumeration,
// so they can be computed without any cylinder searches.
std::vector<StepInfo> trace_orders(const Schedule& schedule, long depth);
std::vector<StepInfo> trace_orders(const Schedule& schedule, long depth,
                                   const ItemProvider& items);

// Both sides of the t_k estimate, as pure integer power comparisons:
//   2^(t_k - 1) >= 2^(t_{k-1} + |w_k| + n_k) * 3^(|v_k| + 1)
//   2^(t_k - 2) <  2^(t_{k-1} + |w_k| + n_k) * 3^(|v_k| + 2)
bool order_bounds_hold(long t_prev, long n, std::size_t wlen, std::size_t vlen, long t);

}  // namespace dense23
