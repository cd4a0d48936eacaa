#pragma once

#include "dense23/word.hpp"

namespace dense23 {

// One slot of the interleaved sequence (w_1, v_1, w_2, v_2, ...) in which
// every nonempty binary and ternary word occurs infinitely often.
struct EnumerationItem {
    long index = 0;
    Word w;  // base 2
    Word v;  // base 3
    long gap_bound = 0;

    bool operator==(const EnumerationItem& rhs) const noexcept = default;
};

// floor(|w| + (2+|v|) * log2(3)) + 2, computed exactly as the bit length
// of 2^|w| * 3^(2+|v|) plus one. Dominates the realized gap p_k at every
// construction step.
long gap_bound(const Word& w, const Word& v);
long gap_bound_for_lengths(std::size_t wlen, std::size_t vlen);

// idx0-th word (0-based) of the given base in length-then-lexicographic
// order over lengths >= 1
Word nth_word(int base, unsigned long long idx0);

// Deterministic round-robin enumeration. Round r lists the base-2 words of
// length 1..r into the w slots and the base-3 words of length 1..r into the
// v slots, both in length-then-lexicographic order; the shorter binary list
// cycles until the ternary list is exhausted. Every word of length L shows
// up in every round r >= L, hence infinitely often.
EnumerationItem item_at(long i);

}  // namespace dense23
