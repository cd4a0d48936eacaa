#pragma once

#include <iosfwd>
#include <optional>

#include "dense23/bignat.hpp"
#include "dense23/word.hpp"

namespace dense23 {

// The half-open interval [index/base^order, (index+1)/base^order).
// order 0 and index 0 is the full interval [0,1).
struct Cylinder {
    int base = 2;
    long order = 0;
    BigNat index;

    bool operator==(const Cylinder& rhs) const noexcept = default;
};

// prints as [index/base^order, index+1/base^order)
std::ostream& operator<<(std::ostream& os, const Cylinder& c);

// base^exp as a BigNat; base must be 2 or 3
BigNat pow_of(int base, long exp);

Cylinder word_to_cylinder(const Word& w);
Word cylinder_to_word(const Cylinder& c);

// the subcylinder whose word is word(c) followed by suffix (same base)
Cylinder refine(const Cylinder& c, const Word& suffix);

// exact interval inclusion inner ⊆ outer, decided by the two
// cross-multiplied integer comparisons
//   outer.index * bi^ni <= inner.index * bo^no
//   (inner.index + 1) * bo^no <= (outer.index + 1) * bi^ni
// Bases may differ.
bool contains(const Cylinder& outer, const Cylinder& inner);

// The unique rho with
//   margin * inner_base^(-rho) <= outer_base^(-outer_order)
//                               <  margin * inner_base^(-(rho-1)),
// i.e. the smallest rho with inner_base^rho >= margin * outer_base^outer_order.
// With margin >= 2 this order makes every outer cylinder of the given order
// long enough to contain a full inner-base grid cell. Pure integer power
// comparisons; margin must be 2 or 3, bases must be {2,3} and distinct.
long min_inner_order(long outer_order, int outer_base, int inner_base, int margin);

// The cylinder of inner_base and inner_order with the smallest index fully
// contained in outer. Throws NotContainable if none exists (the caller
// asked for an order that is too coarse).
Cylinder find_inner_cylinder(const Cylinder& outer, int inner_base, long inner_order);

// The base-3 word u of the given length with c ⊆ [u]_3, if all points of
// the base-2 cylinder c share their first `length` ternary digits; nullopt
// if c straddles a 3-adic grid line of that order.
std::optional<Word> ternary_prefix_of_cylinder(const Cylinder& c, long length);

}  // namespace dense23
