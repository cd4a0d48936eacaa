#include "dense23/cylinder.hpp"

#include <ostream>
#include <stdexcept>

#include "dense23/errors.hpp"

namespace dense23 {

namespace {

void check_base(int base) {
    if (base != 2 && base != 3)
        throw std::invalid_argument("cylinder base must be 2 or 3");
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Cylinder& c) {
    return os << '[' << c.index.to_decimal() << '/' << c.base << '^' << c.order << ')';
}

BigNat pow_of(int base, long exp) {
    check_base(base);
    if (exp < 0) throw std::invalid_argument("pow_of: negative exponent");
    if (base == 2) return BigNat(1).shifted_left(static_cast<std::size_t>(exp));
    return BigNat::power(3, static_cast<std::uint64_t>(exp));
}

Cylinder word_to_cylinder(const Word& w) {
    return Cylinder{w.base(), static_cast<long>(w.size()), word_value(w)};
}

Word cylinder_to_word(const Cylinder& c) {
    check_base(c.base);
    return digits_of(c.index, c.base, static_cast<std::size_t>(c.order));
}

Cylinder refine(const Cylinder& c, const Word& suffix) {
    if (suffix.base() != c.base)
        throw std::invalid_argument("refine: base mismatch");
    BigNat index = c.base == 2
                       ? c.index.shifted_left(suffix.size())
                       : c.index * BigNat::power(3, suffix.size());
    index += word_value(suffix);
    return Cylinder{c.base, c.order + static_cast<long>(suffix.size()), index};
}

bool contains(const Cylinder& outer, const Cylinder& inner) {
    BigNat po = pow_of(outer.base, outer.order);
    BigNat pi = pow_of(inner.base, inner.order);
    if (outer.index * pi > inner.index * po) return false;
    BigNat inner_hi = inner.index;
    inner_hi.add_u32(1);
    BigNat outer_hi = outer.index;
    outer_hi.add_u32(1);
    return inner_hi * po <= outer_hi * pi;
}

long min_inner_order(long outer_order, int outer_base, int inner_base, int margin) {
    check_base(outer_base);
    check_base(inner_base);
    if (outer_base == inner_base)
        throw std::invalid_argument("min_inner_order: bases must differ");
    if (margin != 2 && margin != 3)
        throw std::invalid_argument("min_inner_order: margin must be 2 or 3");
    if (outer_order < 0)
        throw std::invalid_argument("min_inner_order: negative order");

    BigNat target = pow_of(outer_base, outer_order);
    target.mul_u32(static_cast<std::uint32_t>(margin));

    if (inner_base == 2) {
        // smallest rho with 2^rho >= target is bitlen(target - 1)
        BigNat t1 = target;
        t1 -= BigNat(1);
        return static_cast<long>(t1.bit_length());
    }
    // smallest rho with 3^rho >= target; start from a safe integer
    // underestimate of log3(target) and count up
    std::size_t bl = target.bit_length();
    long rho = bl > 1 ? static_cast<long>((bl - 1) * 63 / 100) : 0;
    BigNat p = BigNat::power(3, static_cast<std::uint64_t>(rho));
    while (p < target) {
        p.mul_u32(3);
        ++rho;
    }
    return rho;
}

Cylinder find_inner_cylinder(const Cylinder& outer, int inner_base, long inner_order) {
    check_base(inner_base);
    if (inner_order < 0)
        throw std::invalid_argument("find_inner_cylinder: negative order");

    BigNat pi = pow_of(inner_base, inner_order);
    BigNat po = pow_of(outer.base, outer.order);

    // smallest index with left endpoint >= outer's left endpoint
    auto [q, exact] = div_pow_floor(outer.index * pi, outer.base,
                                    static_cast<std::size_t>(outer.order));
    BigNat a = q;
    if (!exact) a.add_u32(1);

    BigNat a_hi = a;
    a_hi.add_u32(1);
    BigNat outer_hi = outer.index;
    outer_hi.add_u32(1);
    if (a_hi * po > outer_hi * pi)
        throw NotContainable("no order-" + std::to_string(inner_order) + " base-" +
                             std::to_string(inner_base) + " cylinder inside the outer cylinder");
    return Cylinder{inner_base, inner_order, a};
}

std::optional<Word> ternary_prefix_of_cylinder(const Cylinder& c, long length) {
    if (c.base != 2)
        throw std::invalid_argument("ternary_prefix_of_cylinder: cylinder must be base 2");
    if (length < 0)
        throw std::invalid_argument("ternary_prefix_of_cylinder: negative length");

    BigNat p3 = pow_of(3, length);
    // the only candidate: largest u with u/3^length <= left endpoint
    BigNat u = (c.index * p3).shifted_right(static_cast<std::size_t>(c.order));
    BigNat u_hi = u;
    u_hi.add_u32(1);
    BigNat c_hi = c.index;
    c_hi.add_u32(1);
    // right endpoints: need (c.index+1) * 3^length <= (u+1) * 2^order
    if (c_hi * p3 > u_hi.shifted_left(static_cast<std::size_t>(c.order)))
        return std::nullopt;
    return digits_of(u, 3, static_cast<std::size_t>(length));
}

}  // namespace dense23
