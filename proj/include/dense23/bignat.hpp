#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dense23 {

// Unsigned arbitrary-precision integer. 32-bit limbs, little-endian,
// normalized: no high zero limbs, zero is the empty limb vector.
//
// Every quantity in this library (cylinder indices, integer powers,
// level counts) is a nonnegative integer, so there is no sign. All
// decisions downstream reduce to comparisons of these values; nothing
// ever touches floating point.
class BigNat {
public:
    BigNat() = default;
    explicit BigNat(std::uint64_t v);

    static BigNat from_decimal(std::string_view s);
    // base^exp by binary exponentiation
    static BigNat power(std::uint32_t base, std::uint64_t exp);

    bool is_zero() const noexcept { return limbs_.empty(); }
    // number of bits in the value; 0 for zero
    std::size_t bit_length() const noexcept;
    // i-th bit, 0 = least significant; false beyond bit_length
    bool bit(std::size_t i) const noexcept;
    bool low_bits_zero(std::size_t n) const noexcept;
    std::uint64_t to_u64() const;  // throws std::overflow_error if it does not fit

    std::string to_decimal() const;

    BigNat& operator+=(const BigNat& rhs);
    BigNat& operator-=(const BigNat& rhs);  // requires *this >= rhs
    BigNat operator+(const BigNat& rhs) const;
    BigNat operator-(const BigNat& rhs) const;
    BigNat operator*(const BigNat& rhs) const;
    BigNat& add_u32(std::uint32_t a);
    BigNat& mul_u32(std::uint32_t f);
    // in-place quotient, returns remainder; d must be nonzero
    std::uint32_t divmod_u32(std::uint32_t d);

    BigNat shifted_left(std::size_t bits) const;
    BigNat shifted_right(std::size_t bits) const;  // floor

    std::strong_ordering operator<=>(const BigNat& rhs) const noexcept;
    bool operator==(const BigNat& rhs) const noexcept = default;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

// floor(x / base^exp) together with an exactness flag (remainder == 0).
// base must be 2 or 3; base 2 is a shift, base 3 divides by chunks of
// 3^20 (the largest power of 3 fitting a 32-bit limb).
std::pair<BigNat, bool> div_pow_floor(const BigNat& x, int base, std::size_t exp);

}  // namespace dense23
