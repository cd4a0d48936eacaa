#include "dense23/bignat.hpp"

#include <algorithm>
#include <stdexcept>

namespace dense23 {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
// 3^20, the largest power of 3 in 32 bits
constexpr std::uint32_t kPow3Chunk = 3486784401u;
constexpr std::size_t kPow3ChunkExp = 20;
}  // namespace

BigNat::BigNat(std::uint64_t v) {
    if (v != 0) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigNat::bit(std::size_t i) const noexcept {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

bool BigNat::low_bits_zero(std::size_t n) const noexcept {
    std::size_t whole = n / 32;
    for (std::size_t i = 0; i < whole && i < limbs_.size(); ++i)
        if (limbs_[i] != 0) return false;
    std::size_t rest = n % 32;
    if (rest != 0 && whole < limbs_.size())
        if (limbs_[whole] & ((1u << rest) - 1u)) return false;
    return true;
}

std::uint64_t BigNat::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigNat::to_u64: value too large");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
    if (*this < rhs) throw std::underflow_error("BigNat subtraction underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
        if (borrow == 0 && i >= rhs.limbs_.size()) break;
    }
    trim();
    return *this;
}

BigNat BigNat::operator+(const BigNat& rhs) const {
    BigNat out = *this;
    out += rhs;
    return out;
}

BigNat BigNat::operator-(const BigNat& rhs) const {
    BigNat out = *this;
    out -= rhs;
    return out;
}

BigNat BigNat::operator*(const BigNat& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigNat{};
    BigNat out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t a = limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t pos = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[pos] + carry;
            out.limbs_[pos] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++pos;
        }
    }
    out.trim();
    return out;
}

BigNat& BigNat::add_u32(std::uint32_t a) {
    std::uint64_t carry = a;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
        std::uint64_t sum = limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat& BigNat::mul_u32(std::uint32_t f) {
    if (f == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * f + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigNat::divmod_u32(std::uint32_t d) {
    if (d == 0) throw std::domain_error("BigNat division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigNat BigNat::shifted_left(std::size_t bits) const {
    if (is_zero()) return BigNat{};
    std::size_t limb_shift = bits / 32;
    std::size_t bit_shift = bits % 32;
    BigNat out;
    out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        out.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
        out.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    out.trim();
    return out;
}

BigNat BigNat::shifted_right(std::size_t bits) const {
    std::size_t limb_shift = bits / 32;
    if (limb_shift >= limbs_.size()) return BigNat{};
    std::size_t bit_shift = bits % 32;
    BigNat out;
    out.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        out.limbs_[i] = static_cast<std::uint32_t>(v);
    }
    out.trim();
    return out;
}

std::strong_ordering BigNat::operator<=>(const BigNat& rhs) const noexcept {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    return std::strong_ordering::equal;
}

BigNat BigNat::power(std::uint32_t base, std::uint64_t exp) {
    BigNat result(1);
    BigNat sq(base);
    while (exp != 0) {
        if (exp & 1) result = result * sq;
        exp >>= 1;
        if (exp != 0) sq = sq * sq;
    }
    return result;
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    BigNat out;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("invalid decimal digit");
        out.mul_u32(10);
        out.add_u32(static_cast<std::uint32_t>(c - '0'));
    }
    return out;
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    BigNat tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t rem = tmp.divmod_u32(1000000000u);
        for (int i = 0; i < 9; ++i) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

std::pair<BigNat, bool> div_pow_floor(const BigNat& x, int base, std::size_t exp) {
    if (base == 2) {
        bool exact = x.low_bits_zero(exp);
        return {x.shifted_right(exp), exact};
    }
    if (base != 3) throw std::invalid_argument("div_pow_floor: base must be 2 or 3");
    BigNat q = x;
    bool exact = true;
    std::size_t left = exp;
    while (left > 0) {
        std::size_t take = std::min(left, kPow3ChunkExp);
        std::uint32_t d = take == kPow3ChunkExp
                              ? kPow3Chunk
                              : static_cast<std::uint32_t>(BigNat::power(3, take).to_u64());
        if (q.divmod_u32(d) != 0) exact = false;
        left -= take;
    }
    return {q, exact};
}

}  // namespace dense23
