#include "dense23/word.hpp"

#include <ostream>
#include <stdexcept>

namespace dense23 {

bool valid_digits(int base, std::string_view digits) {
    for (char c : digits)
        if (c < '0' || c >= static_cast<char>('0' + base)) return false;
    return true;
}

Word::Word(int base, std::string digits) : base_(base), digits_(std::move(digits)) {
    if (base_ != 2 && base_ != 3)
        throw std::invalid_argument("Word: base must be 2 or 3");
    if (!valid_digits(base_, digits_))
        throw std::invalid_argument("Word: digit outside base " + std::to_string(base_));
}

int Word::digit_at(std::size_t pos) const {
    if (pos == 0 || pos > digits_.size())
        throw std::out_of_range("Word::digit_at: position out of range");
    return digits_[pos - 1] - '0';
}

Word Word::prefix(std::size_t len) const {
    if (len > digits_.size()) throw std::out_of_range("Word::prefix: too long");
    return Word(base_, digits_.substr(0, len));
}

Word Word::segment(std::size_t pos, std::size_t len) const {
    if (pos == 0 || pos + len - 1 > digits_.size())
        throw std::out_of_range("Word::segment: out of range");
    return Word(base_, digits_.substr(pos - 1, len));
}

Word operator+(const Word& a, const Word& b) {
    if (a.base() != b.base())
        throw std::invalid_argument("Word concatenation: base mismatch");
    return Word(a.base(), a.digits() + b.digits());
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.base() << ":\"" << w.digits() << '"';
}

BigNat word_value(const Word& w) {
    BigNat value;
    if (w.base() == 2) {
        // 32-digit chunks, one shift-and-or each
        const std::string& d = w.digits();
        for (std::size_t i = 0; i < d.size(); i += 32) {
            std::size_t take = std::min<std::size_t>(32, d.size() - i);
            std::uint32_t chunk = 0;
            for (std::size_t j = 0; j < take; ++j)
                chunk = (chunk << 1) | static_cast<std::uint32_t>(d[i + j] - '0');
            value = value.shifted_left(take);
            value.add_u32(chunk);
        }
        return value;
    }
    const std::string& d = w.digits();
    for (std::size_t i = 0; i < d.size(); i += 20) {
        std::size_t take = std::min<std::size_t>(20, d.size() - i);
        std::uint32_t chunk = 0;
        for (std::size_t j = 0; j < take; ++j)
            chunk = chunk * 3 + static_cast<std::uint32_t>(d[i + j] - '0');
        value.mul_u32(static_cast<std::uint32_t>(BigNat::power(3, take).to_u64()));
        value.add_u32(chunk);
    }
    return value;
}

Word digits_of(const BigNat& value, int base, std::size_t width) {
    if (base != 2 && base != 3)
        throw std::invalid_argument("digits_of: base must be 2 or 3");
    std::string out(width, '0');
    if (base == 2) {
        if (value.bit_length() > width)
            throw std::invalid_argument("digits_of: value too large for width");
        for (std::size_t i = 0; i < width; ++i)
            if (value.bit(i)) out[width - 1 - i] = '1';
        return Word(2, std::move(out));
    }
    BigNat tmp = value;
    std::size_t pos = width;
    while (!tmp.is_zero()) {
        std::uint32_t rem = tmp.divmod_u32(3486784401u);  // 3^20
        for (int j = 0; j < 20; ++j) {
            if (pos == 0) {
                if (rem != 0 || !tmp.is_zero())
                    throw std::invalid_argument("digits_of: value too large for width");
                break;
            }
            out[--pos] = static_cast<char>('0' + rem % 3);
            rem /= 3;
        }
    }
    return Word(3, std::move(out));
}

}  // namespace dense23
