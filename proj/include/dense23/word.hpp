#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dense23/bignat.hpp"

namespace dense23 {

// A finite digit string over base 2 or base 3. The empty word denotes
// the full interval [0,1). Digits are stored as ASCII '0'..'2', most
// significant first, matching the a_1 a_2 ... convention used everywhere
// in this library (positions are 1-indexed).
class Word {
public:
    Word() = default;
    // throws std::invalid_argument on a base outside {2,3} or a digit
    // outside {0,...,base-1}
    Word(int base, std::string digits);

    int base() const noexcept { return base_; }
    const std::string& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }

    // digit value at 1-indexed position
    int digit_at(std::size_t pos) const;
    Word prefix(std::size_t len) const;
    // len digits starting at 1-indexed position pos
    Word segment(std::size_t pos, std::size_t len) const;

    bool operator==(const Word& rhs) const noexcept = default;

private:
    int base_ = 2;
    std::string digits_;
};

// concatenation; bases must match
Word operator+(const Word& a, const Word& b);

// prints as base:"digits", e.g. 2:"101"
std::ostream& operator<<(std::ostream& os, const Word& w);

bool valid_digits(int base, std::string_view digits);

// positional value of the digit string as an integer
BigNat word_value(const Word& w);

// the base-b digit string of value, left-padded with zeros to width;
// requires value < base^width
Word digits_of(const BigNat& value, int base, std::size_t width);

}  // namespace dense23
