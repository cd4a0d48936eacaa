#include "dense23/enumeration.hpp"

#include <stdexcept>

namespace dense23 {

long gap_bound_for_lengths(std::size_t wlen, std::size_t vlen) {
    // bitlen(2^|w| * 3^(2+|v|)) - 1 gives floor(log2), then + 2
    BigNat x = BigNat::power(3, vlen + 2).shifted_left(wlen);
    return static_cast<long>(x.bit_length()) + 1;
}

long gap_bound(const Word& w, const Word& v) {
    if (w.base() != 2 || v.base() != 3)
        throw std::invalid_argument("gap_bound: expects a base-2 and a base-3 word");
    return gap_bound_for_lengths(w.size(), v.size());
}

Word nth_word(int base, unsigned long long idx0) {
    if (base != 2 && base != 3)
        throw std::invalid_argument("nth_word: base must be 2 or 3");
    unsigned long long cum = 0;
    unsigned long long count = static_cast<unsigned long long>(base);  // words of current length
    std::size_t len = 1;
    while (idx0 >= cum + count) {
        cum += count;
        count *= static_cast<unsigned long long>(base);
        ++len;
    }
    unsigned long long val = idx0 - cum;
    std::string digits(len, '0');
    for (std::size_t i = len; i-- > 0;) {
        digits[i] = static_cast<char>('0' + val % base);
        val /= static_cast<unsigned long long>(base);
    }
    return Word(base, std::move(digits));
}

EnumerationItem item_at(long i) {
    if (i < 1) throw std::invalid_argument("item_at: index must be >= 1");
    // round r holds (3^(r+1) - 3)/2 items (the size of the ternary list)
    unsigned long long start = 1;
    unsigned long long vsize = 3;   // 3 + 9 + ... + 3^r
    unsigned long long wsize = 2;   // 2 + 4 + ... + 2^r
    unsigned long long pow3 = 3, pow2 = 2;
    for (;;) {
        if (static_cast<unsigned long long>(i) < start + vsize) {
            unsigned long long j = static_cast<unsigned long long>(i) - start;
            Word w = nth_word(2, j % wsize);
            Word v = nth_word(3, j);
            return EnumerationItem{i, w, v, gap_bound(w, v)};
        }
        start += vsize;
        pow3 *= 3;
        pow2 *= 2;
        vsize += pow3;
        wsize += pow2;
    }
}

}  // namespace dense23
