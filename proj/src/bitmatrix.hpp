#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace subtyper::detail {

// Square bit matrix used for reachability closures. Row-major, 64-bit
// blocks; not part of the public API.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t n)
        : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n_ * words_, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t row, std::size_t col) const {
        return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
    }

    void set(std::size_t row, std::size_t col) {
        bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
    }

    // row |= other row
    void merge_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &bits_[dst * words_];
        const std::uint64_t* s = &bits_[src * words_];
        for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
    }

    // True iff rows a (of *this) and b (of other) share a set bit.
    bool rows_intersect(std::size_t a, const BitMatrix& other, std::size_t b) const {
        const std::uint64_t* x = &bits_[a * words_];
        const std::uint64_t* y = &other.bits_[b * words_];
        for (std::size_t w = 0; w < words_; ++w)
            if (x[w] & y[w]) return true;
        return false;
    }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (get(i, j)) t.set(j, i);
        return t;
    }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace subtyper::detail
