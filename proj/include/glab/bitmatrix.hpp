#pragma once

#include <cstdint>
#include <vector>

#include "glab/simd/kernels.hpp"

namespace glab {

// dense GF(2) matrix, rows packed into 64-bit words
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool v = true) {
        uint64_t& w = data_[r * words_ + c / 64];
        uint64_t bit = 1ULL << (c % 64);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }

    // destructive row echelon; returns rank
    std::size_t rank() {
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rows_;
            for (std::size_t r = rank; r < rows_; ++r) {
                if (get(r, c)) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == rows_) continue;
            swap_rows(pivot, rank);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r != rank && get(r, c))
                    simd::xor_words(row(r), row(rank), words_);
            }
            ++rank;
        }
        return rank;
    }

private:
    uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < words_; ++i)
            std::swap(data_[a * words_ + i], data_[b * words_ + i]);
    }

    std::size_t rows_, cols_, words_;
    std::vector<uint64_t> data_;
};

} // namespace glab
