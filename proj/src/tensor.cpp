#include "trm/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace trm {

std::size_t TensorShape::total() const {
    std::size_t n = 1;
    for (auto d : dims) {
        if (d == 0) throw std::invalid_argument("TensorShape: zero axis length");
        n *= d;
    }
    return n;
}

std::size_t flat_index(const TensorShape& s, std::span<const std::size_t> idx) {
    if (idx.size() != s.t()) throw std::invalid_argument("flat_index: rank mismatch");
    std::size_t f = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (idx[a] >= s.dims[a]) throw std::out_of_range("flat_index: coordinate out of range");
        f = f * s.dims[a] + idx[a];
    }
    return f;
}

BitTensor::BitTensor(TensorShape s, BitWord d) : shape_(std::move(s)), data_(std::move(d)) {
    if (data_.size() != shape_.total())
        throw std::invalid_argument("BitTensor: size does not match shape");
}

TriTensor::TriTensor(TensorShape s, TriWord d) : shape_(std::move(s)), data_(std::move(d)) {
    if (data_.size() != shape_.total())
        throw std::invalid_argument("TriTensor: size does not match shape");
}

namespace {

// In-place transpose of a 64x64 bit matrix; a[r] bit c = entry (r,c).
void transpose64(u64 a[64]) {
    u64 m = 0x00000000FFFFFFFFull;
    for (unsigned j = 32; j != 0; j >>= 1, m ^= m << j) {
        for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
            const u64 t = ((a[k] >> j) ^ a[k | j]) & m;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

void transpose_tiled(const u64* in, u64* out, std::size_t rows, std::size_t cols) {
    const std::size_t wr = cols / 64, wo = rows / 64;
    u64 tile[64];
    for (std::size_t br = 0; br < rows; br += 64)
        for (std::size_t bc = 0; bc < cols; bc += 64) {
            for (unsigned i = 0; i < 64; ++i) tile[i] = in[(br + i) * wr + bc / 64];
            transpose64(tile);
            for (unsigned i = 0; i < 64; ++i) out[(bc + i) * wo + br / 64] = tile[i];
        }
}

// rows <= 64 and rows | 64, cols % 64 == 0: output rows are `rows` bits each
// and pack exactly 64/rows per word.
void transpose_narrow_rows(const u64* in, u64* out, std::size_t rows, std::size_t cols) {
    const std::size_t wr = cols / 64;
    const unsigned per = 64 / static_cast<unsigned>(rows);
    u64 tile[64];
    for (std::size_t bc = 0; bc < cols; bc += 64) {
        for (std::size_t i = 0; i < rows; ++i) tile[i] = in[i * wr + bc / 64];
        std::fill(tile + rows, tile + 64, 0);
        transpose64(tile);
        u64* dst = out + (bc * rows) / 64;
        for (std::size_t w = 0; w < rows; ++w) {
            u64 acc = 0;
            for (unsigned j = 0; j < per; ++j) acc |= tile[w * per + j] << (j * rows);
            dst[w] = acc;
        }
    }
}

// cols <= 64 and cols | 64, rows % 64 == 0: input rows are `cols` bits each,
// 64/cols per word.
void transpose_narrow_cols(const u64* in, u64* out, std::size_t rows, std::size_t cols) {
    const std::size_t wo = rows / 64;
    const unsigned per = 64 / static_cast<unsigned>(cols);
    const u64 maskc = cols == 64 ? ~u64(0) : (u64(1) << cols) - 1;
    u64 tile[64];
    for (std::size_t br = 0; br < rows; br += 64) {
        const u64* src = in + (br * cols) / 64;
        for (unsigned i = 0; i < 64; ++i)
            tile[i] = (src[i / per] >> ((i % per) * cols)) & maskc;
        transpose64(tile);
        for (std::size_t c = 0; c < cols; ++c) out[c * wo + br / 64] = tile[c];
    }
}

void transpose_generic(const u64* in, u64* out, std::size_t rows, std::size_t cols) {
    const std::size_t total = rows * cols;
    std::fill(out, out + words_for(total), 0);
    for (std::size_t w = 0; w < words_for(total); ++w) {
        u64 x = in[w];
        while (x) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(x));
            x &= x - 1;
            const std::size_t idx = w * 64 + b;
            if (idx >= total) break;
            const std::size_t o = (idx % cols) * rows + idx / cols;
            out[o / 64] |= u64(1) << (o % 64);
        }
    }
}

}  // namespace

void bit_transpose(const u64* in, u64* out, std::size_t rows, std::size_t cols) {
    assert(in != out);
    if (rows % 64 == 0 && cols % 64 == 0)
        transpose_tiled(in, out, rows, cols);
    else if (rows <= 64 && 64 % rows == 0 && cols % 64 == 0)
        transpose_narrow_rows(in, out, rows, cols);
    else if (cols <= 64 && 64 % cols == 0 && rows % 64 == 0)
        transpose_narrow_cols(in, out, rows, cols);
    else
        transpose_generic(in, out, rows, cols);
}

}  // namespace trm
