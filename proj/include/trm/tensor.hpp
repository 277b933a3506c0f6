#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "trm/bits.hpp"

namespace trm {

// Shape of a t-dimensional tensor. Flat storage is row-major with the LAST
// axis fastest: entry (i_1..i_t) lives at bit ((..(i_1*n_2+i_2)..)*n_t + i_t).
struct TensorShape {
    std::vector<std::uint32_t> dims;

    TensorShape() = default;
    explicit TensorShape(std::vector<std::uint32_t> d) : dims(std::move(d)) {}
    std::size_t t() const { return dims.size(); }
    std::size_t total() const;
    bool operator==(const TensorShape&) const = default;
};

std::size_t flat_index(const TensorShape& s, std::span<const std::size_t> idx);

// Packed Boolean tensor over the flat layout above.
class BitTensor {
  public:
    BitTensor() = default;
    explicit BitTensor(TensorShape s) : shape_(std::move(s)), data_(shape_.total()) {}
    BitTensor(TensorShape s, BitWord d);

    const TensorShape& shape() const { return shape_; }
    BitWord& flat() { return data_; }
    const BitWord& flat() const { return data_; }
    bool get(std::span<const std::size_t> idx) const { return data_.get(flat_index(shape_, idx)); }
    void set(std::span<const std::size_t> idx, bool v) { data_.set(flat_index(shape_, idx), v); }
    bool operator==(const BitTensor&) const = default;

  private:
    TensorShape shape_;
    BitWord data_;
};

// Tri-valued tensor (0/1/*) over the same layout.
class TriTensor {
  public:
    TriTensor() = default;
    explicit TriTensor(TensorShape s) : shape_(std::move(s)), data_(shape_.total()) {}
    TriTensor(TensorShape s, TriWord d);
    static TriTensor from_bits(const BitTensor& b) {
        return TriTensor(b.shape(), TriWord::from_word(b.flat()));
    }
    static TriTensor all_star(TensorShape s) {
        TriTensor out(s);
        out.data_ = TriWord::all_star(out.shape_.total());
        return out;
    }

    const TensorShape& shape() const { return shape_; }
    TriWord& flat() { return data_; }
    const TriWord& flat() const { return data_; }
    Tri get(std::span<const std::size_t> idx) const { return data_.get(flat_index(shape_, idx)); }
    void set(std::span<const std::size_t> idx, Tri v) { data_.set(flat_index(shape_, idx), v); }
    bool operator==(const TriTensor&) const = default;

  private:
    TensorShape shape_;
    TriWord data_;
};

// Transpose of a packed bit matrix: `in` is rows x cols with entry (r,c) at
// bit r*cols+c; `out` receives the cols x rows transpose (entry (c,r) at bit
// c*rows+r). Buffers must not alias; `out` is fully overwritten.
//
// Viewing a flat tensor as (n_first x N/n_first) and transposing rotates the
// axis order first->last; viewing as (N/n_last x n_last) rotates last->first.
// Fast paths: 64x64 tiles when both dims are multiples of 64, and packed
// narrow-edge paths when one dim divides 64 and the other is a multiple of 64.
void bit_transpose(const u64* in, u64* out, std::size_t rows, std::size_t cols);

}  // namespace trm
