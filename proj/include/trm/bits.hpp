#pragma once
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trm/kernels.hpp"

namespace trm {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Extract `len` (<= 64) bits starting at bit offset `off` from a packed array.
u64 extract_bits(const u64* w, std::size_t off, unsigned len);
// Write the low `len` bits of `v` at bit offset `off`.
void deposit_bits(u64* w, std::size_t off, unsigned len, u64 v);
// Copy `len` bits from src@src_off to dst@dst_off (buffers must not overlap).
void copy_bits(const u64* src, std::size_t src_off, u64* dst, std::size_t dst_off,
               std::size_t len);
// Gather the bits of v at the set positions of mask, packed from bit 0 up
// (portable pext).
u64 compress_bits(u64 v, u64 mask);

// Packed bit vector. Bit i lives at word i/64, bit i%64; bits beyond size()
// are kept zero so word-level popcounts and comparisons are exact.
class BitWord {
  public:
    BitWord() = default;
    explicit BitWord(std::size_t bits) : bits_(bits), w_(words_for(bits), 0) {}
    static BitWord from_string(const std::string& s);  // "0110", position 0 first

    std::size_t size() const { return bits_; }
    std::size_t words() const { return w_.size(); }
    u64* data() { return w_.data(); }
    const u64* data() const { return w_.data(); }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool b) {
        const u64 m = u64(1) << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= u64(1) << (i & 63); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }
    void fill_ones();
    void mask_tail();  // zero any bits beyond size()

    u64 count_ones() const { return kern::ops().popcount(w_.data(), w_.size()); }
    bool is_zero() const { return kern::ops().is_zero(w_.data(), w_.size()); }
    void xor_with(const BitWord& o) { kern::ops().xor_into(w_.data(), o.w_.data(), w_.size()); }

    friend bool operator==(const BitWord& a, const BitWord& b) {
        return a.bits_ == b.bits_ && a.w_ == b.w_;
    }

    std::string to_string() const;

  private:
    std::size_t bits_ = 0;
    std::vector<u64> w_;
};

u64 hamming(const BitWord& a, const BitWord& b);

enum class Tri : unsigned char { zero = 0, one = 1, star = 2 };

// Tri-valued word over {0, 1, *}. Internally a value plane and an erasure
// plane of equal length; the value bit is kept 0 under every erasure so the
// planes can be compared and counted at word granularity.
class TriWord {
  public:
    TriWord() = default;
    explicit TriWord(std::size_t bits) : values(bits), erased(bits) {}
    TriWord(BitWord v, BitWord e) : values(std::move(v)), erased(std::move(e)) { normalize(); }
    static TriWord from_word(const BitWord& w) { return TriWord(w, BitWord(w.size())); }
    static TriWord from_string(const std::string& s);  // over {0,1,*}
    static TriWord all_star(std::size_t bits);

    std::size_t size() const { return values.size(); }
    Tri get(std::size_t i) const {
        if (erased.get(i)) return Tri::star;
        return values.get(i) ? Tri::one : Tri::zero;
    }
    void set(std::size_t i, Tri t) {
        erased.set(i, t == Tri::star);
        values.set(i, t == Tri::one);
    }
    u64 erasure_count() const { return erased.count_ones(); }
    bool has_erasure() const { return !erased.is_zero(); }
    void normalize() {
        kern::ops().andnot_into(values.data(), erased.data(), values.words());
    }
    // true iff w agrees with every non-erased position
    bool consistent_with(const BitWord& w) const {
        return kern::ops().xor_andnot_is_zero(w.data(), values.data(), erased.data(),
                                              values.words());
    }

    friend bool operator==(const TriWord& a, const TriWord& b) {
        return a.values == b.values && a.erased == b.erased;
    }

    std::string to_string() const;

    BitWord values;
    BitWord erased;
};

}  // namespace trm
