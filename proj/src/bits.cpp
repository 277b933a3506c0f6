#include "trm/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace trm {

u64 extract_bits(const u64* w, std::size_t off, unsigned len) {
    const std::size_t wi = off >> 6;
    const unsigned sh = off & 63;
    u64 v = w[wi] >> sh;
    if (sh + len > 64) v |= w[wi + 1] << (64 - sh);
    if (len < 64) v &= (u64(1) << len) - 1;
    return v;
}

void deposit_bits(u64* w, std::size_t off, unsigned len, u64 v) {
    const u64 m = len < 64 ? (u64(1) << len) - 1 : ~u64(0);
    v &= m;
    const std::size_t wi = off >> 6;
    const unsigned sh = off & 63;
    w[wi] = (w[wi] & ~(m << sh)) | (v << sh);
    if (sh + len > 64) {
        const unsigned hi = sh + len - 64;  // bits spilling into the next word
        const u64 mhi = (u64(1) << hi) - 1;
        w[wi + 1] = (w[wi + 1] & ~mhi) | (v >> (64 - sh));
    }
}

void copy_bits(const u64* src, std::size_t src_off, u64* dst, std::size_t dst_off,
               std::size_t len) {
    while (len) {
        const unsigned n = len >= 64 ? 64 : static_cast<unsigned>(len);
        deposit_bits(dst, dst_off, n, extract_bits(src, src_off, n));
        src_off += n;
        dst_off += n;
        len -= n;
    }
}

u64 compress_bits(u64 v, u64 mask) {
    u64 out = 0;
    unsigned k = 0;
    while (mask) {
        const u64 low = mask & (~mask + 1);
        if (v & low) out |= u64(1) << k;
        ++k;
        mask ^= low;
    }
    return out;
}

BitWord BitWord::from_string(const std::string& s) {
    BitWord w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') w.set(i, true);
        else if (s[i] != '0') throw std::invalid_argument("BitWord::from_string: bad char");
    }
    return w;
}

void BitWord::fill_ones() {
    std::fill(w_.begin(), w_.end(), ~u64(0));
    mask_tail();
}

void BitWord::mask_tail() {
    if (bits_ & 63) w_.back() &= (u64(1) << (bits_ & 63)) - 1;
}

std::string BitWord::to_string() const {
    std::string s(bits_, '0');
    for (std::size_t i = 0; i < bits_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

u64 hamming(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    return kern::ops().popcount_xor(a.data(), b.data(), a.words());
}

TriWord TriWord::from_string(const std::string& s) {
    TriWord t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case '0': break;
            case '1': t.values.set(i, true); break;
            case '*': t.erased.set(i, true); break;
            default: throw std::invalid_argument("TriWord::from_string: bad char");
        }
    }
    return t;
}

TriWord TriWord::all_star(std::size_t bits) {
    TriWord t(bits);
    t.erased.fill_ones();
    return t;
}

std::string TriWord::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i) {
        const Tri v = get(i);
        s[i] = v == Tri::star ? '*' : (v == Tri::one ? '1' : '0');
    }
    return s;
}

}  // namespace trm
