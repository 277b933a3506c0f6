#include "trm/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace trm {

namespace {

void put_u32(std::ostream& os, u32 v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

u32 get_u32(std::istream& is, const char* what) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) throw IoError(std::string("truncated ") + what);
    u32 v = 0;
    for (int i = 0; i < 4; ++i) v |= u32(b[i]) << (8 * i);
    return v;
}

u64 get_u64(std::istream& is, const char* what) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) throw IoError(std::string("truncated ") + what);
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(b[i]) << (8 * i);
    return v;
}

void put_bits(std::ostream& os, const BitWord& w) {
    const std::size_t nb = (w.size() + 7) / 8;
    std::vector<unsigned char> buf(nb, 0);
    for (std::size_t i = 0; i < w.words(); ++i) {
        const u64 v = w.data()[i];
        for (std::size_t j = 0; j < 8 && i * 8 + j < nb; ++j)
            buf[i * 8 + j] = static_cast<unsigned char>(v >> (8 * j));
    }
    os.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(nb));
}

BitWord get_bits(std::istream& is, std::size_t bits, const char* what) {
    const std::size_t nb = (bits + 7) / 8;
    std::vector<unsigned char> buf(nb);
    if (nb && !is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(nb)))
        throw IoError(std::string("truncated ") + what);
    BitWord w(bits);
    for (std::size_t j = 0; j < nb; ++j) w.data()[j / 8] |= u64(buf[j]) << (8 * (j % 8));
    const BitWord check = w;  // reject set bits beyond the declared length
    w.mask_tail();
    if (!(check == w)) throw IoError(std::string(what) + ": padding bits set");
    return w;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    return is;
}

void expect_eof(std::istream& is, const char* what) {
    if (is.peek() != std::char_traits<char>::eof())
        throw IoError(std::string(what) + ": trailing bytes");
}

constexpr char kTableMagic[8] = {'T', 'R', 'M', 'L', 'T', 'B', '0', '1'};

}  // namespace

void save_bitword(std::ostream& os, const BitWord& w) {
    put_u64(os, w.size());
    put_bits(os, w);
    if (!os) throw IoError("bit vector: write failed");
}

BitWord load_bitword(std::istream& is) {
    const u64 bits = get_u64(is, "bit vector header");
    if (bits > (u64(1) << 40)) throw IoError("bit vector: implausible length");
    return get_bits(is, std::size_t(bits), "bit vector payload");
}

void save_bitword_file(const std::string& path, const BitWord& w) {
    auto os = open_out(path);
    save_bitword(os, w);
}

BitWord load_bitword_file(const std::string& path) {
    auto is = open_in(path);
    BitWord w = load_bitword(is);
    expect_eof(is, "bit vector");
    return w;
}

void save_tritensor(std::ostream& os, const TriTensor& a) {
    const TensorShape& sh = a.shape();
    put_u32(os, u32(sh.t()));
    for (u32 d : sh.dims) put_u32(os, d);
    const std::size_t n = sh.total();
    std::vector<unsigned char> buf((n + 3) / 4, 0);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned sym = a.flat().erased.get(i) ? 2u : (a.flat().values.get(i) ? 1u : 0u);
        buf[i / 4] |= static_cast<unsigned char>(sym << (2 * (i % 4)));
    }
    os.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
    if (!os) throw IoError("tensor: write failed");
}

TriTensor load_tritensor(std::istream& is) {
    const u32 t = get_u32(is, "tensor header");
    if (t == 0 || t > 64) throw IoError("tensor: bad axis count");
    TensorShape sh;
    sh.dims.resize(t);
    for (u32 i = 0; i < t; ++i) {
        sh.dims[i] = get_u32(is, "tensor header");
        if (sh.dims[i] == 0) throw IoError("tensor: zero axis length");
    }
    std::size_t n = 1;
    for (u32 d : sh.dims) {
        if (n > (std::size_t(1) << 40) / d) throw IoError("tensor: implausible size");
        n *= d;
    }
    std::vector<unsigned char> buf((n + 3) / 4);
    if (!buf.empty() &&
        !is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size())))
        throw IoError("truncated tensor payload");
    BitWord vals(n), ers(n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned sym = (buf[i / 4] >> (2 * (i % 4))) & 3u;
        if (sym == 3) throw IoError("tensor: invalid symbol 11");
        if (sym == 2) ers.set(i, true);
        else if (sym == 1) vals.set(i, true);
    }
    const std::size_t tail = n % 4;
    if (tail && (buf.back() >> (2 * tail)) != 0) throw IoError("tensor: padding bits set");
    return TriTensor(sh, TriWord(std::move(vals), std::move(ers)));
}

void save_tritensor_file(const std::string& path, const TriTensor& a) {
    auto os = open_out(path);
    save_tritensor(os, a);
}

TriTensor load_tritensor_file(const std::string& path) {
    auto is = open_in(path);
    TriTensor a = load_tritensor(is);
    expect_eof(is, "tensor");
    return a;
}

void save_ml_table(std::ostream& os, const MlTable& t) {
    os.write(kTableMagic, 8);
    put_u32(os, u32(t.code().r));
    put_u32(os, u32(t.code().m));
    const std::size_t n = t.code().length();
    const std::size_t nb = (n + 7) / 8;
    std::vector<unsigned char> buf(nb);
    for (std::size_t w = 0; w < (std::size_t(1) << n); ++w) {
        const u64 cw = t.lookup(w);
        for (std::size_t j = 0; j < nb; ++j)
            buf[j] = static_cast<unsigned char>(cw >> (8 * j));
        os.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(nb));
    }
    if (!os) throw IoError("ml table: write failed");
}

MlTable load_ml_table(std::istream& is) {
    char magic[8];
    if (!is.read(magic, 8) || !std::equal(magic, magic + 8, kTableMagic))
        throw IoError("ml table: bad magic");
    const u32 r = get_u32(is, "ml table header");
    const u32 m = get_u32(is, "ml table header");
    if (m > 4 || r > m) throw IoError("ml table: bad parameters");
    const RmCode code(static_cast<int>(r), static_cast<int>(m));
    const std::size_t n = code.length();
    const std::size_t nb = (n + 7) / 8;
    std::vector<std::uint16_t> entries(std::size_t(1) << n);
    std::vector<unsigned char> buf(nb);
    for (std::size_t w = 0; w < entries.size(); ++w) {
        if (!is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(nb)))
            throw IoError("truncated ml table");
        u64 cw = 0;
        for (std::size_t j = 0; j < nb; ++j) cw |= u64(buf[j]) << (8 * j);
        if (n < 64 && (cw >> n) != 0) throw IoError("ml table: padding bits set");
        entries[w] = static_cast<std::uint16_t>(cw);
    }
    return MlTable(code, std::move(entries));
}

void save_ml_table_file(const std::string& path, const MlTable& t) {
    auto os = open_out(path);
    save_ml_table(os, t);
}

MlTable load_ml_table_file(const std::string& path) {
    auto is = open_in(path);
    MlTable t = load_ml_table(is);
    expect_eof(is, "ml table");
    return t;
}

MlTable load_or_build_ml_table(const RmCode& code) {
    const char* dir = std::getenv("TRM_CACHE_DIR");
    if (!dir || !*dir) return build_ml_table(code);
    const std::string path = std::string(dir) + "/mltable_r" + std::to_string(code.r) +
                             "_m" + std::to_string(code.m) + ".bin";
    try {
        MlTable t = load_ml_table_file(path);
        if (t.code() == code) return t;
    } catch (const IoError&) {
        // fall through to a fresh build
    }
    MlTable t = build_ml_table(code);
    try {
        save_ml_table_file(path, t);
    } catch (const IoError&) {
        // cache directory may be read-only; the table itself is still good
    }
    return t;
}

TriWord parse_triword(const std::string& line) {
    BitWord vals(line.size()), ers(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) {
        switch (line[i]) {
            case '0': break;
            case '1': vals.set(i, true); break;
            case '*': ers.set(i, true); break;
            default: throw IoError("ternary word: expected 0, 1 or *");
        }
    }
    return TriWord(std::move(vals), std::move(ers));
}

std::string format_triword(const TriWord& w) {
    std::string s(w.values.size(), '0');
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (w.erased.get(i)) s[i] = '*';
        else if (w.values.get(i)) s[i] = '1';
    }
    return s;
}

}  // namespace trm
