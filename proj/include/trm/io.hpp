#pragma once
// File formats.  All are byte-serialized in little-endian limb order so files
// are bit-exact across platforms:
//   - bit vector: u64 length-in-bits header, then ceil(length/8) payload bytes
//     with bit i stored at byte i/8, bit i%8;
//   - ternary tensor: u32 axis count, u32 per-axis lengths, then 2-bit symbols
//     (00=0, 01=1, 10=*, 11 invalid) packed four per byte, low bits first,
//     in flat order (last axis fastest);
//   - ML table: magic "TRMLTB01", u32 r, u32 m, then 2^(2^m) codeword entries
//     of ceil(2^m/8) bytes each, in received-word order.
// Malformed input raises IoError.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "trm/bits.hpp"
#include "trm/inner.hpp"
#include "trm/tensor.hpp"

namespace trm {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void save_bitword(std::ostream& os, const BitWord& w);
BitWord load_bitword(std::istream& is);
void save_bitword_file(const std::string& path, const BitWord& w);
BitWord load_bitword_file(const std::string& path);

void save_tritensor(std::ostream& os, const TriTensor& a);
TriTensor load_tritensor(std::istream& is);
void save_tritensor_file(const std::string& path, const TriTensor& a);
TriTensor load_tritensor_file(const std::string& path);

void save_ml_table(std::ostream& os, const MlTable& t);
MlTable load_ml_table(std::istream& is);
void save_ml_table_file(const std::string& path, const MlTable& t);
MlTable load_ml_table_file(const std::string& path);

// Consults TRM_CACHE_DIR when set: loads a matching table if present, else
// builds one and writes it back (best effort — cache write failures are not
// errors).
MlTable load_or_build_ml_table(const RmCode& code);

// Parses a one-line {0,1,*} string, position 0 first.
TriWord parse_triword(const std::string& line);
std::string format_triword(const TriWord& w);

}  // namespace trm
