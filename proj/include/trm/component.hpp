#pragma once
#include <memory>
#include <span>
#include <string>

#include "trm/erasure.hpp"
#include "trm/linear.hpp"

namespace trm {

// A code usable as one tensor axis: length, true minimum distance, the
// erasure rule f_C (fewer than d_min erasures and a consistent codeword
// exists -> that codeword; otherwise all-*), membership, and a basis for the
// pattern-cache solver.
class ComponentCode {
  public:
    virtual ~ComponentCode() = default;
    virtual std::size_t length() const = 0;
    virtual u64 d_min() const = 0;
    virtual TriWord complete(const TriWord& y) const = 0;
    virtual bool is_member(const BitWord& w) const = 0;
    virtual const GenMatrix& generator() const = 0;
    virtual std::string describe() const = 0;
    // Allocation-free f_C for lengths <= 64; default wraps complete().
    // Returns via vals/mask (mask all-ones = all-*).
    virtual void complete_word(u64& vals, u64& mask) const;
};

class RmComponent : public ComponentCode {
  public:
    explicit RmComponent(const RmCode& code);
    std::size_t length() const override { return code_.length(); }
    u64 d_min() const override { return code_.d_min(); }
    TriWord complete(const TriWord& y) const override;
    bool is_member(const BitWord& w) const override { return memb_.check(w); }
    const GenMatrix& generator() const override { return gen_; }
    std::string describe() const override;
    void complete_word(u64& vals, u64& mask) const override;
    const RmCode& code() const { return code_; }

  private:
    RmCode code_;
    RmMembership memb_;
    GenMatrix gen_;
};

class LinearComponent : public ComponentCode {
  public:
    // d_min computed by row-space enumeration at construction (cap k <= 24).
    explicit LinearComponent(GenMatrix g, std::string name = "linear");
    std::size_t length() const override { return gen_.n; }
    u64 d_min() const override { return dmin_; }
    TriWord complete(const TriWord& y) const override;
    bool is_member(const BitWord& w) const override { return eraser_.is_member(w); }
    const GenMatrix& generator() const override { return gen_; }
    std::string describe() const override { return name_; }

  private:
    GenMatrix gen_;
    LinearEraser eraser_;
    u64 dmin_;
    std::string name_;
};

// Correction radius of the adversarial tensor decoder:
// ceil(prod d_i / (2 max d_i)) - 1.
u64 adversarial_radius(std::span<const ComponentCode* const> codes);

}  // namespace trm
