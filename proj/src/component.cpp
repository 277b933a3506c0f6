#include "trm/component.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trm {

void ComponentCode::complete_word(u64& vals, u64& mask) const {
    const std::size_t n = length();
    TriWord y(n);
    y.values.data()[0] = vals;
    y.erased.data()[0] = mask;
    y.normalize();
    const TriWord out = complete(y);
    vals = out.values.data()[0];
    mask = out.erased.data()[0];
}

namespace {
GenMatrix rm_generator(const RmCode& code) {
    GenMatrix g(code.dimension(), code.length());
    BitWord coeffs(code.dimension());
    for (std::size_t i = 0; i < g.k; ++i) {
        coeffs.set(i, true);
        const BitWord row = rm_encode(code, coeffs);
        coeffs.set(i, false);
        std::copy(row.data(), row.data() + row.words(), g.row(i));
    }
    return g;
}
}  // namespace

RmComponent::RmComponent(const RmCode& code)
    : code_(code), memb_(code), gen_(rm_generator(code)) {}

TriWord RmComponent::complete(const TriWord& y) const { return f_rm(code_, y); }

std::string RmComponent::describe() const {
    return "RM(" + std::to_string(code_.r) + "," + std::to_string(code_.m) + ")";
}

void RmComponent::complete_word(u64& vals, u64& mask) const {
    const std::size_t n = code_.length();
    if (n > 64) throw std::invalid_argument("complete_word: length above 64");
    const u64 full = n == 64 ? ~u64(0) : (u64(1) << n) - 1;
    vals &= ~mask;
    const u64 star_cnt = static_cast<u64>(std::popcount(mask));
    if (star_cnt < code_.d_min()) {
        TriWord y(n);
        y.values.data()[0] = vals;
        y.erased.data()[0] = mask;
        const auto c = rm_complete(code_, y);
        if (c) {
            vals = c->data()[0];
            mask = 0;
            return;
        }
    }
    vals = 0;
    mask = full;
}

LinearComponent::LinearComponent(GenMatrix g, std::string name)
    : gen_(std::move(g)), eraser_(gen_), dmin_(min_weight_rowspace(gen_)),
      name_(std::move(name)) {}

TriWord LinearComponent::complete(const TriWord& y) const {
    if (y.erasure_count() < dmin_) {
        const auto c = eraser_.complete(y);
        if (c) return TriWord::from_word(*c);
    }
    return TriWord::all_star(y.size());
}

u64 adversarial_radius(std::span<const ComponentCode* const> codes) {
    u64 prod = 1, dmax = 1;
    for (const ComponentCode* c : codes) {
        prod *= c->d_min();
        dmax = std::max(dmax, c->d_min());
    }
    return (prod + 2 * dmax - 1) / (2 * dmax) - 1;
}

}  // namespace trm
