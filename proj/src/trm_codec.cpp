#include "trm/trm_codec.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstring>
#include <memory>
#include <stdexcept>

#include "trm/component.hpp"

namespace trm {

int TrmCode::log2_length() const {
    if (layers.empty()) throw std::invalid_argument("TrmCode: no layers");
    int sum = 0;
    for (const RmCode& c : layers) sum += c.m;
    if (sum > 48) throw std::invalid_argument("TrmCode: total length exceeds 2^48");
    return sum;
}

u64 TrmCode::dimension() const {
    u64 d = 1;
    for (const RmCode& c : layers) d *= c.dimension();
    return d;
}

u64 TrmCode::d_min() const {
    u64 d = 1;
    for (const RmCode& c : layers) d *= c.d_min();
    return d;
}

double TrmCode::rate() const {
    double r = 1.0;
    for (const RmCode& c : layers) r *= c.rate();
    return r;
}

TensorShape TrmCode::shape() const {
    std::vector<u32> dims;
    dims.reserve(layers.size());
    for (const RmCode& c : layers) dims.push_back(u32(1) << c.m);
    return TensorShape(std::move(dims));
}

TrmCode parse_profile(const std::string& s) {
    std::vector<RmCode> layers;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        const std::size_t colon = s.find(':', pos);
        if (colon == std::string::npos || colon >= comma)
            throw std::invalid_argument("parse_profile: expected r:m pairs separated by commas");
        std::size_t used = 0;
        const std::string rs = s.substr(pos, colon - pos);
        const std::string ms = s.substr(colon + 1, comma - colon - 1);
        int r = 0, m = 0;
        try {
            r = std::stoi(rs, &used);
            if (used != rs.size()) throw std::invalid_argument("");
            m = std::stoi(ms, &used);
            if (used != ms.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_profile: malformed integer in \"" + s + "\"");
        }
        layers.emplace_back(r, m);  // validates 0 <= r <= m
        if (comma == s.size()) break;
        pos = comma + 1;
    }
    if (layers.empty()) throw std::invalid_argument("parse_profile: empty profile");
    return TrmCode(std::move(layers));
}

std::string format_profile(const TrmCode& code) {
    std::string out;
    for (std::size_t i = 0; i < code.layers.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(code.layers[i].r) + ":" + std::to_string(code.layers[i].m);
    }
    return out;
}

u64 counter_threshold(u64 n) {
    if (n < 4) throw std::invalid_argument("counter_threshold: need n >= 4");
    const double x = std::log2(std::log2(static_cast<double>(n)));
    const double inner = std::exp2(std::pow(x, 0.25));
    return static_cast<u64>(std::floor(static_cast<double>(n) * std::exp2(-inner)));
}

namespace {

struct PlanEval {
    double log2n = 0, loglog = 0;
    int m1 = 0, m2 = 0, r2 = 0;
    int m_rest = 0, r_rest = 0;  // axes 3..t share one (m, r)
};

PlanEval eval_plan(double log2n, unsigned t) {
    PlanEval e;
    e.log2n = log2n;
    e.loglog = std::log2(log2n);
    e.m1 = static_cast<int>(std::ceil(e.loglog - 3.0));
    e.m2 = static_cast<int>(std::ceil(10.0 * e.loglog));
    e.r2 = static_cast<int>(
        std::ceil(e.m2 / 2.0 + std::sqrt(double(e.m2)) * std::log2(double(e.m2))));
    const double rest = (log2n - e.m1 - e.m2) / double(t - 2);
    e.m_rest = static_cast<int>(std::ceil(rest));
    if (e.m_rest >= 1)
        e.r_rest = static_cast<int>(
            std::ceil((e.m_rest + std::pow(double(e.m_rest), 0.75)) / 2.0));
    return e;
}

// Predicates for the individually reportable constraints.
bool ok_m1(const PlanEval& e) { return e.m1 >= 1; }
bool ok_split(const PlanEval& e) { return double(e.m1) + double(e.m2) < e.log2n; }
bool ok_r2(const PlanEval& e) { return e.r2 <= e.m2; }
bool ok_rest(const PlanEval& e) { return e.m_rest >= 1 && e.r_rest <= e.m_rest; }

PlanDiagnostic make_diag(const char* constraint, const PlanEval& e, unsigned t,
                         bool (*pred)(const PlanEval&)) {
    PlanDiagnostic d;
    d.violated_constraint = constraint;
    d.values = {{"log2_n", e.log2n}, {"loglog_n", e.loglog}, {"m1", double(e.m1)},
                {"m2", double(e.m2)}, {"r2", double(e.r2)},  {"m_rest", double(e.m_rest)},
                {"r_rest", double(e.r_rest)}};
    for (int L = 4; L <= 20000; ++L) {
        if (pred(eval_plan(double(L), t))) {
            d.minimum_feasible_log2n = L;
            if (L <= 1023) d.minimum_feasible_n = std::exp2(double(L));
            break;
        }
    }
    return d;
}

}  // namespace

PlanResult plan_parameters(const PlanRequest& req) {
    if (req.n < 16) throw std::invalid_argument("plan_parameters: need n >= 16");
    if (req.t < 3) throw std::invalid_argument("plan_parameters: need t >= 3");
    if (!(req.rate > 0.0 && req.rate < 1.0))
        throw std::invalid_argument("plan_parameters: rate must be in (0,1)");
    if (!(req.p > 0.0 && req.p < 0.5))
        throw std::invalid_argument("plan_parameters: p must be in (0,1/2)");
    if (req.rate >= 1.0 - binary_entropy(req.p))
        throw std::invalid_argument("plan_parameters: rate must be below capacity 1 - h(p)");

    const double log2n = std::log2(static_cast<double>(req.n));
    const PlanEval e = eval_plan(log2n, req.t);
    if (!ok_m1(e)) return make_diag("m1 >= 1", e, req.t, ok_m1);
    if (!ok_split(e)) return make_diag("m1 + m2 < log2(n)", e, req.t, ok_split);
    if (!ok_r2(e)) return make_diag("r2 <= m2", e, req.t, ok_r2);
    if (!ok_rest(e)) return make_diag("r_i <= m_i for axes 3..t", e, req.t, ok_rest);

    // r1: rate of RM(r1, m1) closest to the target; ties to the higher rate.
    int r1 = 0;
    double best = 2.0;
    for (int r = 0; r <= e.m1; ++r) {
        const double diff =
            std::abs(double(binom_sum(e.m1, r)) / std::exp2(double(e.m1)) - req.rate);
        if (diff <= best) {
            best = diff;
            r1 = r;
        }
    }

    std::vector<RmCode> layers;
    layers.emplace_back(r1, e.m1);
    layers.emplace_back(e.r2, e.m2);
    for (unsigned i = 2; i < req.t; ++i) layers.emplace_back(e.r_rest, e.m_rest);
    return TrmCode(std::move(layers));
}

BitTensor trm_encode(const TrmCode& code, const BitWord& coeffs) {
    const std::size_t t = code.t();
    if (coeffs.size() != code.dimension())
        throw std::invalid_argument("trm_encode: coefficient length != dimension");
    std::vector<std::vector<u32>> amasks(t);
    std::vector<int> shift(t);
    int acc = 0;
    for (std::size_t i = t; i-- > 0;) {  // axis t occupies the lowest point bits
        amasks[i] = monomial_masks(code.layers[i]);
        shift[i] = acc;
        acc += code.layers[i].m;
    }
    BitTensor out(code.shape());
    std::vector<std::size_t> idx(t, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs.get(j)) {
            std::size_t pos = 0;
            for (std::size_t i = 0; i < t; ++i)
                pos |= std::size_t(amasks[i][idx[i]]) << shift[i];
            out.flat().set(pos, true);
        }
        for (std::size_t i = t; i-- > 0;) {
            if (++idx[i] < amasks[i].size()) break;
            idx[i] = 0;
        }
    }
    subset_xor_transform(out.flat().data(), code.log2_length());
    return out;
}

TrmMembership::TrmMembership(const TrmCode& code) : code_(code) {
    BitWord acc(1);
    acc.set(0, true);
    for (const RmCode& c : code_.layers) {
        BitWord axis(c.length());
        for (std::size_t p = 0; p < c.length(); ++p)
            if (std::popcount(p) <= c.r) axis.set(p, true);
        BitWord next(acc.size() << c.m);
        for (std::size_t w = 0; w < acc.words(); ++w) {
            u64 x = acc.data()[w];
            while (x) {
                const std::size_t q = w * 64 + static_cast<unsigned>(std::countr_zero(x));
                x &= x - 1;
                copy_bits(axis.data(), 0, next.data(), q << c.m, c.length());
            }
        }
        acc = std::move(next);
    }
    allowed_ = std::move(acc);
    scratch_.resize(allowed_.words());
}

bool TrmMembership::check(const BitTensor& a) const {
    if (!(a.shape() == code_.shape()))
        throw std::invalid_argument("TrmMembership: shape mismatch");
    std::memcpy(scratch_.data(), a.flat().data(), scratch_.size() * sizeof(u64));
    subset_xor_transform(scratch_.data(), code_.log2_length());
    return kern::ops().andnot_is_zero(scratch_.data(), allowed_.data(), scratch_.size());
}

bool trm_is_codeword(const TrmCode& code, const BitTensor& a) {
    return TrmMembership(code).check(a);
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BitTensor trm_decode_random(const TrmCode& code, const BitTensor& a, const DecodeConfig& cfg,
                            const MlTable& table, DecodeInfo* info) {
    const std::size_t t = code.t();
    if (t < 3) throw std::invalid_argument("trm_decode_random: need at least 3 layers");
    if (!(a.shape() == code.shape()))
        throw std::invalid_argument("trm_decode_random: shape mismatch");
    const RmCode& c1 = code.layers[0];
    const RmCode& c2 = code.layers[1];
    if (!(table.code() == c1))
        throw std::invalid_argument("trm_decode_random: table built for a different layer-1 code");
    if (cfg.inner == DecodeConfig::Inner::ml && c2.length() > MlTable::kMaxBits)
        throw std::invalid_argument("trm_decode_random: ml inner needs layer-2 length <= 16");

    const std::size_t N = code.length();
    const std::size_t W = words_for(N);
    const std::size_t n1 = c1.length(), n2 = c2.length();
    const u64 threshold =
        cfg.counter_threshold ? *cfg.counter_threshold : counter_threshold(N);
    DecodeInfo local;
    DecodeInfo& fo = info ? *info : local;
    fo = DecodeInfo{};

    // Stage 1: rotate axis 1 to the fast position; every row is one table hit.
    auto t0 = std::chrono::steady_clock::now();
    std::vector<u64> L1(W), L2(W);
    bit_transpose(a.flat().data(), L1.data(), n1, N / n1);
    {
        const unsigned per = static_cast<unsigned>(64 / n1);
        const u64 rmask = (u64(1) << n1) - 1;
        for (std::size_t w = 0; w < W; ++w) {
            u64 x = L1[w], y = 0;
            for (unsigned j = 0; j < per; ++j)
                y |= table.lookup((x >> (j * n1)) & rmask) << (j * n1);
            L1[w] = y;
        }
    }
    fo.stage1_seconds = seconds_since(t0);

    // Stage 2: rotate axis 2 to the fast position; test/repair every column.
    t0 = std::chrono::steady_clock::now();
    bit_transpose(L1.data(), L2.data(), n2, N / n2);
    RmMembership memb2(c2);
    const bool use_ml = cfg.inner == DecodeConfig::Inner::ml;
    if (n2 >= 64) {
        const std::size_t cw = n2 / 64;
        for (std::size_t i = 0; i < N / n2 && !fo.aborted; ++i) {
            u64* col = L2.data() + i * cw;
            if (memb2.check_words(col)) continue;
            if (++fo.stage2_rejects > threshold) {
                fo.aborted = true;
                break;
            }
            BitWord v(n2);
            std::memcpy(v.data(), col, cw * sizeof(u64));
            const BitWord d = use_ml ? ml_decode(c2, v) : majority_decode(c2, v);
            std::memcpy(col, d.data(), cw * sizeof(u64));
        }
    } else {
        const unsigned per = static_cast<unsigned>(64 / n2);
        const u64 cmask = (u64(1) << n2) - 1;
        for (std::size_t w = 0; w < W && !fo.aborted; ++w) {
            for (unsigned j = 0; j < per; ++j) {
                u64 col = (L2[w] >> (j * n2)) & cmask;
                if (memb2.check_words(&col)) continue;
                if (++fo.stage2_rejects > threshold) {
                    fo.aborted = true;
                    break;
                }
                BitWord v(n2);
                v.data()[0] = col;
                const BitWord d = use_ml ? ml_decode(c2, v) : majority_decode(c2, v);
                L2[w] = (L2[w] & ~(cmask << (j * n2))) | (d.data()[0] << (j * n2));
            }
        }
    }
    fo.stage2_seconds = seconds_since(t0);
    if (fo.aborted) return BitTensor(code.shape());  // the all-zero codeword

    BitTensor out(code.shape());
    bit_transpose(L2.data(), L1.data(), N / n2, n2);
    bit_transpose(L1.data(), out.flat().data(), N / n1, n1);

    // Stage 3: full-tensor adversarial pass with all t component codes.
    const bool final_pass = cfg.run_final_pass ? *cfg.run_final_pass : (t > 3);
    if (final_pass) {
        t0 = std::chrono::steady_clock::now();
        std::vector<std::unique_ptr<RmComponent>> comps;
        std::vector<const ComponentCode*> ptrs;
        comps.reserve(t);
        for (const RmCode& c : code.layers) {
            comps.push_back(std::make_unique<RmComponent>(c));
            ptrs.push_back(comps.back().get());
        }
        const TriTensor dec = tensor_decode(ptrs, TriTensor::from_bits(out));
        if (dec.flat().has_erasure()) {
            fo.final_all_star = true;
            out = BitTensor(code.shape());  // map all-* to the all-zero codeword
        } else {
            out = BitTensor(code.shape(), dec.flat().values);
        }
        fo.stage3_seconds = seconds_since(t0);
    }
    return out;
}

}  // namespace trm
