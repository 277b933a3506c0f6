#include "trm/channel.hpp"

#include <boost/math/distributions/beta.hpp>
#include <chrono>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "trm/erasure.hpp"

namespace trm {

u64 mix64(u64 x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

u64 trial_seed(u64 base_seed, u64 k) {
    return mix64(base_seed + (k + 1) * 0x9E3779B97F4A7C15ull);
}

namespace {

constexpr u64 kMsgTag = 0x6D736773ull;    // stream separators within one trial
constexpr u64 kNoiseTag = 0x6E6F6973ull;

BitWord bernoulli_mask(std::size_t n, double p, u64 seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise: p outside [0,1]");
    BitWord mask(n);
    if (p <= 0.0) return mask;
    const u64 thr = p >= 1.0 ? (u64(1) << 53) : static_cast<u64>(p * 9007199254740992.0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        if ((rng() >> 11) < thr) mask.set(i, true);
    return mask;
}

BitWord adversarial_mask(std::size_t n, u64 weight, NoiseSpec::Placement pl, u64 seed) {
    if (weight > n) throw std::invalid_argument("noise: weight exceeds blocklength");
    BitWord mask(n);
    std::mt19937_64 rng(seed);
    if (pl == NoiseSpec::Placement::slice_concentrated) {
        const std::size_t start = weight == n ? 0 : rng() % (n - weight + 1);
        for (u64 i = 0; i < weight; ++i) mask.set(start + i, true);
    } else {
        // Floyd's sampling: exactly `weight` distinct uniform positions.
        for (std::size_t j = n - weight; j < n; ++j) {
            const std::size_t t = rng() % (j + 1);
            if (mask.get(t)) mask.set(j, true);
            else mask.set(t, true);
        }
    }
    return mask;
}

BitWord noise_flip_mask(const NoiseSpec& spec, std::size_t n, u64 seed) {
    switch (spec.kind) {
        case NoiseSpec::Kind::bsc: return bernoulli_mask(n, spec.p, seed);
        case NoiseSpec::Kind::adversarial:
            return adversarial_mask(n, spec.weight, spec.placement, seed);
        case NoiseSpec::Kind::bec:
            throw std::invalid_argument("bec noise produces erasures, not flips");
    }
    throw std::invalid_argument("noise: bad kind");
}

BitWord noise_erase_mask(const NoiseSpec& spec, std::size_t n, u64 seed) {
    switch (spec.kind) {
        case NoiseSpec::Kind::bec: return bernoulli_mask(n, spec.p, seed);
        case NoiseSpec::Kind::adversarial:
            return adversarial_mask(n, spec.weight, spec.placement, seed);
        case NoiseSpec::Kind::bsc:
            throw std::invalid_argument("bsc noise produces flips, not erasures");
    }
    throw std::invalid_argument("noise: bad kind");
}

}  // namespace

BitWord apply_noise_bits(const NoiseSpec& spec, const BitWord& w, u64 seed, BitWord* mask) {
    BitWord m = noise_flip_mask(spec, w.size(), seed);
    BitWord out = w;
    out.xor_with(m);
    if (mask) *mask = std::move(m);
    return out;
}

TriWord apply_noise_erasures(const NoiseSpec& spec, const BitWord& w, u64 seed,
                             BitWord* mask) {
    BitWord m = noise_erase_mask(spec, w.size(), seed);
    TriWord out(w, m);
    if (mask) *mask = std::move(m);
    return out;
}

BitTensor apply_noise_bits(const NoiseSpec& spec, const BitTensor& a, u64 seed,
                           BitWord* mask) {
    return BitTensor(a.shape(), apply_noise_bits(spec, a.flat(), seed, mask));
}

TriTensor apply_noise_erasures(const NoiseSpec& spec, const BitTensor& a, u64 seed,
                               BitWord* mask) {
    return TriTensor(a.shape(), apply_noise_erasures(spec, a.flat(), seed, mask));
}

BitWord random_message(std::size_t bits, u64 seed) {
    BitWord w(bits);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < w.words(); ++i) w.data()[i] = rng();
    w.mask_tail();
    return w;
}

Interval clopper_pearson(u64 errors, u64 trials, double alpha) {
    if (trials == 0) throw std::invalid_argument("clopper_pearson: zero trials");
    if (errors > trials) throw std::invalid_argument("clopper_pearson: errors > trials");
    Interval iv;
    using boost::math::beta_distribution;
    if (errors == 0) iv.lo = 0.0;
    else iv.lo = quantile(beta_distribution<>(double(errors), double(trials - errors + 1)),
                          alpha / 2);
    if (errors == trials) iv.hi = 1.0;
    else iv.hi = quantile(beta_distribution<>(double(errors + 1), double(trials - errors)),
                          1 - alpha / 2);
    return iv;
}

namespace {

struct Accum {
    u64 errs = 0;
    double secs = 0, s1 = 0, s2 = 0, s3 = 0;
    u64 rejects = 0, aborts = 0, all_star = 0;
};

void merge(TrialStats& st, const Accum& a) {
    st.block_errors += a.errs;
    st.seconds_total += a.secs;
    st.stage1_seconds += a.s1;
    st.stage2_seconds += a.s2;
    st.stage3_seconds += a.s3;
    st.stage2_rejects += a.rejects;
    st.aborts += a.aborts;
    st.final_all_star += a.all_star;
}

template <typename Fn>
void run_partitioned(u64 trials, unsigned jobs, TrialStats& st, Fn&& trial_range) {
    if (jobs <= 1) {
        Accum a;
        trial_range(0, trials, a);
        merge(st, a);
        return;
    }
    const unsigned nw = static_cast<unsigned>(std::min<u64>(jobs, trials));
    std::vector<Accum> acc(nw);
    std::vector<std::thread> threads;
    threads.reserve(nw);
    for (unsigned w = 0; w < nw; ++w) {
        const u64 lo = trials * w / nw, hi = trials * (w + 1) / nw;
        threads.emplace_back([&, w, lo, hi] { trial_range(lo, hi, acc[w]); });
    }
    for (auto& t : threads) t.join();
    for (const Accum& a : acc) merge(st, a);
}

void finalize(TrialStats& st) {
    st.error_rate = double(st.block_errors) / double(st.trials);
    const Interval iv = clopper_pearson(st.block_errors, st.trials);
    st.ci_low = iv.lo;
    st.ci_high = iv.hi;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TrialStats rm_run_trials(const RmCode& code, RmDecoder dec, const NoiseSpec& noise,
                         u64 trials, u64 base_seed, unsigned jobs) {
    if (trials == 0) throw std::invalid_argument("rm_run_trials: need trials >= 1");
    const bool erasure_channel = noise.kind == NoiseSpec::Kind::bec;
    if (erasure_channel != (dec == RmDecoder::erasure))
        throw std::invalid_argument(
            "rm_run_trials: erasure decoder goes with bec noise, error decoders with flips");

    // Shared immutable table for short codes; longer ML falls back to search.
    std::optional<MlTable> table;
    if (dec == RmDecoder::ml && code.length() <= MlTable::kMaxBits)
        table = build_ml_table(code);

    TrialStats st;
    st.trials = trials;
    run_partitioned(trials, jobs, st, [&](u64 lo, u64 hi, Accum& a) {
        const RmMembership memb(code);  // per worker: instances are not shareable
        for (u64 k = lo; k < hi; ++k) {
            const u64 s = trial_seed(base_seed, k);
            const BitWord msg = random_message(code.dimension(), mix64(s ^ kMsgTag));
            const BitWord cw = rm_encode(code, msg);
            if (erasure_channel) {
                const TriWord noisy = apply_noise_erasures(noise, cw, mix64(s ^ kNoiseTag));
                const auto t0 = std::chrono::steady_clock::now();
                const TriWord res = f_rm(code, noisy);
                a.secs += seconds_since(t0);
                if (res.has_erasure() || !(res.values == cw)) ++a.errs;
                continue;
            }
            const BitWord noisy = apply_noise_bits(noise, cw, mix64(s ^ kNoiseTag));
            const auto t0 = std::chrono::steady_clock::now();
            BitWord out;
            switch (dec) {
                case RmDecoder::highrate: out = highrate_decode(memb, noisy); break;
                case RmDecoder::majority: out = majority_decode(code, noisy); break;
                case RmDecoder::ml:
                    out = ml_decode(code, noisy, table ? &*table : nullptr);
                    break;
                case RmDecoder::erasure: break;  // unreachable
            }
            a.secs += seconds_since(t0);
            if (!(out == cw)) ++a.errs;
        }
    });
    finalize(st);
    return st;
}

TrialStats trm_run_trials(const TrmCode& code, const DecodeConfig& cfg, const MlTable& table,
                          const NoiseSpec& noise, u64 trials, u64 base_seed, unsigned jobs) {
    if (trials == 0) throw std::invalid_argument("trm_run_trials: need trials >= 1");
    if (noise.kind == NoiseSpec::Kind::bec)
        throw std::invalid_argument("trm_run_trials: the staged decoder takes flip noise");
    TrialStats st;
    st.trials = trials;
    run_partitioned(trials, jobs, st, [&](u64 lo, u64 hi, Accum& a) {
        for (u64 k = lo; k < hi; ++k) {
            const u64 s = trial_seed(base_seed, k);
            const BitWord msg = random_message(code.dimension(), mix64(s ^ kMsgTag));
            const BitTensor cw = trm_encode(code, msg);
            const BitTensor noisy = apply_noise_bits(noise, cw, mix64(s ^ kNoiseTag));
            DecodeInfo info;
            const auto t0 = std::chrono::steady_clock::now();
            const BitTensor out = trm_decode_random(code, noisy, cfg, table, &info);
            a.secs += seconds_since(t0);
            a.s1 += info.stage1_seconds;
            a.s2 += info.stage2_seconds;
            a.s3 += info.stage3_seconds;
            a.rejects += info.stage2_rejects;
            if (info.aborted) ++a.aborts;
            if (info.final_all_star) ++a.all_star;
            if (!(out == cw)) ++a.errs;
        }
    });
    finalize(st);
    return st;
}

}  // namespace trm
