#pragma once
#include <cstdint>
#include <optional>

#include "trm/bits.hpp"
#include "trm/tensor.hpp"
#include "trm/trm_codec.hpp"

namespace trm {

// Avalanche mix (splitmix64 finalizer). All trial randomness derives from
// (base_seed, trial index) through this, so results are reproducible across
// runs, schedules, and implementations.
u64 mix64(u64 x);
u64 trial_seed(u64 base_seed, u64 k);

struct NoiseSpec {
    enum class Kind { bsc, bec, adversarial } kind = Kind::bsc;
    double p = 0.0;  // flip (bsc) / erase (bec) probability
    u64 weight = 0;  // adversarial: exact number of flips
    enum class Placement {
        uniform,             // `weight` distinct positions, uniformly random
        slice_concentrated,  // one contiguous flat-order run of `weight` bits
    } placement = Placement::uniform;
};

// Bernoulli draws use the exact integer test (rng() >> 11) < floor(p * 2^53),
// one engine draw per bit in ascending position order.
// Returns the noisy word; `mask` (if non-null) receives the realized
// flip/erase positions.
BitWord apply_noise_bits(const NoiseSpec& spec, const BitWord& w, u64 seed,
                         BitWord* mask = nullptr);
// BEC variant: erases instead of flipping.
TriWord apply_noise_erasures(const NoiseSpec& spec, const BitWord& w, u64 seed,
                             BitWord* mask = nullptr);
BitTensor apply_noise_bits(const NoiseSpec& spec, const BitTensor& a, u64 seed,
                           BitWord* mask = nullptr);
TriTensor apply_noise_erasures(const NoiseSpec& spec, const BitTensor& a, u64 seed,
                               BitWord* mask = nullptr);

BitWord random_message(std::size_t bits, u64 seed);

struct Interval {
    double lo = 0, hi = 1;
};
// Exact (Clopper-Pearson) two-sided confidence interval for a binomial rate.
Interval clopper_pearson(u64 errors, u64 trials, double alpha = 0.05);

struct TrialStats {
    u64 trials = 0;
    u64 block_errors = 0;
    double error_rate = 0;
    double ci_low = 0, ci_high = 1;
    double seconds_total = 0;  // decode time, summed over trials
    // Staged-decoder aggregates (zero for plain RM runs).
    double stage1_seconds = 0, stage2_seconds = 0, stage3_seconds = 0;
    u64 stage2_rejects = 0, aborts = 0, final_all_star = 0;
};

enum class RmDecoder { highrate, majority, ml, erasure };

// N independent trials of encode -> noise -> decode -> exact compare.
// Trial k draws its message and noise from trial_seed(base_seed, k), so the
// aggregate is independent of worker count and schedule.
TrialStats rm_run_trials(const RmCode& code, RmDecoder dec, const NoiseSpec& noise,
                         u64 trials, u64 base_seed, unsigned jobs = 1);

TrialStats trm_run_trials(const TrmCode& code, const DecodeConfig& cfg, const MlTable& table,
                          const NoiseSpec& noise, u64 trials, u64 base_seed,
                          unsigned jobs = 1);

}  // namespace trm
