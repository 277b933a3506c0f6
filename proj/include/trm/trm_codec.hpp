#pragma once
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trm/inner.hpp"
#include "trm/tensor.hpp"
#include "trm/tensor_decode.hpp"

namespace trm {

// Tensor Reed-Muller code RM(r_1,m_1) ⊗ … ⊗ RM(r_t,m_t): t-dimensional
// tensors in which every axis-i vector is a codeword of RM(r_i,m_i).
struct TrmCode {
    std::vector<RmCode> layers;

    TrmCode() = default;
    explicit TrmCode(std::vector<RmCode> ls) : layers(std::move(ls)) {}

    std::size_t t() const { return layers.size(); }
    int log2_length() const;
    std::size_t length() const { return std::size_t(1) << log2_length(); }
    u64 dimension() const;
    u64 d_min() const;
    double rate() const;
    TensorShape shape() const;
    friend bool operator==(const TrmCode&, const TrmCode&) = default;
};

// Plain-text descriptor "r1:m1,r2:m2,...".
TrmCode parse_profile(const std::string& s);
std::string format_profile(const TrmCode& code);

struct PlanRequest {
    u64 n = 0;         // target blocklength
    unsigned t = 3;    // layer count >= 3
    double rate = 0.5; // target rate in (0,1)
    double p = 0.01;   // channel flip probability in (0, 1/2)
};

// Returned instead of a code when the asymptotic parameter formulas are
// infeasible at the requested n. No silent clamping.
struct PlanDiagnostic {
    std::string violated_constraint;
    std::vector<std::pair<std::string, double>> values;
    // Smallest integer log2(n) at which the named constraint clears, if one
    // exists below the search bound; n itself only when 2^log2n fits a double.
    std::optional<int> minimum_feasible_log2n;
    std::optional<double> minimum_feasible_n;
};

using PlanResult = std::variant<TrmCode, PlanDiagnostic>;

// Evaluates the parameter formulas verbatim: m1 = ceil(loglog n - 3),
// m2 = ceil(10 loglog n), r2 = ceil(m2/2 + sqrt(m2) log2 m2), equal split of
// the remaining log-length over axes 3..t with r_i = ceil((m_i + m_i^(3/4))/2),
// and r1 matching the target rate. Infeasibility -> PlanDiagnostic.
PlanResult plan_parameters(const PlanRequest& req);

// floor(n * 2^(-2^((log2 log2 n)^(1/4)))): the stage-2 abort budget.
u64 counter_threshold(u64 n);

// Encode: scatter coefficients on the product monomial support and apply one
// subset-XOR transform over all sum(m_i) point bits (the per-axis transforms
// commute and compose into the full transform). Coefficient index order is
// the product of per-axis canonical monomial orders, axis 1 most significant.
BitTensor trm_encode(const TrmCode& code, const BitWord& coeffs);

// Membership context: one transform plus a support test against the product
// of per-axis degree masks. Not safe for concurrent use of one instance.
class TrmMembership {
  public:
    explicit TrmMembership(const TrmCode& code);
    const TrmCode& code() const { return code_; }
    bool check(const BitTensor& a) const;

  private:
    TrmCode code_;
    BitWord allowed_;
    mutable std::vector<u64> scratch_;
};

bool trm_is_codeword(const TrmCode& code, const BitTensor& a);

struct DecodeConfig {
    // Stage-2 abort budget; unset = the counter_threshold formula.
    std::optional<u64> counter_threshold;
    enum class Inner { highrate, ml } inner = Inner::highrate;
    // Final full-tensor pass; unset = listing behavior (on iff t > 3).
    std::optional<bool> run_final_pass;
};

struct DecodeInfo {
    double stage1_seconds = 0, stage2_seconds = 0, stage3_seconds = 0;
    u64 stage2_rejects = 0;  // columns that failed membership
    bool aborted = false;    // stage-2 counter exceeded the threshold
    bool final_all_star = false;
};

// Staged random-error decoder: (1) replace every axis-1 row by its ML table
// entry; (2) test every axis-2 column, repairing non-members with the inner
// decoder and aborting to the all-zero codeword past the counter threshold;
// (3) final adversarial pass with all t component codes (all-* -> all-zero).
BitTensor trm_decode_random(const TrmCode& code, const BitTensor& a, const DecodeConfig& cfg,
                            const MlTable& table, DecodeInfo* info = nullptr);

}  // namespace trm
