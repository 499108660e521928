#pragma once

#include <cstdint>
#include <vector>

#include "jetrank/admissibility.hpp"
#include "jetrank/geometry.hpp"
#include "jetrank/scalar.hpp"

namespace jetrank {

inline constexpr std::uint64_t kDefaultModulus = 1'000'003;

/// What the numerical characterization says about one weight.
struct Prediction {
    bool covered = false;        // sum of jet lengths <= C(n+d,d)
    bool expect_max_rank = false; // meaningful only when covered
    long expected_rank = 0;       // min(C(n+d,d), total) when max rank expected
};

/// Prediction vs. exact measurement for one sampled instance.
struct Verdict {
    int n = 0;
    int d = 0;
    Weight weight;
    std::uint64_t seed = 0;
    Prediction predicted;
    long measured_rank = 0;
    long nullity = 0; // C(n+d,d) - measured_rank = h^0 of the union's ideal
    bool agrees = false;
    bool retried = false; // set by sweeps under the retry-once policy
};

Prediction predict(int n, int d, const Weight& w);

/// Sample one configuration, build the condition matrix over GF(p),
/// measure rank exactly. Deterministic per seed. Throws NotCovered when
/// the jet total exceeds C(n+d,d) and require_covered is set; with
/// require_covered = false the rank is still measured and no agreement is
/// claimed.
Verdict verify_instance(int n, int d, const Weight& w, std::uint64_t seed,
                        const PrimeModulus& p = PrimeModulus(kDefaultModulus),
                        bool require_covered = true);

enum class SweepMode { exhaustive, sampled };

struct SweepResult {
    int n = 0;
    int d = 0;
    std::uint64_t p = 0;
    std::uint64_t base_seed = 0;
    std::vector<Verdict> verdicts; // descending lex weight order
};

/// One verdict per admissible weight (exhaustive) or per k distinct
/// sampled weights. Per-weight seeds derive from base_seed and the
/// weight; a disagreeing verdict is retried once on an independent seed.
SweepResult sweep(int n, int d, SweepMode mode, std::uint64_t k, std::uint64_t base_seed,
                  const PrimeModulus& p = PrimeModulus(kDefaultModulus),
                  std::uint64_t cap = kDefaultEnumerationCap, unsigned jobs = 1);

/// Ranks of the three maps sharing one sampled Y and one fresh line D:
/// jet length v+1, v-1, v on D (same axis and support throughout).
struct Prop21Report {
    int n = 0;
    int d = 0;
    long v = 0;
    std::uint64_t seed = 0;
    long cols = 0;     // C(n+d,d)
    long rows_y = 0;   // conditions imposed by Y alone
    long rank_y = 0;   // so h^0(I_Y(d)) = cols - rank_y
    long rank_plus = 0;
    long rank_minus = 0;
    long rank_mid = 0;
    bool hypotheses_hold = false; // both flanking instances maximal
    bool conclusion_holds = false; // middle instance maximal
};

Prop21Report check_prop21(const Weight& y_weight, long v, int n, int d, std::uint64_t seed,
                          const PrimeModulus& p = PrimeModulus(kDefaultModulus));

/// Rank of the v x v matrix of successive formal derivatives evaluated at
/// t_eval. Requires p > max degree so differentiation behaves as in
/// characteristic zero.
std::size_t wronskian_rank(const std::vector<std::vector<Fp>>& polys, const Fp& t_eval);

inline constexpr std::size_t kDefaultSubsetCap = 12;

/// Definition of lines in general position, truncated to degrees
/// e <= d_max: every nonempty subset of the lines, replaced by (e+1)-jets,
/// must reach rank min(#lines*(e+1), C(n+e,e)).
bool general_position_check(const std::vector<Line>& lines, int d_max,
                            std::size_t subset_cap = kDefaultSubsetCap);

} // namespace jetrank
