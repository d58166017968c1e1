#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rpk/rpks.hpp"

namespace rpk::mc {

// splitmix64; used both as a mixer for per-path stream seeding and as the
// counter-based generator underneath the per-path streams
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ stream, seeded deterministically from (seed, stream id)
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform();              // (0,1)
    double normal();               // Box-Muller, no state caching
    // inverse-Gaussian by Michael-Schucany-Haas
    double inverse_gaussian(double mean, double shape);

private:
    std::uint64_t s_[4];
};

struct SimPlan {
    std::vector<double> grid;          // sorted payoff-relevant dates, first > 0
    std::size_t paths = 1'000'000;
    std::optional<std::uint64_t> seed; // required for reproducible runs
    bool antithetic = false;
    int threads = 0;                   // 0 = hardware concurrency

    std::uint64_t require_seed() const;
};

// factor levels along one path, by grid index
struct PathState {
    const std::vector<double>* grid = nullptr;
    std::vector<double> A_S, A_R, A_L;
    std::size_t index_of(double t) const;
    double a_s(double t) const { return A_S[index_of(t)]; }
    double a_r(double t) const { return A_R[index_of(t)]; }
    double a_l(double t) const { return A_L[index_of(t)]; }
};

// draws the driver increments for one path and assembles factor levels;
// flip mirrors the Gaussian draws (antithetic partner)
void simulate_path(const AdditiveSpec& spec, const std::vector<double>& grid, Rng& rng,
                   bool flip, PathState& out);

struct McEstimate {
    double value = 0;
    double std_error = 0;
    std::size_t paths = 0;
    double z_score(double reference) const {
        return std_error > 0 ? (value - reference) / std_error : 0.0;
    }
};

// Monte Carlo mean of a pathwise functional with standard error. The functional
// sees the simulated factor path; deterministic partition into blocks keeps the
// result bit-identical for a fixed seed regardless of thread count.
McEstimate mc_expectation(const AdditiveSpec& spec, const SimPlan& plan,
                          const std::function<double(const PathState&)>& payoff);

// batch version sharing one set of paths across many payoffs
std::vector<McEstimate> mc_expectations(
    const AdditiveSpec& spec, const SimPlan& plan,
    const std::vector<std::function<double(const PathState&)>>& payoffs);

struct Trade;  // defined in trades.hpp

// price at time 0 by simulation: E[h^N_T payoff] with per-path kernels
McEstimate mc_price(const RpksParams& params, const Trade& trade, const SimPlan& plan);
std::vector<McEstimate> mc_prices(const RpksParams& params, const std::vector<Trade>& trades,
                                  const SimPlan& plan);

struct MartingaleReport {
    struct Row {
        std::string factor;
        double t;
        double mean;
        double se;
        double z;
    };
    std::vector<Row> rows;
    double worst_abs_z = 0;
    bool pass(double z_limit = 3.0) const { return worst_abs_z < z_limit; }
};

MartingaleReport martingale_suite(const AdditiveSpec& spec, const std::vector<double>& grid,
                                  const SimPlan& plan);

}  // namespace rpk::mc
