#include "rpk/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "rpk/inflation_pricers.hpp"
#include "rpk/nominal_pricers.hpp"
#include "rpk/trades.hpp"

namespace rpk::mc {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t st = seed ^ (0x8d9a4d3bd2f1c2e5ULL * (stream + 1));
    for (auto& si : s_) si = splitmix64(st);
    // avoid the all-zero state
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t Rng::next_u64() {
    std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    return ((next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double Rng::normal() {
    double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::inverse_gaussian(double mean, double shape) {
    double n = normal();
    double y = n * n;
    double x = mean + mean * mean * y / (2 * shape) -
               (mean / (2 * shape)) * std::sqrt(4 * mean * shape * y + mean * mean * y * y);
    double u = uniform();
    if (u <= mean / (mean + x)) return x;
    return mean * mean / x;
}

std::uint64_t SimPlan::require_seed() const {
    if (!seed) throw SeedMissing("SimPlan: seed required for reproducible simulation");
    return *seed;
}

std::size_t PathState::index_of(double t) const {
    auto it = std::lower_bound(grid->begin(), grid->end(), t - 1e-12);
    if (it == grid->end() || std::fabs(*it - t) > 1e-9)
        throw Error("PathState: date not on the simulation grid");
    return static_cast<std::size_t>(it - grid->begin());
}

void simulate_path(const AdditiveSpec& spec, const std::vector<double>& grid, Rng& rng,
                   bool flip, PathState& out) {
    const std::size_t n = grid.size();
    out.grid = &grid;
    out.A_S.resize(n);
    out.A_R.resize(n);
    out.A_L.resize(n);
    const auto& w = spec.weights();
    const Vec3 ws = w.w_S(), wr = w.w_R(), wl = w.w_L();
    const double sgn = flip ? -1.0 : 1.0;

    double x1 = 0, x2 = 0;  // random parts of the two stochastic coordinates
    double prev_t = 0, prev_tau = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double t = grid[k];
        double tau_t = spec.tau(t);
        double d_tau = tau_t - prev_tau;
        double d_t = t - prev_t;
        if (spec.kind() == DriverKind::GaussianTC) {
            if (d_tau > 0) x1 += std::sqrt(d_tau) * sgn * rng.normal();
            if (d_t > 0) x2 += std::sqrt(d_t) * sgn * rng.normal();
        } else {
            // NIG increment: inverse-Gaussian subordinator, then conditional normal.
            // The antithetic partner keeps the subordinator draw and mirrors the
            // conditional normal.
            const auto& ps = spec.s_marginal();
            const auto& pr = spec.r_marginal();
            if (d_tau > 0) {
                double z = rng.inverse_gaussian(ps.sigma * ps.sigma * d_tau,
                                                ps.sigma * ps.sigma * ps.nu * ps.nu *
                                                    d_tau * d_tau);
                x1 += (ps.theta / (ps.sigma * ps.sigma)) * z +
                      std::sqrt(z) * sgn * rng.normal();
            }
            if (d_t > 0) {
                double z = rng.inverse_gaussian(pr.sigma * pr.sigma * d_t,
                                                pr.sigma * pr.sigma * pr.nu * pr.nu * d_t *
                                                    d_t);
                x2 += (pr.theta / (pr.sigma * pr.sigma)) * z +
                      std::sqrt(z) * sgn * rng.normal();
            }
        }
        Vec3 m = spec.drift(t);
        Vec3 x{x1 + m[0], x2 + m[1], m[2]};
        out.A_S[k] = std::exp(dot(ws, x));
        out.A_R[k] = std::exp(dot(wr, x));
        out.A_L[k] = std::exp(dot(wl, x));
        prev_t = t;
        prev_tau = tau_t;
    }
}

std::vector<McEstimate> mc_expectations(
    const AdditiveSpec& spec, const SimPlan& plan,
    const std::vector<std::function<double(const PathState&)>>& payoffs) {
    const std::uint64_t seed = plan.require_seed();
    const std::size_t n_payoffs = payoffs.size();
    const std::size_t n_paths = plan.paths;
    const std::size_t block = 4096;
    const std::size_t n_blocks = (n_paths + block - 1) / block;

    std::vector<std::vector<double>> block_sum(n_blocks, std::vector<double>(n_payoffs, 0.0));
    std::vector<std::vector<double>> block_sq(n_blocks, std::vector<double>(n_payoffs, 0.0));

    int n_threads = plan.threads > 0 ? plan.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next_block{0};
    auto worker = [&]() {
        PathState path;
        for (;;) {
            std::size_t b = next_block.fetch_add(1);
            if (b >= n_blocks) return;
            auto& sums = block_sum[b];
            auto& sqs = block_sq[b];
            std::size_t lo = b * block, hi = std::min(n_paths, lo + block);
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint64_t stream = plan.antithetic ? i / 2 : i;
                bool flip = plan.antithetic && (i % 2 == 1);
                Rng rng(seed, stream);
                simulate_path(spec, plan.grid, rng, flip, path);
                for (std::size_t j = 0; j < n_payoffs; ++j) {
                    double v = payoffs[j](path);
                    sums[j] += v;
                    sqs[j] += v * v;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::vector<McEstimate> out(n_payoffs);
    for (std::size_t j = 0; j < n_payoffs; ++j) {
        double s = 0, q = 0;
        for (std::size_t b = 0; b < n_blocks; ++b) {
            s += block_sum[b][j];
            q += block_sq[b][j];
        }
        double mean = s / n_paths;
        double var = std::max(0.0, q / n_paths - mean * mean);
        out[j].value = mean;
        out[j].std_error = std::sqrt(var / std::max<std::size_t>(1, n_paths - 1));
        out[j].paths = n_paths;
    }
    return out;
}

McEstimate mc_expectation(const AdditiveSpec& spec, const SimPlan& plan,
                          const std::function<double(const PathState&)>& payoff) {
    return mc_expectations(spec, plan, {payoff})[0];
}

namespace {

double kernel_hN(const RpksParams& p, double T, double a_s, double a_r) {
    return p.S(T) * a_s * p.R(T) * (1.0 + p.bR(T) * (a_r - 1.0));
}

// pathwise discounted payoff h^N_T X / h^N_0
std::function<double(const PathState&)> payoff_functional(const RpksParams& p,
                                                          const Trade& trade) {
    switch (trade.type) {
        case Trade::Type::NominalBond: {
            double T = trade.maturity;
            return [&p, T](const PathState& s) { return kernel_hN(p, T, s.a_s(T), s.a_r(T)); };
        }
        case Trade::Type::IlBond: {
            double T = trade.maturity;
            return [&p, T](const PathState& s) {
                double c_T = 1.0 / (p.S(T) * s.a_s(T));
                return kernel_hN(p, T, s.a_s(T), s.a_r(T)) * c_T;
            };
        }
        case Trade::Type::RealBond: {
            double T = trade.maturity;
            return [&p, T](const PathState& s) {
                return p.R(T) * (1.0 + p.bR(T) * (s.a_r(T) - 1.0));
            };
        }
        case Trade::Type::ZcSwap: {
            double T = trade.maturity;
            double K = std::pow(1.0 + trade.strike, T);
            return [&p, T, K](const PathState& s) {
                double c_T = 1.0 / (p.S(T) * s.a_s(T));
                return kernel_hN(p, T, s.a_s(T), s.a_r(T)) * (c_T - K);
            };
        }
        case Trade::Type::YoYSwap: {
            auto sched = trade.schedule;
            double K = 1.0 + trade.strike;
            return [&p, sched, K](const PathState& s) {
                double v = 0;
                for (std::size_t i = 1; i < sched.size(); ++i) {
                    double t0 = sched[i - 1], t1 = sched[i];
                    double ratio = (t0 == 0 ? 1.0 : p.S(t0) * s.a_s(t0)) /
                                   (p.S(t1) * s.a_s(t1));
                    v += kernel_hN(p, t1, s.a_s(t1), s.a_r(t1)) * (ratio - K);
                }
                return v;
            };
        }
        case Trade::Type::YoYOption: {
            auto o = trade.yoy;
            return [&p, o](const PathState& s) {
                double c0 = o.T0 == 0 ? 1.0 : 1.0 / (p.S(o.T0) * s.a_s(o.T0));
                double ratio = (1.0 / (p.S(o.T1) * s.a_s(o.T1))) / c0;
                double pay = o.side == OptionSide::Floor ? std::max(0.0, o.K - ratio)
                                                         : std::max(0.0, ratio - o.K);
                return kernel_hN(p, o.T, s.a_s(o.T), s.a_r(o.T)) * pay;
            };
        }
        case Trade::Type::ZcOption: {
            auto o = trade.zc;
            return [&p, o](const PathState& s) {
                double cb = o.Tbase == 0 ? 1.0 : 1.0 / (p.S(o.Tbase) * s.a_s(o.Tbase));
                double ratio = (1.0 / (p.S(o.Ti) * s.a_s(o.Ti))) / cb;
                double pay = o.side == OptionSide::Floor ? std::max(0.0, o.K - ratio)
                                                         : std::max(0.0, ratio - o.K);
                return kernel_hN(p, o.T, s.a_s(o.T), s.a_r(o.T)) * pay;
            };
        }
        case Trade::Type::LpiBond:
        case Trade::Type::LpiSwap: {
            auto l = trade.lpi;
            bool is_swap = trade.type == Trade::Type::LpiSwap;
            double K = trade.strike;
            return [&p, l, is_swap, K](const PathState& s) {
                double lpi = l.base_level;
                for (std::size_t k = 1; k < l.schedule.size(); ++k) {
                    double t0 = l.schedule[k - 1], t1 = l.schedule[k];
                    double c0 = t0 == 0 ? 1.0 : 1.0 / (p.S(t0) * s.a_s(t0));
                    double ratio = (1.0 / (p.S(t1) * s.a_s(t1))) / c0;
                    lpi *= std::clamp(ratio, 1.0 + l.K_f, 1.0 + l.K_c);
                }
                double pay = is_swap ? lpi - K : lpi;
                return kernel_hN(p, l.T, s.a_s(l.T), s.a_r(l.T)) * pay;
            };
        }
        case Trade::Type::Swaption: {
            auto sw = trade.swaption;
            return [&p, sw](const PathState& s) {
                double Tk = sw.expiry;
                MarketState st;
                st.t = Tk;
                st.A_S = s.a_s(Tk);
                st.A_R = s.a_r(Tk);
                st.A_L = s.a_l(Tk);
                double v = sw.mode == CurveMode::Single
                               ? swap_price_single(p, st, sw.underlying)
                               : swap_price_multi(p, st, sw.underlying);
                return kernel_hN(p, Tk, st.A_S, st.A_R) * std::max(0.0, v) *
                       sw.underlying.notional;
            };
        }
    }
    throw UnsupportedTrade("mc_price: unknown trade type");
}

}  // namespace

std::vector<McEstimate> mc_prices(const RpksParams& params, const std::vector<Trade>& trades,
                                  const SimPlan& plan) {
    // validate grid coverage
    for (const auto& tr : trades)
        for (double d : tr.event_dates())
            if (d > 0 && !std::binary_search(plan.grid.begin(), plan.grid.end(), d))
                throw Error("mc_prices: trade date " + std::to_string(d) +
                            " missing from the simulation grid");
    std::vector<std::function<double(const PathState&)>> payoffs;
    payoffs.reserve(trades.size());
    for (const auto& tr : trades) payoffs.push_back(payoff_functional(params, tr));
    return mc_expectations(params.spec(), plan, payoffs);
}

McEstimate mc_price(const RpksParams& params, const Trade& trade, const SimPlan& plan) {
    return mc_prices(params, {trade}, plan)[0];
}

MartingaleReport martingale_suite(const AdditiveSpec& spec, const std::vector<double>& grid,
                                  const SimPlan& plan) {
    std::vector<std::function<double(const PathState&)>> payoffs;
    const char* names[3] = {"A_S", "A_R", "A_L"};
    for (int f = 0; f < 3; ++f)
        for (std::size_t k = 0; k < grid.size(); ++k)
            payoffs.push_back([f, k](const PathState& s) {
                return f == 0 ? s.A_S[k] : (f == 1 ? s.A_R[k] : s.A_L[k]);
            });
    SimPlan p2 = plan;
    p2.grid = grid;
    auto est = mc_expectations(spec, p2, payoffs);
    MartingaleReport rep;
    std::size_t idx = 0;
    for (int f = 0; f < 3; ++f)
        for (std::size_t k = 0; k < grid.size(); ++k, ++idx) {
            double z = est[idx].std_error > 0
                           ? (est[idx].value - 1.0) / est[idx].std_error
                           : (est[idx].value == 1.0 ? 0.0 : 1e9);
            rep.rows.push_back({names[f], grid[k], est[idx].value, est[idx].std_error, z});
            rep.worst_abs_z = std::max(rep.worst_abs_z, std::fabs(z));
        }
    return rep;
}

}  // namespace rpk::mc
