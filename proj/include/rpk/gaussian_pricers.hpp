#pragma once

#include "rpk/rpks.hpp"
#include "rpk/trades.hpp"

namespace rpk {

// first and second moments of a bivariate normal pair (X, Y)
struct BivariateNormalMoments {
    double mu_x = 0, mu_y = 0;
    double var_x = 0, var_y = 0;
    double cov_xy = 0;

    void validate() const;
};

// E[e^X (alpha e^Y - beta)^+]
double bn_call_kernel(const BivariateNormalMoments& m, double alpha, double beta);
// E[e^X (beta - alpha e^Y)^+]
double bn_put_kernel(const BivariateNormalMoments& m, double alpha, double beta);

// closed forms under the time-changed Wiener specification
double yoy_floorlet_gaussian(const RpksParams& p, const MarketState& s,
                             const YoYOptionSpec& o);
double yoy_caplet_gaussian(const RpksParams& p, const MarketState& s,
                           const YoYOptionSpec& o);
double zc_floor_gaussian(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o);
double zc_cap_gaussian(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o);
double lpi_bond_gaussian(const RpksParams& p, const MarketState& s, const LpiSpec& l);

}  // namespace rpk
