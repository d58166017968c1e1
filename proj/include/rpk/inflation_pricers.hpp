#pragma once

#include "rpk/fourier.hpp"
#include "rpk/rpks.hpp"
#include "rpk/trades.hpp"

namespace rpk {

// Fourier pricers for the exponential-rational model; valid for both driver
// kinds. Diagnostics from the damped quadrature are surfaced on request.

double yoy_floorlet(const RpksParams& p, const MarketState& s, const YoYOptionSpec& o,
                    const fourier::QuadratureConfig& cfg = {},
                    fourier::QuadDiagnostics* diag = nullptr);
double yoy_caplet(const RpksParams& p, const MarketState& s, const YoYOptionSpec& o,
                  const fourier::QuadratureConfig& cfg = {},
                  fourier::QuadDiagnostics* diag = nullptr);
double yoy_option(const RpksParams& p, const MarketState& s, const YoYOptionSpec& o,
                  const fourier::QuadratureConfig& cfg = {});

// sum of per-period options on consecutive schedule ratios
double yoy_strip(const RpksParams& p, const MarketState& s,
                 const std::vector<double>& schedule, double k, OptionSide side,
                 double payment_lag = 2.0 / 252,
                 const fourier::QuadratureConfig& cfg = {});

// value of moving the payment date from T1 to o.T
double yoy_timelag_value(const RpksParams& p, const MarketState& s, const YoYOptionSpec& o,
                         const fourier::QuadratureConfig& cfg = {});

double zc_floor(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o,
                const fourier::QuadratureConfig& cfg = {},
                fourier::QuadDiagnostics* diag = nullptr);
double zc_cap(const RpksParams& p, const MarketState& s, const ZcOptionSpec& o,
              const fourier::QuadratureConfig& cfg = {},
              fourier::QuadDiagnostics* diag = nullptr);

// floating value of the time-lagged ZC swap paying C_{Ti}/C_{Tbase} at T
double zc_swaplet_floating_lagged(const RpksParams& p, const MarketState& s, double Tbase,
                                  double Ti, double T);

double lpi_bond(const RpksParams& p, const MarketState& s, const LpiSpec& l,
                const fourier::QuadratureConfig& cfg = {},
                fourier::QuadDiagnostics* diag = nullptr);
double lpi_swap(const RpksParams& p, const MarketState& s, const LpiSpec& l, double K,
                const fourier::QuadratureConfig& cfg = {});

}  // namespace rpk
