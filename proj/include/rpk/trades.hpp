#pragma once

#include <string>
#include <vector>

#include "rpk/errors.hpp"

namespace rpk {

enum class OptionSide { Floor, Cap };

// YoY option on C_{T1}/C_{T0}, paid at T >= T1; strike K = 1 + k
struct YoYOptionSpec {
    double T0, T1, T;
    double K;
    OptionSide side = OptionSide::Floor;

    static YoYOptionSpec floorlet(double T0, double T1, double k, double lag = 2.0 / 252);
    static YoYOptionSpec caplet(double T0, double T1, double k, double lag = 2.0 / 252);
    void validate() const;
};

// ZC option on C_{Ti}/C_{Tbase}, paid at T >= Ti; strike K = (1+k)^{Ti-Tbase}
struct ZcOptionSpec {
    double Tbase, Ti, T;
    double K;
    OptionSide side = OptionSide::Floor;

    static ZcOptionSpec floor(double Ti, double k, double lag = 2.0 / 252);
    static ZcOptionSpec cap(double Ti, double k, double lag = 2.0 / 252);
    void validate() const;
};

// LPI-linked bond: annual collared compounding over the schedule, paid at T
struct LpiSpec {
    std::vector<double> schedule;  // T_0 < ... < T_N
    double T;                      // payment, >= T_N
    double K_f, K_c;
    double base_level = 1.0;       // C^LPI at T_0

    static LpiSpec annual(int years, double K_f, double K_c, double lag = 2.0 / 252);
    void validate() const;
};

struct SwapSpec {
    std::vector<double> schedule;  // T_0 < ... < T_N
    double K = 0;
    double notional = 1;

    static SwapSpec annual(double start, int years, double K);
    static SwapSpec quarterly(double start, double length, double K);
    double accrual(std::size_t i) const { return schedule[i] - schedule[i - 1]; }
    void validate() const;
};

enum class CurveMode { Single, Multi };

struct SwaptionSpec {
    double expiry;        // T_k, first date of the underlying schedule
    SwapSpec underlying;
    CurveMode mode = CurveMode::Single;

    void validate() const;
};

// one row of a pricing batch
struct Trade {
    enum class Type {
        NominalBond,
        IlBond,
        RealBond,
        ZcSwap,
        YoYSwap,
        YoYOption,
        ZcOption,
        LpiBond,
        LpiSwap,
        Swaption
    };
    Type type;
    std::string id;

    double maturity = 0;   // bonds, ZC swap
    double strike = 0;     // rate k for swaps, options
    YoYOptionSpec yoy{};
    ZcOptionSpec zc{};
    LpiSpec lpi{};
    SwaptionSpec swaption{};
    std::vector<double> schedule;  // YoY swap

    std::vector<double> event_dates() const;
};

}  // namespace rpk
