#pragma once

#include <vector>

#include "rpk/errors.hpp"

namespace rpk {

// Deterministic operational clock tau(t) = int_0^t a(s) ds with a(.) piecewise
// constant on the knot intervals; beyond the last knot the last rate applies.
class TimeChange {
public:
    TimeChange();  // identity clock, tau(t) = t
    TimeChange(std::vector<double> knots, std::vector<double> rates);

    double operator()(double t) const;   // tau(t)
    double rate(double t) const;         // a(t), right-continuous

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& rates() const { return rates_; }
    std::vector<double>& rates() { return rates_; }
    void set_rate(std::size_t k, double a);

private:
    std::vector<double> knots_;   // T_0 < T_1 < ... < T_n, T_0 = 0
    std::vector<double> rates_;   // a_1..a_n on (T_{k-1}, T_k]
    mutable std::vector<double> cum_;  // tau at knots
    void rebuild();
};

}  // namespace rpk
