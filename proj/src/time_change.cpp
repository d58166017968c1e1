#include "rpk/time_change.hpp"

#include <algorithm>
#include <cmath>

namespace rpk {

TimeChange::TimeChange() : knots_{0.0, 1.0}, rates_{1.0} { rebuild(); }

TimeChange::TimeChange(std::vector<double> knots, std::vector<double> rates)
    : knots_(std::move(knots)), rates_(std::move(rates)) {
    if (knots_.size() < 2 || rates_.size() != knots_.size() - 1)
        throw Error("TimeChange: need n+1 knots for n rates");
    if (knots_.front() != 0.0) throw Error("TimeChange: first knot must be 0");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i] > knots_[i - 1])) throw Error("TimeChange: knots not increasing");
    for (double a : rates_)
        if (!(a > 0)) throw Error("TimeChange: rates must be positive");
    rebuild();
}

void TimeChange::rebuild() {
    cum_.assign(knots_.size(), 0.0);
    for (std::size_t i = 1; i < knots_.size(); ++i)
        cum_[i] = cum_[i - 1] + rates_[i - 1] * (knots_[i] - knots_[i - 1]);
}

void TimeChange::set_rate(std::size_t k, double a) {
    if (k >= rates_.size()) throw Error("TimeChange: rate index out of range");
    if (!(a > 0)) throw Error("TimeChange: rates must be positive");
    rates_[k] = a;
    rebuild();
}

double TimeChange::operator()(double t) const {
    if (t < 0) throw NegativeTime("TimeChange: t < 0");
    if (t >= knots_.back())
        return cum_.back() + rates_.back() * (t - knots_.back());
    std::size_t i = std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin() - 1;
    return cum_[i] + rates_[i] * (t - knots_[i]);
}

double TimeChange::rate(double t) const {
    if (t < 0) throw NegativeTime("TimeChange: t < 0");
    if (t >= knots_.back()) return rates_.back();
    std::size_t i = std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin() - 1;
    return rates_[i];
}

}  // namespace rpk
