#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "rpk/errors.hpp"

namespace rpk::math {

// Cubic Hermite interpolation on a knot grid. Two slope rules:
//   Monotone  - Fritsch-Carlson limited slopes (shape preserving)
//   Clamped   - three-point finite differences inside, zero slope at the ends
// Extrapolation is flat on both sides.
class HermiteSpline {
public:
    enum class Slopes { Monotone, Clamped };

    HermiteSpline() = default;
    HermiteSpline(std::vector<double> x, std::vector<double> y,
                  Slopes rule = Slopes::Monotone)
        : x_(std::move(x)), y_(std::move(y)) {
        const size_t n = x_.size();
        if (n != y_.size() || n < 2) throw Error("HermiteSpline: need >=2 knots");
        for (size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1])) throw Error("HermiteSpline: knots not increasing");
        m_.assign(n, 0.0);
        std::vector<double> d(n - 1);
        for (size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        if (rule == Slopes::Monotone) {
            m_[0] = d[0];
            m_[n - 1] = d[n - 2];
            for (size_t i = 1; i + 1 < n; ++i)
                m_[i] = (d[i - 1] * d[i] <= 0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
            // Fritsch-Carlson limiter
            for (size_t i = 0; i + 1 < n; ++i) {
                if (d[i] == 0) {
                    m_[i] = m_[i + 1] = 0;
                    continue;
                }
                double a = m_[i] / d[i], b = m_[i + 1] / d[i];
                double s = a * a + b * b;
                if (s > 9) {
                    double tau = 3 / std::sqrt(s);
                    m_[i] = tau * a * d[i];
                    m_[i + 1] = tau * b * d[i];
                }
            }
        } else {
            m_[0] = 0;
            m_[n - 1] = 0;
            for (size_t i = 1; i + 1 < n; ++i) {
                double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
                m_[i] = (h1 * d[i - 1] + h0 * d[i]) / (h0 + h1);
            }
        }
    }

    double operator()(double t) const {
        const size_t n = x_.size();
        if (t <= x_.front()) return y_.front();
        if (t >= x_.back()) return y_.back();
        size_t i = std::upper_bound(x_.begin(), x_.end(), t) - x_.begin() - 1;
        double h = x_[i + 1] - x_[i];
        double s = (t - x_[i]) / h;
        double s2 = s * s, s3 = s2 * s;
        double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
        double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
        return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
    }

    const std::vector<double>& knots() const { return x_; }
    const std::vector<double>& values() const { return y_; }

private:
    std::vector<double> x_, y_, m_;
};

// Right-continuous step function: value(t) = v_j for t in [x_{j-1}, x_j),
// v_front before the first knot, v_back from the last knot on.
class StepFunction {
public:
    StepFunction() = default;
    StepFunction(std::vector<double> boundaries, std::vector<double> values)
        : x_(std::move(boundaries)), v_(std::move(values)) {
        if (x_.size() != v_.size() + 1 || v_.empty())
            throw Error("StepFunction: need n+1 boundaries for n values");
        for (size_t i = 1; i < x_.size(); ++i)
            if (!(x_[i] > x_[i - 1])) throw Error("StepFunction: boundaries not increasing");
    }

    double operator()(double t) const {
        if (t < x_.front()) return v_.front();
        if (t >= x_.back()) return v_.back();
        size_t i = std::upper_bound(x_.begin(), x_.end(), t) - x_.begin() - 1;
        return v_[i];
    }

    const std::vector<double>& boundaries() const { return x_; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

private:
    std::vector<double> x_, v_;
};

}  // namespace rpk::math
