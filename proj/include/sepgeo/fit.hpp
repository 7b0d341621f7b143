#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace sepgeo {

/// Least-squares fit of log(y) against log(x).
struct FitResult {
    bool ok = false;  // false when fewer than two distinct points
    double exponent = 0.0;
    double intercept = 0.0;   // log-space
    double residual_rms = 0.0;
    int points = 0;
};

inline FitResult loglog_fit(const std::vector<std::pair<double, double>>& samples) {
    FitResult fit;
    std::vector<std::pair<double, double>> pts;
    for (auto [x, y] : samples)
        if (x > 0 && y > 0) pts.emplace_back(std::log(x), std::log(y));
    fit.points = static_cast<int>(pts.size());
    if (pts.size() < 2) return fit;
    double first_x = pts.front().first;
    bool distinct = false;
    for (auto& p : pts)
        if (p.first != first_x) distinct = true;
    if (!distinct) return fit;

    double sx = 0, sy = 0;
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    double mx = sx / fit.points, my = sy / fit.points;
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    fit.ok = true;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double rss = 0;
    for (auto& [x, y] : pts) {
        double e = y - (fit.intercept + fit.exponent * x);
        rss += e * e;
    }
    fit.residual_rms = std::sqrt(rss / fit.points);
    return fit;
}

}  // namespace sepgeo
