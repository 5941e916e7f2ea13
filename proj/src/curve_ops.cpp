#include "hjmfdr/curve_ops.hpp"

#include <cmath>

namespace hjmfdr {

ForwardCurve deriv(const ForwardCurve& h) {
    const int n = h.size();
    const double dx = h.grid().spacing();
    const auto& v = h.values();
    std::vector<double> d(static_cast<size_t>(n));
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dx);
    for (int i = 1; i < n - 1; ++i)
        d[static_cast<size_t>(i)] = (v[static_cast<size_t>(i) + 1] - v[static_cast<size_t>(i) - 1]) / (2.0 * dx);
    d[static_cast<size_t>(n) - 1] =
        (3.0 * v[static_cast<size_t>(n) - 1] - 4.0 * v[static_cast<size_t>(n) - 2] + v[static_cast<size_t>(n) - 3]) /
        (2.0 * dx);
    return ForwardCurve(h.grid(), std::move(d), h.pad_used());
}

ForwardCurve integral(const ForwardCurve& h) {
    const int n = h.size();
    const double dx = h.grid().spacing();
    const auto& v = h.values();
    std::vector<double> acc(static_cast<size_t>(n));
    acc[0] = 0.0;
    for (int i = 1; i < n; ++i)
        acc[static_cast<size_t>(i)] =
            acc[static_cast<size_t>(i) - 1] + 0.5 * dx * (v[static_cast<size_t>(i) - 1] + v[static_cast<size_t>(i)]);
    return ForwardCurve(h.grid(), std::move(acc), h.pad_used());
}

ForwardCurve shift(const ForwardCurve& h, double t) {
    if (t < -1e-12) throw std::invalid_argument("shift: t must be >= 0");
    if (t > h.pad_remaining() + 1e-9)
        throw PadExhausted("shift: requested shift exceeds remaining horizon pad");
    const int n = h.size();
    const double dx = h.grid().spacing();
    const auto& v = h.values();
    const double s = t / dx;
    int k = static_cast<int>(std::floor(s + 1e-9));
    double theta = s - k;
    if (theta < 1e-9) theta = 0.0;
    std::vector<double> out(static_cast<size_t>(n));
    if (theta == 0.0) {
        for (int i = 0; i < n; ++i) {
            const int j = std::min(i + k, n - 1);
            out[static_cast<size_t>(i)] = v[static_cast<size_t>(j)];
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const int j = i + k;
            if (j >= n - 1) {
                out[static_cast<size_t>(i)] = v[static_cast<size_t>(n) - 1];
            } else {
                out[static_cast<size_t>(i)] =
                    v[static_cast<size_t>(j)] * (1.0 - theta) + v[static_cast<size_t>(j) + 1] * theta;
            }
        }
    }
    return ForwardCurve(h.grid(), std::move(out), h.pad_used() + t);
}

double norm_w(const ForwardCurve& h, const WeightFunction& w) {
    return std::sqrt(inner_w(h, h, w));
}

double inner_w(const ForwardCurve& f, const ForwardCurve& g, const WeightFunction& w) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("inner_w: grids differ");
    const ForwardCurve df = deriv(f);
    const ForwardCurve dg = deriv(g);
    const int n = f.size();
    const double dx = f.grid().spacing();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double term = df.at(i) * dg.at(i) * w(f.grid().x(i));
        acc += (i == 0 || i == n - 1) ? 0.5 * term : term;
    }
    return f.at(0) * g.at(0) + acc * dx;
}

}  // namespace hjmfdr
