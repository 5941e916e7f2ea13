#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "hjmfdr/errors.hpp"

namespace hjmfdr {

// Uniform maturity grid on [0, x_max + horizon_pad]. The pad holds the part
// of the curve that right-shifts consume, so no extrapolation is ever needed
// on the reported range [0, x_max].
struct MaturityGrid {
    double x_max = 10.0;
    double horizon_pad = 5.0;
    int n_points = 601;

    double total_length() const { return x_max + horizon_pad; }
    double spacing() const { return total_length() / (n_points - 1); }
    double x(int i) const { return spacing() * i; }

    void validate() const;
    bool operator==(const MaturityGrid& o) const;

    // x_max=10y, pad=5y, 601 nodes (spacing 0.025y)
    static MaturityGrid standard() { return MaturityGrid{}; }
};

// A forward-rate curve h(x) sampled on a maturity grid. Value type: all
// operations return fresh curves. pad_used tracks how much of the horizon
// pad earlier shifts have consumed; nodes beyond x_max + pad - pad_used are
// clamped tail values and should not be relied upon.
class ForwardCurve {
  public:
    // Placeholder curve (three zero nodes); any mixed-grid use throws.
    ForwardCurve() : ForwardCurve(MaturityGrid{1.0, 0.0, 3}, {0.0, 0.0, 0.0}) {}
    ForwardCurve(MaturityGrid grid, std::vector<double> values, double pad_used = 0.0);

    static ForwardCurve constant(const MaturityGrid& grid, double c);
    static ForwardCurve sample(const MaturityGrid& grid, const std::function<double(double)>& f);
    static ForwardCurve zeros(const MaturityGrid& grid) { return constant(grid, 0.0); }

    const MaturityGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }
    int size() const { return static_cast<int>(values_.size()); }

    double at(int i) const { return values_[static_cast<size_t>(i)]; }
    double& at(int i) { return values_[static_cast<size_t>(i)]; }

    // Linear interpolation; x must lie in [0, x_max + pad].
    double operator()(double x) const;

    double short_rate() const { return values_.front(); }
    double pad_used() const { return pad_used_; }
    double pad_remaining() const { return grid_.horizon_pad - pad_used_; }
    void set_pad_used(double p) { pad_used_ = p; }

    // Last grid index with x(i) <= x_max (the reported range).
    int reported_end_index() const;

    double max_abs() const;
    double max_abs_reported() const;
    bool all_finite() const;

    ForwardCurve& operator+=(const ForwardCurve& o);
    ForwardCurve& operator-=(const ForwardCurve& o);
    ForwardCurve& operator*=(double s);
    // this += s * o  (the Monte Carlo hot path)
    ForwardCurve& axpy(double s, const ForwardCurve& o);

  private:
    MaturityGrid grid_;
    std::vector<double> values_;
    double pad_used_ = 0.0;
};

ForwardCurve operator+(ForwardCurve a, const ForwardCurve& b);
ForwardCurve operator-(ForwardCurve a, const ForwardCurve& b);
ForwardCurve operator*(double s, ForwardCurve a);

// Pointwise product a(x)*b(x).
ForwardCurve hadamard(const ForwardCurve& a, const ForwardCurve& b);

double sup_distance(const ForwardCurve& a, const ForwardCurve& b);
double sup_distance_reported(const ForwardCurve& a, const ForwardCurve& b);

// Norm weight w(x) for the curve-space norm: exponential e^{alpha x) with
// alpha > 0 or polynomial (1+x)^alpha with alpha > 3. Both are >= 1 and
// non-decreasing on the grid by construction.
struct WeightFunction {
    enum class Kind { exponential, polynomial };
    Kind kind = Kind::exponential;
    double alpha = 0.1;

    double operator()(double x) const {
        return kind == Kind::exponential ? std::exp(alpha * x) : std::pow(1.0 + x, alpha);
    }

    static WeightFunction exponential(double alpha);
    static WeightFunction polynomial(double alpha);
};

const WeightFunction& default_weight();

}  // namespace hjmfdr
