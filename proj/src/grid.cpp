#include "hjmfdr/grid.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hjmfdr {

void MaturityGrid::validate() const {
    if (n_points < 3) throw std::invalid_argument("MaturityGrid: n_points must be >= 3");
    if (!(x_max > 0.0)) throw std::invalid_argument("MaturityGrid: x_max must be positive");
    if (horizon_pad < 0.0) throw std::invalid_argument("MaturityGrid: horizon_pad must be >= 0");
    if (!(spacing() > 0.0)) throw std::invalid_argument("MaturityGrid: spacing must be positive");
}

bool MaturityGrid::operator==(const MaturityGrid& o) const {
    return x_max == o.x_max && horizon_pad == o.horizon_pad && n_points == o.n_points;
}

ForwardCurve::ForwardCurve(MaturityGrid grid, std::vector<double> values, double pad_used)
    : grid_(grid), values_(std::move(values)), pad_used_(pad_used) {
    grid_.validate();
    if (static_cast<int>(values_.size()) != grid_.n_points)
        throw std::invalid_argument("ForwardCurve: values length must equal n_points");
    if (!all_finite()) throw std::invalid_argument("ForwardCurve: values must be finite");
}

ForwardCurve ForwardCurve::constant(const MaturityGrid& grid, double c) {
    return ForwardCurve(grid, std::vector<double>(static_cast<size_t>(grid.n_points), c));
}

ForwardCurve ForwardCurve::sample(const MaturityGrid& grid, const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i) v[static_cast<size_t>(i)] = f(grid.x(i));
    return ForwardCurve(grid, std::move(v));
}

double ForwardCurve::operator()(double x) const {
    const double h = grid_.spacing();
    if (x < -1e-12 || x > grid_.total_length() + 1e-12)
        throw DomainError("ForwardCurve: evaluation point outside [0, x_max + pad]");
    double s = x / h;
    int i = static_cast<int>(std::floor(s));
    if (i < 0) i = 0;
    if (i >= grid_.n_points - 1) return values_.back();
    const double theta = s - i;
    return values_[static_cast<size_t>(i)] * (1.0 - theta) + values_[static_cast<size_t>(i) + 1] * theta;
}

int ForwardCurve::reported_end_index() const {
    const double h = grid_.spacing();
    int i = static_cast<int>(std::floor(grid_.x_max / h + 1e-9));
    return std::min(i, grid_.n_points - 1);
}

double ForwardCurve::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double ForwardCurve::max_abs_reported() const {
    double m = 0.0;
    const int end = reported_end_index();
    for (int i = 0; i <= end; ++i) m = std::max(m, std::abs(values_[static_cast<size_t>(i)]));
    return m;
}

bool ForwardCurve::all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

namespace {
void require_same_grid(const ForwardCurve& a, const ForwardCurve& b) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("curve operation: grids differ");
}
}  // namespace

ForwardCurve& ForwardCurve::operator+=(const ForwardCurve& o) {
    require_same_grid(*this, o);
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    pad_used_ = std::max(pad_used_, o.pad_used_);
    return *this;
}

ForwardCurve& ForwardCurve::operator-=(const ForwardCurve& o) {
    require_same_grid(*this, o);
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    pad_used_ = std::max(pad_used_, o.pad_used_);
    return *this;
}

ForwardCurve& ForwardCurve::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

ForwardCurve& ForwardCurve::axpy(double s, const ForwardCurve& o) {
    require_same_grid(*this, o);
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += s * o.values_[i];
    pad_used_ = std::max(pad_used_, o.pad_used_);
    return *this;
}

ForwardCurve operator+(ForwardCurve a, const ForwardCurve& b) { return a += b; }
ForwardCurve operator-(ForwardCurve a, const ForwardCurve& b) { return a -= b; }
ForwardCurve operator*(double s, ForwardCurve a) { return a *= s; }

ForwardCurve hadamard(const ForwardCurve& a, const ForwardCurve& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("hadamard: grids differ");
    std::vector<double> v(a.values());
    for (size_t i = 0; i < v.size(); ++i) v[i] *= b.values()[i];
    return ForwardCurve(a.grid(), std::move(v), std::max(a.pad_used(), b.pad_used()));
}

double sup_distance(const ForwardCurve& a, const ForwardCurve& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("sup_distance: grids differ");
    double m = 0.0;
    for (size_t i = 0; i < a.values().size(); ++i)
        m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
    return m;
}

double sup_distance_reported(const ForwardCurve& a, const ForwardCurve& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("sup_distance: grids differ");
    double m = 0.0;
    const int end = a.reported_end_index();
    for (int i = 0; i <= end; ++i)
        m = std::max(m, std::abs(a.at(i) - b.at(i)));
    return m;
}

WeightFunction WeightFunction::exponential(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("WeightFunction: exponential weight needs alpha > 0");
    return WeightFunction{Kind::exponential, alpha};
}

WeightFunction WeightFunction::polynomial(double alpha) {
    if (!(alpha > 3.0)) throw std::invalid_argument("WeightFunction: polynomial weight needs alpha > 3");
    return WeightFunction{Kind::polynomial, alpha};
}

const WeightFunction& default_weight() {
    static const WeightFunction w = WeightFunction::exponential(0.1);
    return w;
}

}  // namespace hjmfdr
