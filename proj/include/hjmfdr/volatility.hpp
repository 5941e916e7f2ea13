#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hjmfdr/functionals.hpp"
#include "hjmfdr/grid.hpp"

namespace hjmfdr {

// Scalar coefficient map z -> phi(z) applied to a functional value of the
// curve. The small closed-form set keeps an analytic derivative available
// for chain-rule cross-checks of the numeric Frechet machinery.
struct ScalarMap {
    enum class Kind { constant, affine, sqrt_scaled };
    Kind kind = Kind::constant;
    double c0 = 0.0;  // constant: c0 ; affine: c0 + c1 z ; sqrt_scaled: c0 sqrt(z)
    double c1 = 0.0;

    double eval(double z) const;
    double deriv(double z) const;
    bool needs_positive_argument() const { return kind == Kind::sqrt_scaled; }

    static ScalarMap constant(double c) { return {Kind::constant, c, 0.0}; }
    static ScalarMap affine(double c0, double c1) { return {Kind::affine, c0, c1}; }
    static ScalarMap sqrt_scaled(double c) { return {Kind::sqrt_scaled, c, 0.0}; }
};

// Local volatility phi(x, y) = rho * exp(-beta x) * g(y) evaluated at
// y = h(x). g comes from a closed-form set with analytic first and second
// y-derivatives and analytic x-derivative.
struct LocalVolExpr {
    enum class YPart { one, affine, quadratic, sqrt_y };
    double rho = 0.02;
    double beta = 0.5;
    YPart ypart = YPart::one;
    double c0 = 1.0, c1 = 0.0, c2 = 0.0;  // affine: 1 + c1 y ; quadratic: c0 + c1 y + c2 y^2

    double g(double y) const;
    double gp(double y) const;
    double gpp(double y) const;

    double phi(double x, double y) const { return rho * std::exp(-beta * x) * g(y); }
    double d1phi(double x, double y) const { return -beta * phi(x, y); }     // ∂_x
    double dyphi(double x, double y) const { return rho * std::exp(-beta * x) * gp(y); }
    double dyyphi(double x, double y) const { return rho * std::exp(-beta * x) * gpp(y); }

    bool requires_positive_y() const { return ypart == YPart::sqrt_y; }

    static LocalVolExpr vasicek(double rho, double beta) { return {rho, beta, YPart::one, 1, 0, 0}; }
    static LocalVolExpr affine_in_y(double rho, double beta, double c1) {
        return {rho, beta, YPart::affine, 1, c1, 0};
    }
    static LocalVolExpr sqrt_y(double rho) { return {rho, 0.0, YPart::sqrt_y, 1, 0, 0}; }
    static LocalVolExpr quadratic(double rho, double beta, double c0, double c1, double c2) {
        return {rho, beta, YPart::quadratic, c0, c1, c2};
    }
};

// Volatility structure sigma = (sigma_1..sigma_d). Two shapes:
//  - constant_direction: sigma_i(h) = phi_i(ell_i(h)) * lambda_i with fixed
//    direction curves lambda_i (covers the functional-dependent case),
//  - local: d = 1, sigma(h)(x) = phi(x, h(x)).
class VolatilityStructure {
  public:
    enum class Kind { constant_direction, local, zero };

    struct Factor {
        ScalarMap phi;
        LinearFunctional ell = LinearFunctional::point_eval(0.0);
        ForwardCurve lambda;
    };

    static VolatilityStructure constant_direction(std::vector<Factor> factors, bool check_a2 = true);
    static VolatilityStructure local(LocalVolExpr expr, const MaturityGrid& grid);
    static VolatilityStructure zero(const MaturityGrid& grid);

    Kind kind() const { return kind_; }
    int dimension() const;
    const MaturityGrid& grid() const { return grid_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const LocalVolExpr& local_expr() const;

    ForwardCurve eval_factor(int i, const ForwardCurve& h) const;
    std::vector<ForwardCurve> eval(const ForwardCurve& h) const;

    // Domain U of the model: sqrt-type coefficient maps need ell(h) > eps;
    // sqrt-type local expressions need h > eps pointwise.
    bool in_domain(const ForwardCurve& h, double eps) const;

    // Analytic directional derivative (D sigma_i(h)) v.
    ForwardCurve dsigma(int i, const ForwardCurve& h, const ForwardCurve& v) const;

    std::string to_json() const;
    static VolatilityStructure from_json(const std::string& text, const MaturityGrid& grid);

  private:
    VolatilityStructure() = default;
    Kind kind_ = Kind::zero;
    MaturityGrid grid_;
    std::vector<Factor> factors_;
    std::optional<LocalVolExpr> local_;
};

}  // namespace hjmfdr
