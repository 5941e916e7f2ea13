#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hjmfdr/hjm.hpp"
#include "hjmfdr/riccati.hpp"

namespace hjmfdr {

// Initial curve r*: always carries the grid samples; an analytic evaluator,
// when the curve comes from a closed-form family, removes interpolation
// noise from time-derivative fits.
struct InitialCurve {
    ForwardCurve sampled;
    std::function<double(double)> analytic;  // optional

    InitialCurve() = default;
    explicit InitialCurve(ForwardCurve c) : sampled(std::move(c)) {}
    InitialCurve(const MaturityGrid& grid, std::function<double(double)> f)
        : sampled(ForwardCurve::sample(grid, f)), analytic(std::move(f)) {}

    bool has_analytic() const { return static_cast<bool>(analytic); }
    double operator()(double x) const { return analytic ? analytic(x) : sampled(x); }
};

struct TimeGrid {
    double dt = 0.01;
    int n_steps = 100;

    double t(int k) const { return dt * k; }
    double horizon() const { return dt * n_steps; }

    void validate() const {
        if (!(dt > 0.0) || n_steps < 1)
            throw std::invalid_argument("TimeGrid: need dt > 0 and n_steps >= 1");
    }
};

// Least-squares decomposition of a curve over span{1, Lambda, Lambda^2} on
// the reported range, plus the kind-specific singular-set constraint on the
// Lambda^2 coefficient (Vasicek: a2 = -rho^2/2, CIR: a2 = -(rho^2/2) a1).
struct SingularDecomposition {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double residual = 0.0;        // sup-norm misfit of the span fit
    double constraint_gap = 0.0;  // |a2 - expected(a1)|
    double nu_span_residual = 0.0;  // relative residual of nu(h) against <lambda>
    bool is_member = false;
    bool conditioning_warning = false;
    double tolerance = 0.0;
};

SingularDecomposition singular_decompose(const ForwardCurve& h, const RiccatiSolution& sol,
                                         double rho, double tol_scale = 1e-6);

// Distance to the singular set itself: constrained two-parameter fit
//   Vasicek: h ~ a1 + a3 Lambda - (rho^2/2) Lambda^2
//   CIR:     h ~ a1 (1 - (rho^2/2) Lambda^2) + a3 Lambda
// reported as the sup misfit on [0, x_max].
double sigma_set_distance(const ForwardCurve& h, const RiccatiSolution& sol, double rho);

// Singular-set members in the traditional A + B R0 parameterization.
InitialCurve sigma_member_vasicek(double beta, double rho, double b, double r0,
                                  const MaturityGrid& grid);
InitialCurve sigma_member_cir(double beta, double rho, double b, double r0,
                              const MaturityGrid& grid);

// The model volatility structures sigma(r) = phi(r) lambda.
VolatilityStructure vasicek_volatility(double rho, double beta, const MaturityGrid& grid);
VolatilityStructure cir_volatility(double rho, double beta, const MaturityGrid& grid);

enum class AffineKind { hwv, hwcir };

// Two-dimensional realization r_t = Psi(t) + B Z_t fitted to an arbitrary
// initial curve. For hwv the deterministic path is in closed form; for hwcir
// it is the nu-flow, with the short-rate path cross-checked against the
// Volterra solution.
struct AffineRealization {
    AffineKind kind = AffineKind::hwv;
    double beta = 0.0;
    double rho = 0.0;
    MaturityGrid grid;
    TimeGrid tgrid;
    RiccatiSolution riccati;
    InitialCurve r_star;
    std::vector<double> b_of_t;            // drift parameter samples, length n_steps+1
    std::vector<double> c_of_t;            // hwcir short-rate path (hwv: Psi(t)(0))
    std::vector<ForwardCurve> psi;         // deterministic path snapshots, length n_steps+1
    double volterra_max_discrepancy = 0.0; // hwcir: flow-vs-Volterra gap on c(t)
    SingularDecomposition membership;      // of r*

    const ForwardCurve& deterministic_path(int k) const { return psi.at(static_cast<size_t>(k)); }
    ForwardCurve curve_at(int k, double z) const;

    std::string to_json() const;
    static AffineRealization from_json(const std::string& text);
};

AffineRealization hwv_fit(const InitialCurve& r_star, double beta, double rho,
                          const TimeGrid& tgrid);

AffineRealization hwcir_fit(const InitialCurve& r_star, double beta, double rho,
                            const TimeGrid& tgrid, double epsilon = 1e-6);

// Product-trapezoidal solution of
//   c(t) = r*(t) + rho^2 ∫_0^t c(s) (Lambda Lambda')(t-s) ds.
std::vector<double> volterra_c(const InitialCurve& r_star, double beta, double rho,
                               const TimeGrid& tgrid);

// Reconstructed A_HWV(t, 0) over the fit's time grid; zero up to the fit's
// discretization error. Composite-Simpson convolution, so n_steps must be even.
double hwv_a0_max_abs(const AffineRealization& fit);

enum class ZUpdate { exact_ou, euler };

struct SimulationSummary {
    int n_paths = 0;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<double> mean_short_rate;
    std::vector<double> var_short_rate;
    double bond_tenor = 5.0;
    double p0_initial = 0.0;       // exp(-∫_0^tenor r*(x) dx)
    double bond_price_mean = 0.0;  // pathwise P at the horizon for the tenor
    double bond_price_sd = 0.0;
    std::int64_t floor_events = 0;
};

SimulationSummary simulate_realization(const AffineRealization& model, const HjmConfig& cfg,
                                       int n_paths, ZUpdate z_update = ZUpdate::exact_ou,
                                       double bond_tenor = 5.0);

}  // namespace hjmfdr
