#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hjmfdr/curve_ops.hpp"
#include "hjmfdr/volatility.hpp"

namespace hjmfdr {

struct HjmConfig {
    double time_step = 0.01;
    double horizon = 1.0;
    double epsilon = 1e-6;  // lower bound for the short rate on CIR-type domains
    std::uint64_t rng_seed = 0;

    void validate() const {
        if (!(time_step > 0.0) || !(time_step <= horizon))
            throw std::invalid_argument("HjmConfig: need 0 < time_step <= horizon");
        if (epsilon < 0.0) throw std::invalid_argument("HjmConfig: epsilon must be >= 0");
    }
};

struct FrechetStep {
    double eps_fd = 1e-5;  // relative finite-difference step

    void validate() const {
        if (!(eps_fd > 0.0 && eps_fd < 1.0))
            throw std::invalid_argument("FrechetStep: eps_fd must lie in (0,1)");
    }
};

using CurveMap = std::function<ForwardCurve(const ForwardCurve&)>;
using DomainPredicate = std::function<bool(const ForwardCurve&)>;

// No-arbitrage HJM drift: alpha(h) = sum_i sigma_i(h) * ∫ sigma_i(h).
// Vanishes at x = 0 for every h.
ForwardCurve alpha_hjm(const VolatilityStructure& sigma, const ForwardCurve& h,
                       double eps_domain = 1e-6);

// Central-difference Frechet derivative (F(h+dv) - F(h-dv)) / (2d) with the
// step scaled by the curve norms. When the perturbed curves leave the
// domain the step is shrunk (factor 10, three retries) before giving up.
ForwardCurve frechet(const CurveMap& F, const ForwardCurve& h, const ForwardCurve& v,
                     const FrechetStep& step = {}, const DomainPredicate& in_domain = nullptr);

// mu(h) = Ah + alpha(h) - 1/2 sum_i (D sigma_i(h)) sigma_i(h), Frechet term
// by central differences. nu(h) = Ah + alpha(h).
ForwardCurve mu_field(const VolatilityStructure& sigma, const ForwardCurve& h,
                      const FrechetStep& step = {}, double eps_domain = 1e-6);
ForwardCurve nu_field(const VolatilityStructure& sigma, const ForwardCurve& h,
                      double eps_domain = 1e-6);

struct StepResult {
    ForwardCurve curve;
    bool floored = false;  // short rate hit the domain floor and was clamped
};

// One splitting step of the mild equation: add the drift and noise
// increments at the current point, then transport by an exact shift.
StepResult euler_mild_step(const VolatilityStructure& sigma, const ForwardCurve& h,
                           std::span<const double> dW, const HjmConfig& cfg);

enum class FlowField { mu, nu };

struct FlowResult {
    ForwardCurve curve;
    bool domain_exit = false;
    double t_reached = 0.0;
};

// Deterministic flow of du/dt = field(u): the transport semigroup is applied
// as exact shifts, the reaction term integrated with an integrating-factor
// RK4 (Simpson weights on the shifted stages). Fourth order in the step for
// smooth reaction terms.
FlowResult flow(FlowField field, const VolatilityStructure& sigma, const ForwardCurve& r_star,
                double t, const HjmConfig& cfg,
                const std::function<void(int, double, const ForwardCurve&)>& observer = nullptr);

}  // namespace hjmfdr
