#pragma once

#include <functional>

#include "hjmfdr/curve_ops.hpp"
#include "hjmfdr/grid.hpp"

namespace hjmfdr {

// Coefficients of Lambda' + (a/2) Lambda^2 + b Lambda = lambda0, Lambda(0)=0.
// lambda0 is normalized to 1 by default; lambda0 = 0 would force the trivial
// direction curve and is rejected.
struct RiccatiParams {
    double a = 0.0;       // quadratic coefficient (CIR: a = rho^2)
    double b = 0.0;       // linear coefficient (mean reversion)
    double lambda0 = 1.0;

    void validate() const {
        if (lambda0 == 0.0)
            throw std::invalid_argument("RiccatiParams: lambda0 must be nonzero");
    }
};

enum class RiccatiKind { ho_lee, vasicek, cir };

const char* riccati_kind_name(RiccatiKind k);

// Lambda and the factor loading B = Lambda'. Closed forms carry analytic
// evaluators; the RK4 route interpolates its samples.
struct RiccatiSolution {
    ForwardCurve Lambda;
    ForwardCurve B;
    RiccatiKind kind = RiccatiKind::vasicek;
    RiccatiParams params;
    bool analytic = false;  // closed form (true) or RK4 samples (false)
    std::function<double(double)> Lambda_fn;
    std::function<double(double)> B_fn;
};

// RK4 with step = grid spacing; B is the ODE right-hand side evaluated on
// Lambda (consistent by construction, no re-differencing).
RiccatiSolution solve_riccati(const RiccatiParams& p, const MaturityGrid& grid);

// Lambda = (1 - e^{-beta x}) / beta, B = e^{-beta x}. beta = 0 degenerates
// to Ho-Lee (Lambda = x); beta < 0 is rejected.
RiccatiSolution closed_form_vasicek(double beta, const MaturityGrid& grid);

// CIR closed form with gamma = sqrt(beta^2 + 2 rho^2):
//   Lambda(x) = 2 (e^{gamma x} - 1) / ((gamma + beta)(e^{gamma x} - 1) + 2 gamma)
// B is the analytic derivative 4 gamma^2 e^{gamma x} / (denominator)^2, so the
// Riccati identity B = 1 - beta Lambda - (rho^2/2) Lambda^2 is a genuine check.
RiccatiSolution closed_form_cir(double beta, double rho, const MaturityGrid& grid);

// A-function of the affine yield decomposition: Vasicek/Ho-Lee
// A = b Lambda - (rho^2/2) Lambda^2, CIR A = b Lambda. A(0) = 0 always.
ForwardCurve a_function(const RiccatiSolution& sol, double b_param, double rho);

// Max-node residual |B + (a/2)Lambda^2 + b Lambda - lambda0| of the stored
// solution. For closed forms this pits the analytic derivative against the
// ODE right-hand side; for the RK4 route it is a consistency check.
double riccati_max_residual(const RiccatiSolution& sol);

}  // namespace hjmfdr
