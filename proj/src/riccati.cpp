#include "hjmfdr/riccati.hpp"

#include <cmath>

namespace hjmfdr {

namespace {
constexpr double kBlowUpBound = 1e6;

double riccati_rhs(const RiccatiParams& p, double L) {
    return p.lambda0 - 0.5 * p.a * L * L - p.b * L;
}

RiccatiKind classify(const RiccatiParams& p) {
    if (p.a == 0.0 && p.b == 0.0) return RiccatiKind::ho_lee;
    if (p.a == 0.0) return RiccatiKind::vasicek;
    return RiccatiKind::cir;
}
}  // namespace

const char* riccati_kind_name(RiccatiKind k) {
    switch (k) {
        case RiccatiKind::ho_lee: return "ho_lee";
        case RiccatiKind::vasicek: return "vasicek";
        case RiccatiKind::cir: return "cir";
    }
    return "vasicek";
}

RiccatiSolution solve_riccati(const RiccatiParams& p, const MaturityGrid& grid) {
    p.validate();
    grid.validate();
    const int n = grid.n_points;
    const double dx = grid.spacing();
    std::vector<double> L(static_cast<size_t>(n)), B(static_cast<size_t>(n));
    L[0] = 0.0;
    B[0] = riccati_rhs(p, 0.0);
    for (int i = 1; i < n; ++i) {
        const double y = L[static_cast<size_t>(i) - 1];
        const double k1 = riccati_rhs(p, y);
        const double k2 = riccati_rhs(p, y + 0.5 * dx * k1);
        const double k3 = riccati_rhs(p, y + 0.5 * dx * k2);
        const double k4 = riccati_rhs(p, y + dx * k3);
        const double next = y + dx / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(next) || std::abs(next) > kBlowUpBound)
            throw std::runtime_error("solve_riccati: solution blow-up on the grid");
        L[static_cast<size_t>(i)] = next;
        B[static_cast<size_t>(i)] = riccati_rhs(p, next);
    }
    RiccatiSolution sol;
    sol.Lambda = ForwardCurve(grid, std::move(L));
    sol.B = ForwardCurve(grid, std::move(B));
    sol.kind = classify(p);
    sol.params = p;
    sol.analytic = false;
    const ForwardCurve Lc = sol.Lambda;
    const ForwardCurve Bc = sol.B;
    sol.Lambda_fn = [Lc](double x) { return Lc(x); };
    sol.B_fn = [Bc](double x) { return Bc(x); };
    return sol;
}

RiccatiSolution closed_form_vasicek(double beta, const MaturityGrid& grid) {
    if (beta < 0.0) throw std::invalid_argument("closed_form_vasicek: beta must be >= 0");
    grid.validate();
    RiccatiSolution sol;
    sol.analytic = true;
    if (beta == 0.0) {
        sol.kind = RiccatiKind::ho_lee;
        sol.Lambda_fn = [](double x) { return x; };
        sol.B_fn = [](double) { return 1.0; };
    } else {
        sol.kind = RiccatiKind::vasicek;
        sol.Lambda_fn = [beta](double x) { return -std::expm1(-beta * x) / beta; };
        sol.B_fn = [beta](double x) { return std::exp(-beta * x); };
    }
    sol.params = RiccatiParams{0.0, beta, 1.0};
    sol.Lambda = ForwardCurve::sample(grid, sol.Lambda_fn);
    sol.B = ForwardCurve::sample(grid, sol.B_fn);
    return sol;
}

RiccatiSolution closed_form_cir(double beta, double rho, const MaturityGrid& grid) {
    if (!(rho > 0.0)) throw std::invalid_argument("closed_form_cir: rho must be > 0");
    if (beta < 0.0) throw std::invalid_argument("closed_form_cir: beta must be >= 0");
    grid.validate();
    const double gamma = std::sqrt(beta * beta + 2.0 * rho * rho);
    RiccatiSolution sol;
    sol.analytic = true;
    sol.kind = RiccatiKind::cir;
    sol.params = RiccatiParams{rho * rho, beta, 1.0};
    sol.Lambda_fn = [gamma, beta](double x) {
        const double e = std::expm1(gamma * x);  // e^{gamma x} - 1
        return 2.0 * e / ((gamma + beta) * e + 2.0 * gamma);
    };
    sol.B_fn = [gamma, beta](double x) {
        const double e = std::expm1(gamma * x);
        const double den = (gamma + beta) * e + 2.0 * gamma;
        return 4.0 * gamma * gamma * (e + 1.0) / (den * den);
    };
    sol.Lambda = ForwardCurve::sample(grid, sol.Lambda_fn);
    sol.B = ForwardCurve::sample(grid, sol.B_fn);
    return sol;
}

ForwardCurve a_function(const RiccatiSolution& sol, double b_param, double rho) {
    ForwardCurve A = sol.Lambda;
    A *= b_param;
    if (sol.kind != RiccatiKind::cir)
        A.axpy(-0.5 * rho * rho, hadamard(sol.Lambda, sol.Lambda));
    return A;
}

double riccati_max_residual(const RiccatiSolution& sol) {
    double worst = 0.0;
    for (int i = 0; i < sol.Lambda.size(); ++i) {
        const double L = sol.Lambda.at(i);
        const double r =
            sol.B.at(i) + 0.5 * sol.params.a * L * L + sol.params.b * L - sol.params.lambda0;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace hjmfdr
