#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hjmfdr/curve_ops.hpp"
#include "hjmfdr/riccati.hpp"

using namespace hjmfdr;

namespace {
const MaturityGrid kGrid = MaturityGrid::standard();
}

TEST_CASE("ho-lee: a=b=0 integrates to Lambda(x)=x") {
    const RiccatiSolution sol = solve_riccati({0.0, 0.0, 1.0}, kGrid);
    CHECK(sol.kind == RiccatiKind::ho_lee);
    for (int i = 0; i < sol.Lambda.size(); ++i)
        CHECK(sol.Lambda.at(i) == doctest::Approx(kGrid.x(i)).epsilon(1e-12));
    for (int i = 0; i < sol.B.size(); ++i) CHECK(sol.B.at(i) == doctest::Approx(1.0));
}

TEST_CASE("vasicek RK4 vs closed form (1-e^{-bx})/b") {
    const RiccatiSolution rk = solve_riccati({0.0, 0.5, 1.0}, kGrid);
    CHECK(rk.kind == RiccatiKind::vasicek);
    CHECK(rk.Lambda(2.0) == doctest::Approx(2.0 * (1.0 - std::exp(-1.0))).epsilon(1e-9));
    CHECK(rk.Lambda(2.0) == doctest::Approx(1.26424).epsilon(1e-5));

    const RiccatiSolution cf = closed_form_vasicek(0.5, kGrid);
    CHECK(sup_distance(rk.Lambda, cf.Lambda) < 1e-8);
    CHECK(sup_distance(rk.B, cf.B) < 1e-8);
}

TEST_CASE("cir RK4 vs closed form, gamma = sqrt(beta^2 + 2 rho^2)") {
    const double rho = 0.1, beta = 0.2;
    const RiccatiSolution rk = solve_riccati({rho * rho, beta, 1.0}, kGrid);  // a = 2 psi = rho^2
    const RiccatiSolution cf = closed_form_cir(beta, rho, kGrid);
    CHECK(rk.kind == RiccatiKind::cir);
    CHECK(sup_distance(rk.Lambda, cf.Lambda) < 1e-8);
    CHECK(sup_distance(rk.B, cf.B) < 1e-8);
}

TEST_CASE("closed forms: Lambda(0)=0, B(0)=1, residual at round-off") {
    const RiccatiSolution vas = closed_form_vasicek(0.5, kGrid);
    CHECK(vas.Lambda.at(0) == 0.0);
    CHECK(vas.B.at(0) == 1.0);
    CHECK(riccati_max_residual(vas) < 1e-10);

    const RiccatiSolution cir = closed_form_cir(0.2, 0.1, kGrid);
    CHECK(cir.Lambda.at(0) == 0.0);
    CHECK(cir.B.at(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(riccati_max_residual(cir) < 1e-10);

    // Riccati identity links the analytic derivative to 1 - b L - (rho^2/2) L^2
    for (int i = 0; i < cir.B.size(); ++i) {
        const double L = cir.Lambda.at(i);
        CHECK(cir.B.at(i) == doctest::Approx(1.0 - 0.2 * L - 0.5 * 0.01 * L * L).epsilon(1e-12));
    }
}

TEST_CASE("vasicek long-end limit 1/beta") {
    const double beta = 0.5;
    const RiccatiSolution cf = closed_form_vasicek(beta, kGrid);
    const double tail = std::exp(-beta * kGrid.x_max) / beta;
    CHECK(std::abs(cf.Lambda(kGrid.x_max) - 1.0 / beta) <= tail * (1.0 + 1e-12));
}

TEST_CASE("cir long-end limit 2/(gamma+beta) and the cir1 reparametrization") {
    const double beta = 0.2, rho = 0.1;
    const double gamma = std::sqrt(beta * beta + 2.0 * rho * rho);
    const RiccatiSolution cf = closed_form_cir(beta, rho, kGrid);

    // x -> infinity limit of the closed form is also the ODE fixed point.
    const double limit = 2.0 / (gamma + beta);
    CHECK(1.0 - beta * limit - 0.5 * rho * rho * limit * limit ==
          doctest::Approx(0.0).epsilon(1e-12));
    const double e = std::expm1(gamma * kGrid.total_length());
    const double tail_gap = std::abs(2.0 * e / ((gamma + beta) * e + 2.0 * gamma) - limit);
    CHECK(std::abs(cf.Lambda.values().back() - limit) <= tail_gap + 1e-12);

    // B matches b e^{ax} / (e^{ax} + c)^2 with a=gamma, c=(gamma-beta)/(gamma+beta),
    // b=4 gamma^2/(gamma+beta)^2; all positive.
    const double a1 = gamma;
    const double c1 = (gamma - beta) / (gamma + beta);
    const double b1 = 4.0 * gamma * gamma / ((gamma + beta) * (gamma + beta));
    CHECK(a1 > 0.0);
    CHECK(b1 > 0.0);
    CHECK(c1 > 0.0);
    for (int i = 0; i < cf.B.size(); i += 40) {
        const double x = kGrid.x(i);
        const double expect = b1 * std::exp(a1 * x) / std::pow(std::exp(a1 * x) + c1, 2);
        CHECK(cf.B.at(i) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("RK4 solutions satisfy the equation: stored-B residual and re-differencing") {
    for (const RiccatiParams p : {RiccatiParams{0.01, 0.2, 1.0}, RiccatiParams{0.0, 0.5, 1.0},
                                  RiccatiParams{0.0, 0.0, 1.0}}) {
        const RiccatiSolution sol = solve_riccati(p, kGrid);
        CHECK(riccati_max_residual(sol) < 1e-6);
        // independent route: difference Lambda numerically and plug into the ODE
        const ForwardCurve D = deriv(sol.Lambda);
        double worst = 0.0;
        for (int i = 0; i < D.size(); ++i) {
            const double L = sol.Lambda.at(i);
            worst = std::max(worst, std::abs(D.at(i) + 0.5 * p.a * L * L + p.b * L - p.lambda0));
        }
        CHECK(worst < 1e-4);  // O(spacing^2) from the difference stencils
    }
}

TEST_CASE("B positive and decreasing for beta > 0") {
    for (const RiccatiSolution& sol :
         {closed_form_vasicek(0.5, kGrid), closed_form_cir(0.2, 0.1, kGrid)}) {
        for (int i = 0; i < sol.B.size(); ++i) CHECK(sol.B.at(i) > 0.0);
        for (int i = 1; i < sol.B.size(); ++i) CHECK(sol.B.at(i) < sol.B.at(i - 1));
    }
}

TEST_CASE("a_function: Vasicek quadratic form, CIR proportional form, A(0)=0") {
    const RiccatiSolution vas = closed_form_vasicek(0.5, kGrid);
    const double rho = 0.02;
    const ForwardCurve A0 = a_function(vas, 0.0, rho);
    for (int i = 0; i < A0.size(); ++i) {
        const double L = vas.Lambda.at(i);
        CHECK(A0.at(i) == doctest::Approx(-0.5 * rho * rho * L * L).epsilon(1e-12));
    }
    CHECK(a_function(vas, 0.03, rho).at(0) == 0.0);

    const RiccatiSolution cir = closed_form_cir(0.2, 0.1, kGrid);
    const ForwardCurve Ac = a_function(cir, 0.03, 0.1);
    for (int i = 1; i < Ac.size(); ++i)
        CHECK(Ac.at(i) / cir.Lambda.at(i) == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(Ac.at(0) == 0.0);
}

TEST_CASE("parameter validation and blow-up guard") {
    CHECK_THROWS_AS(solve_riccati({0.0, 0.0, 0.0}, kGrid), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_vasicek(-0.1, kGrid), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_cir(0.2, 0.0, kGrid), std::invalid_argument);
    CHECK(closed_form_vasicek(0.0, kGrid).kind == RiccatiKind::ho_lee);
    CHECK_THROWS_AS(solve_riccati({-40.0, 0.0, 8.0}, kGrid), std::runtime_error);
}
