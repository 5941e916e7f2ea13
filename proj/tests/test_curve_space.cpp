#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hjmfdr/curve_ops.hpp"
#include "hjmfdr/functionals.hpp"
#include "hjmfdr/grid.hpp"

using namespace hjmfdr;

namespace {
const MaturityGrid kGrid = MaturityGrid::standard();
}

TEST_CASE("standard grid has the documented spacing") {
    CHECK(kGrid.n_points == 601);
    CHECK(kGrid.spacing() == doctest::Approx(0.025).epsilon(1e-12));
    CHECK_THROWS_AS((MaturityGrid{10.0, 5.0, 2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((MaturityGrid{-1.0, 5.0, 601}.validate()), std::invalid_argument);
}

TEST_CASE("deriv: constants, linear exactness, exponential accuracy") {
    const ForwardCurve flat = ForwardCurve::constant(kGrid, 0.03);
    CHECK(deriv(flat).max_abs() == doctest::Approx(0.0).epsilon(1e-14));

    const ForwardCurve lin = ForwardCurve::sample(kGrid, [](double x) { return x; });
    const ForwardCurve dlin = deriv(lin);
    for (int i = 0; i < dlin.size(); ++i) CHECK(dlin.at(i) == doctest::Approx(1.0).epsilon(1e-12));

    const ForwardCurve e = ForwardCurve::sample(kGrid, [](double x) { return std::exp(-0.5 * x); });
    const double expected = -0.5 * std::exp(-0.5 * 1.0);
    const double h = kGrid.spacing();
    CHECK(std::abs(deriv(e)(1.0) - expected) < 2.0 * h * h);
}

TEST_CASE("integral: exact on constants and linears, second order on exp") {
    const ForwardCurve one = ForwardCurve::constant(kGrid, 1.0);
    const ForwardCurve I1 = integral(one);
    for (int i = 0; i < I1.size(); ++i) CHECK(I1.at(i) == doctest::Approx(kGrid.x(i)).epsilon(1e-13));

    const ForwardCurve lin = ForwardCurve::sample(kGrid, [](double x) { return x; });
    const ForwardCurve I2 = integral(lin);
    for (int i = 0; i < I2.size(); ++i)
        CHECK(I2.at(i) == doctest::Approx(0.5 * kGrid.x(i) * kGrid.x(i)).epsilon(1e-12));

    const ForwardCurve e = ForwardCurve::sample(kGrid, [](double x) { return std::exp(-x); });
    const double h = kGrid.spacing();
    CHECK(std::abs(integral(e)(2.0) - (1.0 - std::exp(-2.0))) < h * h);
}

TEST_CASE("deriv∘integral is the identity to O(spacing^2) on smooth curves") {
    const ForwardCurve e = ForwardCurve::sample(kGrid, [](double x) { return std::exp(-0.4 * x) + 0.02 * x; });
    const ForwardCurve back = deriv(integral(e));
    const double h = kGrid.spacing();
    CHECK(sup_distance(e, back) < 2.0 * h * h);
}

TEST_CASE("shift: flats invariant, linears exact, pad enforced") {
    const ForwardCurve flat = ForwardCurve::constant(kGrid, 0.02);
    CHECK(sup_distance(shift(flat, 1.3), flat) == doctest::Approx(0.0));

    const ForwardCurve lin = ForwardCurve::sample(kGrid, [](double x) { return x; });
    const ForwardCurve s = shift(lin, 0.5);
    for (int i = 0; i <= s.reported_end_index(); ++i)
        CHECK(s.at(i) == doctest::Approx(kGrid.x(i) + 0.5).epsilon(1e-12));
    CHECK(s.pad_used() == doctest::Approx(0.5));

    CHECK_THROWS_AS(shift(flat, kGrid.horizon_pad + 0.1), PadExhausted);
    CHECK_THROWS_AS(shift(shift(flat, 3.0), 2.5), PadExhausted);
}

namespace {
double semigroup_gap(const ForwardCurve& h, double s, double t) {
    const ForwardCurve a = shift(shift(h, s), t);
    const ForwardCurve b = shift(h, s + t);
    const int last = static_cast<int>((kGrid.total_length() - (s + t)) / kGrid.spacing()) - 2;
    double worst = 0.0;
    for (int i = 0; i <= last; ++i) worst = std::max(worst, std::abs(a.at(i) - b.at(i)));
    return worst;
}
}  // namespace

TEST_CASE("shift semigroup property") {
    // Node-aligned first leg keeps kinks on nodes: exact for piecewise-linear h.
    const ForwardCurve kink = ForwardCurve::sample(kGrid, [](double x) { return std::abs(x - 5.0); });
    CHECK(semigroup_gap(kink, 0.7, 1.2625) < 1e-12);

    // Fully fractional legs: exact for affine curves ...
    const ForwardCurve lin = ForwardCurve::sample(kGrid, [](double x) { return 0.01 + 0.004 * x; });
    CHECK(semigroup_gap(lin, 0.7125, 1.2625) < 1e-14);

    // ... and O(spacing^2) for smooth ones (repeated interpolation smooths).
    const ForwardCurve smooth = ForwardCurve::sample(kGrid, [](double x) { return std::exp(-0.5 * x); });
    const double h2 = kGrid.spacing() * kGrid.spacing();
    CHECK(semigroup_gap(smooth, 0.7125, 1.2625) < h2);
}

TEST_CASE("norm_w: flat and zero curves, analytic weighted integral") {
    CHECK(norm_w(ForwardCurve::constant(kGrid, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_w(ForwardCurve::zeros(kGrid)) == doctest::Approx(0.0));

    // h(x)=x, w=e^{0.1x} on [0,15]: ||h||^2 = 0 + (e^{1.5}-1)/0.1
    const ForwardCurve lin = ForwardCurve::sample(kGrid, [](double x) { return x; });
    const double expected = std::sqrt((std::exp(0.1 * kGrid.total_length()) - 1.0) / 0.1);
    CHECK(norm_w(lin, WeightFunction::exponential(0.1)) ==
          doctest::Approx(expected).epsilon(1e-4));

    // norm_w >= |h(0)|
    const ForwardCurve mix = ForwardCurve::sample(kGrid, [](double x) { return 0.05 - 0.02 * std::exp(-x); });
    CHECK(norm_w(mix) >= std::abs(mix.short_rate()));
}

TEST_CASE("weight function validation") {
    CHECK_THROWS_AS(WeightFunction::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightFunction::polynomial(2.0), std::invalid_argument);
    const WeightFunction w = WeightFunction::polynomial(3.5);
    CHECK(w(0.0) == doctest::Approx(1.0));
    CHECK(w(2.0) > w(1.0));  // non-decreasing
}

TEST_CASE("apply_functional: benchmark yields and point evaluations") {
    const ForwardCurve flat = ForwardCurve::constant(kGrid, 0.042);
    CHECK(LinearFunctional::benchmark_yield(5.0)(flat) == doctest::Approx(0.042).epsilon(1e-12));
    CHECK(LinearFunctional::point_eval(0.0)(flat) == doctest::Approx(0.042));

    const ForwardCurve lin = ForwardCurve::sample(kGrid, [](double x) { return x; });
    CHECK(LinearFunctional::benchmark_yield(2.0)(lin) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(LinearFunctional::point_eval(12.0)(flat), DomainError);  // beyond x_max
}

TEST_CASE("apply_functional is linear") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const ForwardCurve h = ForwardCurve::sample(kGrid, [](double x) { return 0.03 + 0.01 * std::sin(x); });
    const ForwardCurve g = ForwardCurve::sample(kGrid, [](double x) { return 0.02 * std::exp(-0.3 * x); });
    const std::vector<LinearFunctional> ells = {
        LinearFunctional::point_eval(1.5),
        LinearFunctional::benchmark_yield(4.0),
        LinearFunctional::combination({0.4, -1.1}, {2.0, 7.0}),
    };
    for (int rep = 0; rep < 5; ++rep) {
        const double a = coef(gen), b = coef(gen);
        ForwardCurve combo = h;
        combo *= a;
        combo.axpy(b, g);
        for (const auto& ell : ells)
            CHECK(ell(combo) == doctest::Approx(a * ell(h) + b * ell(g)).epsilon(1e-11));
    }
}

TEST_CASE("rank_A3: short-rate functional is open for q up to 4") {
    const std::vector<LinearFunctional> short_rate = {LinearFunctional::point_eval(0.0)};
    for (int q = 0; q <= 4; ++q) {
        const RankReport rep = rank_a3(short_rate, q, std::max(8, q + 3));
        CHECK(rep.expected == q + 1);
        CHECK(rep.rank == q + 1);
        CHECK(rep.full);
    }
}

TEST_CASE("rank_A3: the degenerate (h(0), h(1), ∫_0^1 h) triple has rank 5 at q=1") {
    // ℓ3(Ah) = h(1) - h(0) = ℓ2(h) - ℓ1(h): one exact dependence.
    const std::vector<LinearFunctional> ells = {
        LinearFunctional::point_eval(0.0),
        LinearFunctional::point_eval(1.0),
        LinearFunctional::benchmark_yield(1.0),
    };
    const RankReport rep = rank_a3(ells, 1, 10);
    CHECK(rep.expected == 6);
    CHECK(rep.rank == 5);
    CHECK_FALSE(rep.full);
}

TEST_CASE("rank_A3: q=0 with independent functionals gives rank p") {
    const std::vector<LinearFunctional> ells = {
        LinearFunctional::point_eval(0.0),
        LinearFunctional::point_eval(2.0),
        LinearFunctional::benchmark_yield(3.0),
    };
    const RankReport rep = rank_a3(ells, 0, 8);
    CHECK(rep.rank == 3);
    CHECK(rep.full);
}

TEST_CASE("rank_A3 rejects degenerate probe sets and bad arguments") {
    const std::vector<LinearFunctional> ells = {LinearFunctional::point_eval(0.0)};
    CHECK_THROWS_AS(rank_a3(ells, 2, 2), std::invalid_argument);           // probe_dim < p(q+1)
    CHECK_THROWS_AS(rank_a3(ells, 1, std::vector<double>{0.5, 0.5, 1.0}), ConditioningError); // duplicate rates
}
