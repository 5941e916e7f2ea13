#pragma once

#include <vector>

#include "hjmfdr/curve_ops.hpp"
#include "hjmfdr/grid.hpp"

namespace hjmfdr {

// Continuous linear functional on the curve space: a point evaluation
// h(x0), a benchmark yield (1/x0)∫_0^{x0} h, or a finite combination of
// point evaluations. All nodes must lie on the reported range [0, x_max].
class LinearFunctional {
  public:
    enum class Kind { point_eval, benchmark_yield, combination };

    static LinearFunctional point_eval(double x0);
    static LinearFunctional benchmark_yield(double x0);
    static LinearFunctional combination(std::vector<double> weights, std::vector<double> nodes);

    Kind kind() const { return kind_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    double operator()(const ForwardCurve& h) const;

    // ℓ(A^k e) for the probe curve e(x) = exp(-rate x), in closed form.
    // Keeps the rank diagnostic free of discretization error so that exact
    // functional dependencies show up as exact rank deficiencies.
    double apply_to_exponential(double rate, int k) const;

  private:
    Kind kind_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct RankReport {
    int rank = 0;
    int expected = 0;           // p(q+1)
    bool full = false;          // rank == expected
    double threshold = 0.0;
    std::vector<double> singular_values;
};

// Numerical rank of the interpolation map (ℓ, ℓ∘A, ..., ℓ∘A^q) probed on a
// family of decaying exponentials with distinct rates. SVD rank with
// threshold max_dim * machine_eps * sigma_max.
RankReport rank_a3(const std::vector<LinearFunctional>& ells, int q, int probe_dim);
RankReport rank_a3(const std::vector<LinearFunctional>& ells, int q,
                   const std::vector<double>& probe_rates);

}  // namespace hjmfdr
