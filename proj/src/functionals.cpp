#include "hjmfdr/functionals.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace hjmfdr {

LinearFunctional LinearFunctional::point_eval(double x0) {
    if (x0 < 0.0) throw std::invalid_argument("point_eval: node must be >= 0");
    LinearFunctional l;
    l.kind_ = Kind::point_eval;
    l.nodes_ = {x0};
    l.weights_ = {1.0};
    return l;
}

LinearFunctional LinearFunctional::benchmark_yield(double x0) {
    if (!(x0 > 0.0)) throw std::invalid_argument("benchmark_yield: tenor must be > 0");
    LinearFunctional l;
    l.kind_ = Kind::benchmark_yield;
    l.nodes_ = {x0};
    l.weights_ = {1.0};
    return l;
}

LinearFunctional LinearFunctional::combination(std::vector<double> weights, std::vector<double> nodes) {
    if (weights.size() != nodes.size() || weights.empty())
        throw std::invalid_argument("combination: weights and nodes must be non-empty and equal-length");
    for (double x : nodes)
        if (x < 0.0) throw std::invalid_argument("combination: nodes must be >= 0");
    LinearFunctional l;
    l.kind_ = Kind::combination;
    l.nodes_ = std::move(nodes);
    l.weights_ = std::move(weights);
    return l;
}

double LinearFunctional::operator()(const ForwardCurve& h) const {
    for (double x : nodes_)
        if (x > h.grid().x_max + 1e-12)
            throw DomainError("LinearFunctional: node lies beyond x_max");
    switch (kind_) {
        case Kind::point_eval:
            return h(nodes_[0]);
        case Kind::benchmark_yield:
            return integral(h)(nodes_[0]) / nodes_[0];
        case Kind::combination: {
            double acc = 0.0;
            for (size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * h(nodes_[i]);
            return acc;
        }
    }
    return 0.0;
}

double LinearFunctional::apply_to_exponential(double rate, int k) const {
    // A^k e = (-rate)^k e for e(x) = exp(-rate x)
    const double factor = std::pow(-rate, k);
    switch (kind_) {
        case Kind::point_eval:
            return factor * std::exp(-rate * nodes_[0]);
        case Kind::benchmark_yield:
            return factor * (1.0 - std::exp(-rate * nodes_[0])) / (rate * nodes_[0]);
        case Kind::combination: {
            double acc = 0.0;
            for (size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * std::exp(-rate * nodes_[i]);
            return factor * acc;
        }
    }
    return 0.0;
}

RankReport rank_a3(const std::vector<LinearFunctional>& ells, int q, int probe_dim) {
    const int p = static_cast<int>(ells.size());
    if (probe_dim < p * (q + 1))
        throw std::invalid_argument("rank_a3: probe_dim must be >= p(q+1)");
    std::vector<double> rates(static_cast<size_t>(probe_dim));
    for (int m = 0; m < probe_dim; ++m) rates[static_cast<size_t>(m)] = 0.35 + 0.50 * m;
    return rank_a3(ells, q, rates);
}

RankReport rank_a3(const std::vector<LinearFunctional>& ells, int q,
                   const std::vector<double>& probe_rates) {
    if (ells.empty()) throw std::invalid_argument("rank_a3: need at least one functional");
    if (q < 0) throw std::invalid_argument("rank_a3: q must be >= 0");
    const int p = static_cast<int>(ells.size());
    const int rows = p * (q + 1);
    const int cols = static_cast<int>(probe_rates.size());
    if (cols < rows) throw std::invalid_argument("rank_a3: probe_dim must be >= p(q+1)");
    for (size_t i = 0; i < probe_rates.size(); ++i) {
        if (!(probe_rates[i] > 0.0))
            throw ConditioningError("rank_a3: probe rates must be positive");
        for (size_t j = i + 1; j < probe_rates.size(); ++j)
            if (std::abs(probe_rates[i] - probe_rates[j]) < 1e-12)
                throw ConditioningError("rank_a3: probe basis degenerate (duplicate rates)");
    }

    Eigen::MatrixXd M(rows, cols);
    for (int k = 0; k <= q; ++k)
        for (int j = 0; j < p; ++j)
            for (int m = 0; m < cols; ++m)
                M(k * p + j, m) = ells[static_cast<size_t>(j)].apply_to_exponential(
                    probe_rates[static_cast<size_t>(m)], k);

    // Normalize probe columns so fast-decaying probes do not mask rank.
    for (int m = 0; m < cols; ++m) {
        const double nrm = M.col(m).norm();
        if (nrm < 1e-300) throw ConditioningError("rank_a3: probe basis degenerate (null column)");
        M.col(m) /= nrm;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    RankReport rep;
    rep.expected = rows;
    rep.threshold = std::max(rows, cols) * std::numeric_limits<double>::epsilon() * sv(0);
    for (int i = 0; i < sv.size(); ++i) {
        rep.singular_values.push_back(sv(i));
        if (sv(i) > rep.threshold) ++rep.rank;
    }
    rep.full = (rep.rank == rep.expected);
    return rep;
}

}  // namespace hjmfdr
