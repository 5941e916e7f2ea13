#include "hjmfdr/hjm.hpp"

#include <cmath>

namespace hjmfdr {

ForwardCurve alpha_hjm(const VolatilityStructure& sigma, const ForwardCurve& h, double eps_domain) {
    if (sigma.dimension() == 0) return ForwardCurve::zeros(h.grid());
    if (!sigma.in_domain(h, eps_domain))
        throw DomainError("alpha_hjm: curve outside the model domain");
    ForwardCurve acc = ForwardCurve::zeros(h.grid());
    acc.set_pad_used(h.pad_used());
    for (int i = 0; i < sigma.dimension(); ++i) {
        const ForwardCurve s = sigma.eval_factor(i, h);
        acc += hadamard(s, integral(s));
    }
    return acc;
}

ForwardCurve frechet(const CurveMap& F, const ForwardCurve& h, const ForwardCurve& v,
                     const FrechetStep& step, const DomainPredicate& in_domain) {
    step.validate();
    const double nh = norm_w(h);
    const double nv = norm_w(v);
    if (nv == 0.0) return ForwardCurve::zeros(h.grid());
    double delta = step.eps_fd * std::max(1.0, nh) / std::max(1.0, nv);
    for (int attempt = 0; attempt <= 3; ++attempt) {
        ForwardCurve up = h;
        up.axpy(delta, v);
        ForwardCurve dn = h;
        dn.axpy(-delta, v);
        if (!in_domain || (in_domain(up) && in_domain(dn))) {
            ForwardCurve out = F(up);
            out -= F(dn);
            return out *= 1.0 / (2.0 * delta);
        }
        delta /= 10.0;
    }
    throw DomainError("frechet: perturbed curves leave the domain even after shrinking the step");
}

ForwardCurve mu_field(const VolatilityStructure& sigma, const ForwardCurve& h,
                      const FrechetStep& step, double eps_domain) {
    ForwardCurve out = nu_field(sigma, h, eps_domain);
    const DomainPredicate dom = [&](const ForwardCurve& c) { return sigma.in_domain(c, eps_domain); };
    for (int i = 0; i < sigma.dimension(); ++i) {
        const ForwardCurve si = sigma.eval_factor(i, h);
        const CurveMap Fi = [&sigma, i](const ForwardCurve& c) { return sigma.eval_factor(i, c); };
        out.axpy(-0.5, frechet(Fi, h, si, step, dom));
    }
    return out;
}

ForwardCurve nu_field(const VolatilityStructure& sigma, const ForwardCurve& h, double eps_domain) {
    ForwardCurve out = deriv(h);
    out += alpha_hjm(sigma, h, eps_domain);
    return out;
}

StepResult euler_mild_step(const VolatilityStructure& sigma, const ForwardCurve& h,
                           std::span<const double> dW, const HjmConfig& cfg) {
    cfg.validate();
    if (static_cast<int>(dW.size()) != sigma.dimension())
        throw std::invalid_argument("euler_mild_step: one Brownian increment per factor required");
    ForwardCurve u = h;
    if (sigma.dimension() > 0) {
        u.axpy(cfg.time_step, alpha_hjm(sigma, h, cfg.epsilon));
        for (int i = 0; i < sigma.dimension(); ++i) u.axpy(dW[i], sigma.eval_factor(i, h));
    }
    StepResult res{shift(u, cfg.time_step), false};
    // Full truncation at the domain floor: clamp the short rate first and
    // fall back to a pointwise clamp for pointwise domains.
    if (sigma.dimension() > 0 && !sigma.in_domain(res.curve, cfg.epsilon)) {
        res.floored = true;
        auto& vals = res.curve.mutable_values();
        if (vals[0] < cfg.epsilon) vals[0] = cfg.epsilon;
        if (!sigma.in_domain(res.curve, cfg.epsilon))
            for (double& v : vals)
                if (v < cfg.epsilon) v = cfg.epsilon;
    }
    return res;
}

namespace {

ForwardCurve reaction_term(FlowField field, const VolatilityStructure& sigma,
                           const ForwardCurve& u, double eps) {
    ForwardCurve g = alpha_hjm(sigma, u, eps);
    if (field == FlowField::mu) {
        for (int i = 0; i < sigma.dimension(); ++i)
            g.axpy(-0.5, sigma.dsigma(i, u, sigma.eval_factor(i, u)));
    }
    return g;
}

}  // namespace

FlowResult flow(FlowField field, const VolatilityStructure& sigma, const ForwardCurve& r_star,
                double t, const HjmConfig& cfg,
                const std::function<void(int, double, const ForwardCurve&)>& observer) {
    cfg.validate();
    if (t < 0.0) throw std::invalid_argument("flow: t must be >= 0");
    if (t > r_star.pad_remaining() + 1e-9)
        throw PadExhausted("flow: horizon exceeds the remaining pad");

    FlowResult res{r_star, false, 0.0};
    if (observer) observer(0, 0.0, res.curve);
    if (t == 0.0) return res;

    const int n_steps = static_cast<int>(std::ceil(t / cfg.time_step - 1e-12));
    double reached = 0.0;
    for (int k = 0; k < n_steps; ++k) {
        const double dt = std::min(cfg.time_step, t - reached);
        const ForwardCurve& u = res.curve;
        if (sigma.dimension() > 0 && !sigma.in_domain(u, cfg.epsilon)) {
            res.domain_exit = true;
            res.t_reached = reached;
            return res;
        }
        try {
            const ForwardCurve k1 = reaction_term(field, sigma, u, cfg.epsilon);

            ForwardCurve a2 = u;
            a2.axpy(0.5 * dt, k1);
            const ForwardCurve k2 = reaction_term(field, sigma, shift(a2, 0.5 * dt), cfg.epsilon);

            ForwardCurve a3 = shift(u, 0.5 * dt);
            a3.axpy(0.5 * dt, k2);
            const ForwardCurve k3 = reaction_term(field, sigma, a3, cfg.epsilon);

            ForwardCurve a4 = shift(u, dt);
            a4.axpy(dt, shift(k3, 0.5 * dt));
            const ForwardCurve k4 = reaction_term(field, sigma, a4, cfg.epsilon);

            ForwardCurve next = shift(u, dt);
            next.axpy(dt / 6.0, shift(k1, dt));
            ForwardCurve mid = k2;
            mid += k3;
            next.axpy(dt / 3.0, shift(mid, 0.5 * dt));
            next.axpy(dt / 6.0, k4);
            res.curve = std::move(next);
        } catch (const DomainError&) {
            res.domain_exit = true;
            res.t_reached = reached;
            return res;
        }
        reached += dt;
        if (observer) observer(k + 1, reached, res.curve);
    }
    res.t_reached = reached;
    return res;
}

}  // namespace hjmfdr
