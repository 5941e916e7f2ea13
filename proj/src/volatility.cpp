#include "hjmfdr/volatility.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <nlohmann/json.hpp>

namespace hjmfdr {

using nlohmann::json;

double ScalarMap::eval(double z) const {
    switch (kind) {
        case Kind::constant: return c0;
        case Kind::affine: return c0 + c1 * z;
        case Kind::sqrt_scaled:
            if (!(z > 0.0)) throw DomainError("ScalarMap: sqrt argument must be positive");
            return c0 * std::sqrt(z);
    }
    return 0.0;
}

double ScalarMap::deriv(double z) const {
    switch (kind) {
        case Kind::constant: return 0.0;
        case Kind::affine: return c1;
        case Kind::sqrt_scaled:
            if (!(z > 0.0)) throw DomainError("ScalarMap: sqrt argument must be positive");
            return 0.5 * c0 / std::sqrt(z);
    }
    return 0.0;
}

double LocalVolExpr::g(double y) const {
    switch (ypart) {
        case YPart::one: return 1.0;
        case YPart::affine: return 1.0 + c1 * y;
        case YPart::quadratic: return c0 + c1 * y + c2 * y * y;
        case YPart::sqrt_y:
            if (!(y > 0.0)) throw DomainError("LocalVolExpr: sqrt needs positive rate");
            return std::sqrt(y);
    }
    return 0.0;
}

double LocalVolExpr::gp(double y) const {
    switch (ypart) {
        case YPart::one: return 0.0;
        case YPart::affine: return c1;
        case YPart::quadratic: return c1 + 2.0 * c2 * y;
        case YPart::sqrt_y:
            if (!(y > 0.0)) throw DomainError("LocalVolExpr: sqrt needs positive rate");
            return 0.5 / std::sqrt(y);
    }
    return 0.0;
}

double LocalVolExpr::gpp(double y) const {
    switch (ypart) {
        case YPart::one: return 0.0;
        case YPart::affine: return 0.0;
        case YPart::quadratic: return 2.0 * c2;
        case YPart::sqrt_y:
            if (!(y > 0.0)) throw DomainError("LocalVolExpr: sqrt needs positive rate");
            return -0.25 / (y * std::sqrt(y));
    }
    return 0.0;
}

VolatilityStructure VolatilityStructure::constant_direction(std::vector<Factor> factors, bool check_a2) {
    if (factors.empty()) throw std::invalid_argument("VolatilityStructure: need at least one factor");
    VolatilityStructure s;
    s.kind_ = Kind::constant_direction;
    s.grid_ = factors.front().lambda.grid();
    for (const auto& f : factors)
        if (!(f.lambda.grid() == s.grid_))
            throw std::invalid_argument("VolatilityStructure: factor grids differ");
    if (check_a2 && factors.size() > 1) {
        const int n = factors.front().lambda.size();
        Eigen::MatrixXd L(n, static_cast<int>(factors.size()));
        for (int j = 0; j < static_cast<int>(factors.size()); ++j)
            for (int i = 0; i < n; ++i) L(i, j) = factors[static_cast<size_t>(j)].lambda.at(i);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(L);
        const auto& sv = svd.singularValues();
        const double thr = n * std::numeric_limits<double>::epsilon() * sv(0);
        int rank = 0;
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > thr) ++rank;
        if (rank < static_cast<int>(factors.size()))
            throw ConditioningError("VolatilityStructure: direction curves are linearly dependent");
    }
    s.factors_ = std::move(factors);
    return s;
}

VolatilityStructure VolatilityStructure::local(LocalVolExpr expr, const MaturityGrid& grid) {
    VolatilityStructure s;
    s.kind_ = Kind::local;
    s.grid_ = grid;
    s.local_ = expr;
    return s;
}

VolatilityStructure VolatilityStructure::zero(const MaturityGrid& grid) {
    VolatilityStructure s;
    s.kind_ = Kind::zero;
    s.grid_ = grid;
    return s;
}

int VolatilityStructure::dimension() const {
    switch (kind_) {
        case Kind::constant_direction: return static_cast<int>(factors_.size());
        case Kind::local: return 1;
        case Kind::zero: return 0;
    }
    return 0;
}

const LocalVolExpr& VolatilityStructure::local_expr() const {
    if (kind_ != Kind::local) throw std::logic_error("VolatilityStructure: not a local specification");
    return *local_;
}

ForwardCurve VolatilityStructure::eval_factor(int i, const ForwardCurve& h) const {
    if (kind_ == Kind::zero) throw std::logic_error("VolatilityStructure: zero structure has no factors");
    if (kind_ == Kind::local) {
        if (i != 0) throw std::out_of_range("VolatilityStructure: local structure has one factor");
        std::vector<double> v(static_cast<size_t>(h.size()));
        for (int m = 0; m < h.size(); ++m) v[static_cast<size_t>(m)] = local_->phi(grid_.x(m), h.at(m));
        return ForwardCurve(grid_, std::move(v), h.pad_used());
    }
    const auto& f = factors_.at(static_cast<size_t>(i));
    ForwardCurve out = f.lambda;
    out.set_pad_used(std::max(out.pad_used(), h.pad_used()));
    return out *= f.phi.eval(f.ell(h));
}

std::vector<ForwardCurve> VolatilityStructure::eval(const ForwardCurve& h) const {
    std::vector<ForwardCurve> out;
    for (int i = 0; i < dimension(); ++i) out.push_back(eval_factor(i, h));
    return out;
}

bool VolatilityStructure::in_domain(const ForwardCurve& h, double eps) const {
    // Floored curves sit exactly on the eps boundary, so the comparison is
    // inclusive; positivity of sqrt arguments is still guaranteed for eps > 0.
    const auto ok = [eps](double z) { return z > 0.0 && z >= eps; };
    if (!h.all_finite()) return false;
    if (kind_ == Kind::local && local_->requires_positive_y()) {
        for (double v : h.values())
            if (!ok(v)) return false;
        return true;
    }
    if (kind_ == Kind::constant_direction) {
        for (const auto& f : factors_)
            if (f.phi.needs_positive_argument() && !ok(f.ell(h))) return false;
    }
    return true;
}

ForwardCurve VolatilityStructure::dsigma(int i, const ForwardCurve& h, const ForwardCurve& v) const {
    if (kind_ == Kind::zero) throw std::logic_error("VolatilityStructure: zero structure has no factors");
    if (kind_ == Kind::local) {
        // (D sigma(h) v)(x) = phi'(x, h(x)) v(x)
        std::vector<double> out(static_cast<size_t>(h.size()));
        for (int m = 0; m < h.size(); ++m)
            out[static_cast<size_t>(m)] = local_->dyphi(grid_.x(m), h.at(m)) * v.at(m);
        return ForwardCurve(grid_, std::move(out), std::max(h.pad_used(), v.pad_used()));
    }
    const auto& f = factors_.at(static_cast<size_t>(i));
    ForwardCurve out = f.lambda;
    out.set_pad_used(std::max({out.pad_used(), h.pad_used(), v.pad_used()}));
    return out *= f.phi.deriv(f.ell(h)) * f.ell(v);
}

namespace {

json scalar_map_to_json(const ScalarMap& m) {
    switch (m.kind) {
        case ScalarMap::Kind::constant: return {{"kind", "constant"}, {"c", m.c0}};
        case ScalarMap::Kind::affine: return {{"kind", "affine"}, {"c0", m.c0}, {"c1", m.c1}};
        case ScalarMap::Kind::sqrt_scaled: return {{"kind", "sqrt"}, {"c", m.c0}};
    }
    return {};
}

ScalarMap scalar_map_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") return ScalarMap::constant(j.at("c").get<double>());
    if (kind == "affine") return ScalarMap::affine(j.at("c0").get<double>(), j.at("c1").get<double>());
    if (kind == "sqrt") return ScalarMap::sqrt_scaled(j.at("c").get<double>());
    throw ParseError("volatility json: unknown scalar map kind '" + kind + "'");
}

json functional_to_json(const LinearFunctional& l) {
    switch (l.kind()) {
        case LinearFunctional::Kind::point_eval:
            return {{"kind", "point_eval"}, {"x", l.nodes()[0]}};
        case LinearFunctional::Kind::benchmark_yield:
            return {{"kind", "benchmark_yield"}, {"x", l.nodes()[0]}};
        case LinearFunctional::Kind::combination:
            return {{"kind", "combination"}, {"weights", l.weights()}, {"nodes", l.nodes()}};
    }
    return {};
}

LinearFunctional functional_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "point_eval") return LinearFunctional::point_eval(j.at("x").get<double>());
    if (kind == "benchmark_yield") return LinearFunctional::benchmark_yield(j.at("x").get<double>());
    if (kind == "combination")
        return LinearFunctional::combination(j.at("weights").get<std::vector<double>>(),
                                             j.at("nodes").get<std::vector<double>>());
    throw ParseError("volatility json: unknown functional kind '" + kind + "'");
}

const char* ypart_name(LocalVolExpr::YPart p) {
    switch (p) {
        case LocalVolExpr::YPart::one: return "one";
        case LocalVolExpr::YPart::affine: return "affine";
        case LocalVolExpr::YPart::quadratic: return "quadratic";
        case LocalVolExpr::YPart::sqrt_y: return "sqrt";
    }
    return "one";
}

LocalVolExpr::YPart ypart_from_name(const std::string& s) {
    if (s == "one") return LocalVolExpr::YPart::one;
    if (s == "affine") return LocalVolExpr::YPart::affine;
    if (s == "quadratic") return LocalVolExpr::YPart::quadratic;
    if (s == "sqrt") return LocalVolExpr::YPart::sqrt_y;
    throw ParseError("volatility json: unknown local y-part '" + s + "'");
}

// Direction curves on the JSON surface: "exp_decay" is scale*exp(-rate x),
// "samples" a raw node vector. Serialization always emits samples.
json lambda_to_json(const ForwardCurve& lambda) {
    return {{"form", "samples"}, {"values", lambda.values()}};
}

}  // namespace

std::string VolatilityStructure::to_json() const {
    json j;
    switch (kind_) {
        case Kind::zero:
            j["kind"] = "zero";
            break;
        case Kind::local: {
            j["kind"] = "local";
            j["rho"] = local_->rho;
            j["beta"] = local_->beta;
            j["y"] = {{"part", ypart_name(local_->ypart)},
                      {"c0", local_->c0},
                      {"c1", local_->c1},
                      {"c2", local_->c2}};
            break;
        }
        case Kind::constant_direction: {
            j["kind"] = "constant_direction";
            json arr = json::array();
            for (const auto& f : factors_)
                arr.push_back({{"phi", scalar_map_to_json(f.phi)},
                               {"ell", functional_to_json(f.ell)},
                               {"lambda", lambda_to_json(f.lambda)}});
            j["factors"] = arr;
            break;
        }
    }
    return j.dump();
}

VolatilityStructure VolatilityStructure::from_json(const std::string& text, const MaturityGrid& grid) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("volatility json: ") + e.what());
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") return VolatilityStructure::zero(grid);
    if (kind == "local") {
        LocalVolExpr e;
        e.rho = j.at("rho").get<double>();
        e.beta = j.at("beta").get<double>();
        const auto& y = j.at("y");
        e.ypart = ypart_from_name(y.at("part").get<std::string>());
        e.c0 = y.value("c0", 1.0);
        e.c1 = y.value("c1", 0.0);
        e.c2 = y.value("c2", 0.0);
        return VolatilityStructure::local(e, grid);
    }
    if (kind == "constant_direction" || kind == "functional") {
        std::vector<Factor> factors;
        for (const auto& fj : j.at("factors")) {
            Factor f{scalar_map_from_json(fj.at("phi")),
                     fj.contains("ell") ? functional_from_json(fj.at("ell"))
                                        : LinearFunctional::point_eval(0.0),
                     ForwardCurve::zeros(grid)};
            const auto& lj = fj.at("lambda");
            const std::string form = lj.at("form").get<std::string>();
            if (form == "exp_decay") {
                const double scale = lj.value("scale", 1.0);
                const double rate = lj.at("rate").get<double>();
                f.lambda = ForwardCurve::sample(grid, [=](double x) { return scale * std::exp(-rate * x); });
            } else if (form == "samples") {
                f.lambda = ForwardCurve(grid, lj.at("values").get<std::vector<double>>());
            } else {
                throw ParseError("volatility json: unknown lambda form '" + form + "'");
            }
            factors.push_back(std::move(f));
        }
        return VolatilityStructure::constant_direction(std::move(factors));
    }
    throw ParseError("volatility json: unknown kind '" + kind + "'");
}

}  // namespace hjmfdr
