#include "fractoep/functions.hpp"

#include <cmath>
#include <sstream>

#include "fractoep/errors.hpp"
#include "fractoep/specialfn.hpp"

namespace fractoep {

namespace {

std::vector<double> parse_list(const std::string& s, const std::string& id) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw DomainError("function id '" + id + "': cannot parse number '" + item + "'");
        }
        if (used != item.size() || !std::isfinite(v))
            throw DomainError("function id '" + id + "': cannot parse number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// c 2^a Gamma(b+1)/Gamma(b+1-a) x^(b-a)
double power_d(double c, double beta, double alpha, double x) {
    return c * std::pow(2.0, alpha) * gamma(beta + 1.0) * rgamma(beta + 1.0 - alpha) * std::pow(x, beta - alpha);
}

// c 2^-a Gamma(b+1)/Gamma(b+1+a) x^(b+a)
double power_j(double c, double beta, double alpha, double x) {
    return c * std::pow(2.0, -alpha) * gamma(beta + 1.0) / gamma(beta + 1.0 + alpha) * std::pow(x, beta + alpha);
}

}  // namespace

FunctionSpec FunctionSpec::parse(const std::string& id) {
    const auto colon = id.find(':');
    const std::string head = id.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : id.substr(colon + 1);
    const bool has_args = colon != std::string::npos;
    auto args = [&](std::size_t n) {
        auto v = parse_list(rest, id);
        if (v.size() != n) throw DomainError("function id '" + id + "': expected " + std::to_string(n) + " parameter(s)");
        return v;
    };
    if (head == "const") {
        auto fs = polynomial(args(1), id);
        return fs;
    }
    if (head == "poly") {
        if (!has_args || rest.empty()) throw DomainError("function id '" + id + "': no coefficients");
        return polynomial(parse_list(rest, id), id);
    }
    if (head == "pow") return power(args(1)[0]);
    if (head == "bridge" && !has_args) return polynomial({0.0, 1.0, -1.0}, "bridge");
    if (head == "t" && !has_args) return polynomial({0.0, 1.0}, "t");
    if (head == "bump") {
        auto v = args(2);
        return bump(v[0], v[1]);
    }
    if (head == "tri") {
        auto v = args(2);
        return tri(v[0], v[1]);
    }
    if (head == "sinpi" && !has_args) return sinpi();
    throw DomainError("unknown function id '" + id + "'");
}

FunctionSpec FunctionSpec::polynomial(std::vector<double> coeffs, std::string id) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    FunctionSpec f;
    f.kind_ = Kind::polynomial;
    if (id.empty()) {
        id = "poly:";
        for (std::size_t i = 0; i < coeffs.size(); ++i) id += (i ? "," : "") + fmt(coeffs[i]);
    }
    f.id_ = std::move(id);
    f.params_ = coeffs;
    f.fn_ = [c = std::move(coeffs)](double t) {
        double s = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i];
        return s;
    };
    return f;
}

FunctionSpec FunctionSpec::power(double beta) {
    if (!(beta > -1.0)) throw DomainError("pow: exponent must exceed -1");
    FunctionSpec f;
    f.kind_ = Kind::power;
    f.id_ = "pow:" + fmt(beta);
    f.params_ = {beta, 1.0};
    f.fn_ = [beta](double t) { return t > 0.0 ? std::pow(t, beta) : (beta == 0.0 ? 1.0 : 0.0); };
    f.support_lo_ = 0.0;
    f.breaks_ = {0.0};
    f.in_l1_class = beta > -1.0;
    return f;
}

FunctionSpec FunctionSpec::bump(double center, double width) {
    if (!(width > 0.0)) throw DomainError("bump: width must be positive");
    FunctionSpec f;
    f.kind_ = Kind::bump;
    f.id_ = "bump:" + fmt(center) + "," + fmt(width);
    f.params_ = {center, width};
    f.fn_ = [center, width](double t) {
        const double s = (t - center) / width;
        const double v = 1.0 - s * s;
        return v > 0.0 ? v * v : 0.0;
    };
    f.support_lo_ = center - width;
    f.support_hi_ = center + width;
    f.breaks_ = {center - width, center + width};
    return f;
}

FunctionSpec FunctionSpec::tri(double center, double width) {
    if (!(width > 0.0)) throw DomainError("tri: width must be positive");
    FunctionSpec f;
    f.kind_ = Kind::tri;
    f.id_ = "tri:" + fmt(center) + "," + fmt(width);
    f.params_ = {center, width};
    f.fn_ = [center, width](double t) { return std::max(0.0, 1.0 - std::abs(t - center) / width); };
    f.support_lo_ = center - width;
    f.support_hi_ = center + width;
    f.breaks_ = {center - width, center, center + width};
    return f;
}

FunctionSpec FunctionSpec::sinpi() {
    FunctionSpec f;
    f.kind_ = Kind::sinpi;
    f.id_ = "sinpi";
    f.params_ = {1.0, 0.0};  // amplitude, phase
    f.fn_ = [](double t) { return std::sin(M_PI * t); };
    return f;
}

FunctionSpec FunctionSpec::custom(std::function<double(double)> fn, std::string id) {
    FunctionSpec f;
    f.kind_ = Kind::custom;
    f.id_ = std::move(id);
    f.fn_ = std::move(fn);
    return f;
}

FunctionSpec& FunctionSpec::set_support(std::optional<double> lo, std::optional<double> hi) {
    support_lo_ = lo;
    support_hi_ = hi;
    return *this;
}

FunctionSpec& FunctionSpec::set_breakpoints(std::vector<double> b) {
    breaks_ = std::move(b);
    return *this;
}

double FunctionSpec::operator()(double t) const { return fn_(t); }

std::optional<FunctionSpec> FunctionSpec::derivative(int n) const {
    if (n < 0) throw DomainError("derivative: order must be >= 0");
    if (n == 0) return *this;
    switch (kind_) {
        case Kind::polynomial: {
            std::vector<double> c = params_;
            for (int k = 0; k < n; ++k) {
                if (c.size() <= 1) {
                    c = {0.0};
                    break;
                }
                std::vector<double> d(c.size() - 1);
                for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
                c = std::move(d);
            }
            return polynomial(std::move(c));
        }
        case Kind::power: {
            double beta = params_[0], scale = params_[1];
            for (int k = 0; k < n; ++k) {
                scale *= beta;
                beta -= 1.0;
            }
            if (scale == 0.0) return polynomial({0.0});
            FunctionSpec f;
            f.kind_ = Kind::power;
            f.id_ = id_ + "'" + std::to_string(n);
            f.params_ = {beta, scale};
            f.fn_ = [beta, scale](double t) { return t > 0.0 ? scale * std::pow(t, beta) : 0.0; };
            f.support_lo_ = 0.0;
            f.breaks_ = {0.0};
            f.in_l1_class = beta > -1.0;
            return f;
        }
        case Kind::sinpi: {
            const double amp = params_[0] * std::pow(M_PI, n);
            const double phase = params_[1] + n * M_PI / 2.0;
            FunctionSpec f;
            f.kind_ = Kind::sinpi;
            f.id_ = "sinpi'" + std::to_string(n);
            f.params_ = {amp, phase};
            f.fn_ = [amp, phase](double t) { return amp * std::sin(M_PI * t + phase); };
            return f;
        }
        default:
            return std::nullopt;
    }
}

std::optional<double> FunctionSpec::dalpha_exact(double alpha, double x) const {
    if (kind_ == Kind::polynomial) {
        double s = 0.0;
        for (std::size_t i = 0; i < params_.size(); ++i)
            if (params_[i] != 0.0) s += power_d(params_[i], static_cast<double>(i), alpha, x);
        return s;
    }
    if (kind_ == Kind::power) return power_d(params_[1], params_[0], alpha, x);
    return std::nullopt;
}

std::optional<double> FunctionSpec::jalpha_exact(double alpha, double x) const {
    if (kind_ == Kind::polynomial) {
        double s = 0.0;
        for (std::size_t i = 0; i < params_.size(); ++i)
            if (params_[i] != 0.0) s += power_j(params_[i], static_cast<double>(i), alpha, x);
        return s;
    }
    if (kind_ == Kind::power) return power_j(params_[1], params_[0], alpha, x);
    return std::nullopt;
}

FunctionSpec linear_combination(double a, const FunctionSpec& f, double b, const FunctionSpec& g) {
    auto h = FunctionSpec::custom([a, b, f, g](double t) { return a * f(t) + b * g(t); },
                                  fmt(a) + "*" + f.id() + "+" + fmt(b) + "*" + g.id());
    std::vector<double> br = f.breakpoints();
    br.insert(br.end(), g.breakpoints().begin(), g.breakpoints().end());
    h.set_breakpoints(std::move(br));
    if (f.support_lo() && g.support_lo()) h.set_support(std::min(*f.support_lo(), *g.support_lo()), std::nullopt);
    return h;
}

}  // namespace fractoep
