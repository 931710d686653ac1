#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fractoep {

// A test function on the real line plus whatever closed forms are known for it.
//
// Registry ids:
//   const:c            constant c
//   poly:c0,c1,...     c0 + c1 t + ...
//   pow:beta           t^beta for t > 0, 0 for t <= 0
//   bridge             t (1 - t)
//   bump:center,width  max(0, 1 - ((t - center)/width)^2)^2, C^1
//   tri:center,width   max(0, 1 - |t - center|/width)
//   sinpi              sin(pi t)
class FunctionSpec {
public:
    enum class Kind { polynomial, power, bump, tri, sinpi, custom };

    static FunctionSpec parse(const std::string& id);
    static FunctionSpec polynomial(std::vector<double> coeffs, std::string id = "");
    static FunctionSpec power(double beta);
    static FunctionSpec bump(double center, double width);
    static FunctionSpec tri(double center, double width);
    static FunctionSpec sinpi();
    static FunctionSpec custom(std::function<double(double)> fn, std::string id = "custom");

    Kind kind() const { return kind_; }
    const std::string& id() const { return id_; }
    const std::vector<double>& params() const { return params_; }

    double operator()(double t) const;

    // n-th derivative where known (polynomial, power, sinpi).
    std::optional<FunctionSpec> derivative(int n) const;

    // Power-rule closed forms of the lower fractional derivative and integral
    // on [0, x], with the 2^alpha scale of this library: polynomial and power only.
    std::optional<double> dalpha_exact(double alpha, double x) const;
    std::optional<double> jalpha_exact(double alpha, double x) const;

    // Compact-support functions report [lo, hi]; pow reports [0, inf).
    std::optional<double> support_lo() const { return support_lo_; }
    std::optional<double> support_hi() const { return support_hi_; }
    FunctionSpec& set_support(std::optional<double> lo, std::optional<double> hi);

    // Points where f or f' is not smooth; quadrature splits there.
    const std::vector<double>& breakpoints() const { return breaks_; }
    FunctionSpec& set_breakpoints(std::vector<double> b);

    // Class hypotheses, carried as metadata.
    bool locally_contractive = true;
    bool in_l1_class = true;

private:
    Kind kind_ = Kind::custom;
    std::string id_;
    std::vector<double> params_;
    std::function<double(double)> fn_;
    std::optional<double> support_lo_, support_hi_;
    std::vector<double> breaks_;
};

// a f + b g, pointwise.
FunctionSpec linear_combination(double a, const FunctionSpec& f, double b, const FunctionSpec& g);

}  // namespace fractoep
