#include "fractoep/specialfn.hpp"

#include <cmath>
#include <string>

#include "fractoep/errors.hpp"

namespace fractoep {

namespace {

bool is_pole(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
    if (is_pole(x)) throw PoleError("gamma: pole at " + std::to_string(x));
    return std::tgamma(x);
}

double rgamma(double x) {
    if (is_pole(x)) return 0.0;
    return 1.0 / gamma(x);
}

BinomSeq binom_coeffs(double alpha, int count) {
    if (count < 1) throw DomainError("binom_coeffs: count must be >= 1");
    BinomSeq seq;
    seq.alpha = alpha;
    seq.coeffs.resize(static_cast<std::size_t>(count));
    seq.coeffs[0] = 1.0;
    for (int u = 0; u + 1 < count; ++u)
        seq.coeffs[u + 1] = seq.coeffs[u] * (alpha + u) / (u + 1);
    return seq;
}

}  // namespace fractoep
