#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uep/codespec.hpp"

namespace uep {

// Cascaded binary symmetric channel stages with crossover probabilities
// alpha_i, carrying blocks of n channel uses.
struct ChannelParams {
    std::vector<double> alphas;
    std::int64_t n;

    int k() const { return static_cast<int>(alphas.size()); }

    void validate() const {
        if (alphas.empty()) throw SpecError("channel needs at least one stage");
        if (n < 1) throw SpecError("block length must be >= 1");
        for (double a : alphas)
            if (!(a >= 0.0 && a <= 1.0))
                throw SpecError("crossover probability must lie in [0,1]");
    }
};

struct ThroughputReport {
    std::vector<double> p;       // end-to-end bit error probability per stage
    std::vector<double> theta;   // block success probability per receiver
    std::vector<double> r;       // effective rate theta_i / n
    double r_total;              // sum of effective rates
};

// p_i = p_{i-1}(1 - alpha_i) + (1 - p_{i-1}) alpha_i, starting from p_0 = 0.
inline std::vector<double> cascade_error_probs(const ChannelParams& params) {
    params.validate();
    std::vector<double> p(params.alphas.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < params.alphas.size(); ++i) {
        const double a = params.alphas[i];
        prev = prev * (1.0 - a) + (1.0 - prev) * a;
        p[i] = prev;
    }
    return p;
}

namespace detail {

// Binomial tail sum_{j=0}^{radius} C(n,j) (1-p)^{n-j} p^j. Exact integer
// binomials up to n = 1000, log-space beyond.
inline double binomial_tail(std::int64_t n, std::int64_t radius, double p) {
    if (radius >= n) radius = n;
    if (p <= 0.0) return 1.0;
    double acc = 0.0;
    if (n <= 1000) {
        boost::multiprecision::cpp_int coeff = 1;
        for (std::int64_t j = 0; j <= radius; ++j) {
            if (j > 0) {
                coeff *= (n - j + 1);
                coeff /= j;
            }
            acc += static_cast<double>(coeff) *
                   std::pow(1.0 - p, static_cast<double>(n - j)) *
                   std::pow(p, static_cast<double>(j));
        }
    } else {
        for (std::int64_t j = 0; j <= radius; ++j) {
            const double logc = std::lgamma(double(n + 1)) - std::lgamma(double(j + 1)) -
                                std::lgamma(double(n - j + 1));
            const double logterm = logc + double(n - j) * std::log1p(-p) +
                                   double(j) * std::log(p);
            acc += std::exp(logterm);
        }
    }
    return std::min(acc, 1.0);
}

} // namespace detail

// Success probability per receiver under bounded-distance decoding. The
// default radii i = 1..k match the s = (3, 5, ..., 2k+1) regime; a custom
// radius vector covers general separation vectors via floor((s_i - 1) / 2).
inline std::vector<double> success_rates(const ChannelParams& params,
                                         const std::vector<double>& p,
                                         const std::vector<std::int64_t>* radii = nullptr) {
    params.validate();
    if (p.size() != params.alphas.size())
        throw SpecError("error probability vector length mismatch");
    std::vector<double> theta(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::int64_t radius =
            radii ? (*radii)[i] : static_cast<std::int64_t>(i) + 1;
        theta[i] = detail::binomial_tail(params.n, radius, p[i]);
    }
    return theta;
}

inline ThroughputReport throughput(const ChannelParams& params,
                                   const std::vector<std::int64_t>* radii = nullptr) {
    ThroughputReport rep;
    rep.p = cascade_error_probs(params);
    rep.theta = success_rates(params, rep.p, radii);
    rep.r.resize(rep.theta.size());
    rep.r_total = 0.0;
    for (std::size_t i = 0; i < rep.theta.size(); ++i) {
        rep.r[i] = rep.theta[i] / static_cast<double>(params.n);
        rep.r_total += rep.r[i];
    }
    const double cap = static_cast<double>(params.k()) / static_cast<double>(params.n);
    if (rep.r_total > cap + 1e-9)
        throw SpecError("throughput exceeded k/n; numerical model violated");
    return rep;
}

} // namespace uep
