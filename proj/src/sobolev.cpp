#include "mssolve/sobolev.hpp"

#include <cmath>

namespace mss {

double h_norm(const PeriodicField& f, double s) {
    double sum = 0.0;
    for (int k = -f.cutoff(); k <= f.cutoff(); ++k) {
        double w = std::pow(1.0 + static_cast<double>(k) * k, s);
        sum += w * std::norm(f.coeff(k));
    }
    return std::sqrt(sum);
}

double oracle_h_norm(const PeriodicField& f, double s) {
    long double sum = 0.0L;
    for (int k = -f.cutoff(); k <= f.cutoff(); ++k) {
        long double kk = static_cast<long double>(k);
        long double w = powl(1.0L + kk * kk, static_cast<long double>(s));
        long double re = static_cast<long double>(f.coeff(k).real());
        long double im = static_cast<long double>(f.coeff(k).imag());
        sum += w * (re * re + im * im);
    }
    return static_cast<double>(sqrtl(sum));
}

namespace {

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    double sum = 0.0;
    for (size_t i = 1; i < t.size(); ++i)
        sum += 0.5 * (t[i] - t[i - 1]) * (y[i] + y[i - 1]);
    return sum;
}

} // namespace

double xt_norm(const Trajectory& traj) {
    if (traj.size() < 2)
        throw InsufficientTimeSamples("xt_norm needs at least two time nodes");
    int n = traj.size();
    Trajectory dh = traj.timeDerivative();

    std::vector<double> l2_72(static_cast<size_t>(n)), h1_12(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double a = h_norm(traj.node(i), 3.5);
        l2_72[static_cast<size_t>(i)] = a * a;
        double b = h_norm(traj.node(i), 0.5);
        double c = h_norm(dh.node(i), 0.5);
        h1_12[static_cast<size_t>(i)] = b * b + c * c;
    }
    double part1 = std::sqrt(trapezoid(traj.times(), l2_72));
    double part2 = std::sqrt(trapezoid(traj.times(), h1_12));
    double part3 = h_norm(traj.node(0), 2.0);
    return part1 + part2 + part3;
}

double time_lp_norm(const Trajectory& traj, double s, double p) {
    if (traj.size() < 2)
        throw InsufficientTimeSamples("time_lp_norm needs at least two time nodes");
    std::vector<double> y(static_cast<size_t>(traj.size()));
    for (int i = 0; i < traj.size(); ++i)
        y[static_cast<size_t>(i)] = std::pow(h_norm(traj.node(i), s), p);
    return std::pow(trapezoid(traj.times(), y), 1.0 / p);
}

PeriodicField project(const PeriodicField& f, int newCutoff) {
    if (newCutoff > f.cutoff())
        throw ValidationError("project: target cutoff exceeds field cutoff");
    return f.truncated(newCutoff);
}

double interpolation_eta(double eps, double lo, double mid, double hi, int cutoff) {
    // Per-mode weights are (1+k^2)^{s/2}; a per-mode bound extends to the
    // full norm inequality by the triangle inequality.
    double eta = 0.0;
    for (int k = 0; k <= cutoff; ++k) {
        double u = 1.0 + static_cast<double>(k) * k;
        double need = std::pow(u, 0.5 * mid) - eps * std::pow(u, 0.5 * hi);
        if (need <= 0.0) continue;
        eta = std::max(eta, need / std::pow(u, 0.5 * lo));
    }
    return eta;
}

} // namespace mss
