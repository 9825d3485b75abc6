#pragma once

#include "mssolve/field.hpp"

namespace mss {

// Fourier-weighted Sobolev norm on the periodic circle:
//   ||f||_{H^s}^2 = sum_k (1+k^2)^s |f_k|^2.
double h_norm(const PeriodicField& f, double s);

// Extended-precision reference for h_norm (long double accumulation);
// test oracle for the fast path.
double oracle_h_norm(const PeriodicField& f, double s);

// Space-time solution norm
//   ||h||_{X_T} = ||h||_{L^2(0,T;H^{7/2})} + ||h||_{H^1(0,T;H^{1/2})}
//                + ||h(0)||_{H^2},
// with trapezoid time quadrature and second-order difference time
// derivative. Throws InsufficientTimeSamples for fewer than two nodes.
double xt_norm(const Trajectory& traj);

// L^p(0,T) quadrature (trapezoid) of t -> h_norm(h(t), s).
double time_lp_norm(const Trajectory& traj, double s, double p);

PeriodicField project(const PeriodicField& f, int newCutoff);

// Smallest constant eta such that
//   ||f||_{H^mid} <= eps ||f||_{H^hi} + eta ||f||_{H^lo}
// holds for every field truncated at `cutoff`, found by per-mode
// maximization of (1+k^2)^mid' - eps (1+k^2)^hi' over the mode range.
double interpolation_eta(double eps, double lo, double mid, double hi, int cutoff);

} // namespace mss
