#pragma once

#include <complex>
#include <vector>

#include "mssolve/errors.hpp"

namespace mss {

using cplx = std::complex<double>;

// Truncated Fourier series on the periodic parameter circle, coefficients
// f_k for |k| <= K. Real-valued fields keep the Hermitian symmetry
// f_{-k} = conj(f_k); most physical fields in this library are real.
class PeriodicField {
public:
    PeriodicField() : cutoff_(0), real_(true), modes_(1, cplx(0.0, 0.0)) {}
    explicit PeriodicField(int cutoff, bool real = true);

    static PeriodicField zero(int cutoff) { return PeriodicField(cutoff); }
    static PeriodicField constant(int cutoff, double value);
    // cos(k theta) convenience: amplitude/2 at +-k.
    static PeriodicField cosine(int cutoff, int k, double amplitude = 1.0);
    static PeriodicField sine(int cutoff, int k, double amplitude = 1.0);
    // Single complex mode amplitude at wavenumber k (non-real field).
    static PeriodicField singleMode(int cutoff, int k, cplx amplitude);

    int cutoff() const { return cutoff_; }
    bool isReal() const { return real_; }
    void setReal(bool r) { real_ = r; }

    cplx coeff(int k) const;
    void setCoeff(int k, cplx value);
    void addCoeff(int k, cplx value);

    // Max violation of Hermitian symmetry (0 for properly real fields).
    double realityDefect() const;
    void enforceReality();

    double evalReal(double theta) const;   // Re sum f_k e^{ik theta}
    cplx eval(double theta) const;

    PeriodicField derivative() const;      // d/ds, multiplier ik
    PeriodicField secondDerivative() const;

    // Truncated convolution: pointwise product projected back to
    // max(cutoff(), other.cutoff()).
    PeriodicField multiply(const PeriodicField& other) const;

    PeriodicField truncated(int newCutoff) const;
    // Pad with zero modes up to newCutoff (>= cutoff()).
    PeriodicField extended(int newCutoff) const;

    PeriodicField& operator+=(const PeriodicField& other);
    PeriodicField& operator-=(const PeriodicField& other);
    PeriodicField& operator*=(cplx scalar);
    friend PeriodicField operator+(PeriodicField a, const PeriodicField& b) { return a += b; }
    friend PeriodicField operator-(PeriodicField a, const PeriodicField& b) { return a -= b; }
    friend PeriodicField operator*(cplx s, PeriodicField f) { return f *= s; }
    friend PeriodicField operator*(PeriodicField f, cplx s) { return f *= s; }

    double maxAbsCoeff() const;

    // Least-squares/trapezoid projection of samples on the uniform grid
    // theta_j = 2 pi j / n (exact for band-limited data when n > 2*cutoff).
    static PeriodicField fromSamples(const std::vector<double>& samples, int cutoff);
    static PeriodicField fromSamples(const std::vector<cplx>& samples, int cutoff, bool real);

    std::vector<double> sampleReal(int n) const;

private:
    int cutoff_;
    bool real_;
    std::vector<cplx> modes_; // index k + cutoff_
};

// Vector field along a curve, stored in the local orthonormal frame
// (n, tau): n is the interface normal pointing into the enclosed region
// (on the outer boundary, the exterior normal), tau the unit tangent of
// the counterclockwise parametrization.
struct VectorField2 {
    PeriodicField n;
    PeriodicField tau;

    VectorField2() = default;
    VectorField2(PeriodicField normal, PeriodicField tangential)
        : n(std::move(normal)), tau(std::move(tangential)) {}
    static VectorField2 zero(int cutoff) {
        return VectorField2(PeriodicField::zero(cutoff), PeriodicField::zero(cutoff));
    }
    int cutoff() const { return std::max(n.cutoff(), tau.cutoff()); }
};

// Time series of PeriodicFields on a shared increasing grid with uniform cutoff.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(std::vector<double> times, std::vector<PeriodicField> nodes);

    int size() const { return static_cast<int>(times_.size()); }
    int cutoff() const;
    double time(int i) const { return times_.at(i); }
    const std::vector<double>& times() const { return times_; }
    const PeriodicField& node(int i) const { return nodes_.at(i); }
    PeriodicField& node(int i) { return nodes_.at(i); }

    void push_back(double t, PeriodicField f);

    // Second-order time derivative (centered interior, one-sided ends).
    Trajectory timeDerivative() const;

private:
    std::vector<double> times_;
    std::vector<PeriodicField> nodes_;
};

} // namespace mss
