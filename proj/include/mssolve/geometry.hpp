#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mssolve/field.hpp"

namespace mss {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Point p) { return std::sqrt(dot(p, p)); }

struct TubularPoint {
    double r = 0.0; // signed distance, positive toward the enclosed region
    double s = 0.0; // interface parameter in [0, 2 pi)
    double t = 0.0;
};

// Smooth cut-off: 1 on [-delta, delta], 0 outside (-2 delta, 2 delta),
// built from the exp(-1/x) mollifier; satisfies 0 >= s xi'(s) >= -4 on the
// transition band.
double cutoff(double s, double delta);

// One time slice of the evolving interface: the star-shaped curve
// X0(s) = rho(s) (cos s, sin s) together with precomputed frame and
// metric data. The normal n points out of the annular region Omega^-
// into the enclosed region Omega^+.
class CurveSlice {
public:
    CurveSlice(const PeriodicField& rhoModes, const PeriodicField& rhoDotModes);

    const PeriodicField& rho() const { return rho_; }
    double rhoAt(double s) const { return rho_.evalReal(s); }
    Point position(double s) const;
    Point tangentUnit(double s) const;
    Point normal(double s) const;
    double speed(double s) const;       // |X0'(s)|
    double curvature(double s) const;   // w.r.t. n (positive for convex curves)
    Point timeDerivative(double s) const; // dX0/dt at fixed s
    // Tangential transport coefficient: dS/dt evaluated on the curve,
    // equal to -(tau . dX0/dt)/|X0'|.
    double dSdt(double s) const;

    bool isCircle() const { return circle_; }
    double circleRadius() const;
    double maxRadius() const;
    double minRadius() const;

    // Metric coefficient fields used by the surface operators:
    //   invSpeed  = 1/|X0'|,  invSpeed2 = 1/|X0'|^2,
    //   lapCoeff  = -|X0'|'/|X0'|^3 (first-order coefficient of Delta_Gamma).
    const PeriodicField& invSpeed() const { return invSpeed_; }
    const PeriodicField& invSpeed2() const { return invSpeed2_; }
    const PeriodicField& lapCoeff() const { return lapCoeff_; }
    const PeriodicField& speedField() const { return speed_; }
    // dS/dt as a coefficient field on the curve (zero for static geometry).
    const PeriodicField& dSdtField() const { return dSdt_; }

private:
    PeriodicField rho_, rhoDot_;
    PeriodicField speed_, invSpeed_, invSpeed2_, lapCoeff_, dSdt_;
    bool circle_ = false;
};

// Evolving star-shaped interface inside the disk of radius R, with
// tubular half-width delta. Immutable after construction; all queries
// are pure and safe to call concurrently.
class InterfaceGeometry {
public:
    // radiusSamples: one mode list per stored time (at the library cutoff).
    static InterfaceGeometry build(std::vector<PeriodicField> radiusSamples,
                                   double outerRadius, double delta,
                                   std::vector<double> timeGrid);

    // Static-geometry convenience.
    static InterfaceGeometry buildStatic(const PeriodicField& radiusModes,
                                         double outerRadius, double delta);
    static InterfaceGeometry circles(double r0, double outerRadius, double delta);

    double outerRadius() const { return outerRadius_; }
    double delta() const { return delta_; }
    const std::vector<double>& timeGrid() const { return timeGrid_; }
    bool isStatic() const { return timeGrid_.size() == 1; }

    const CurveSlice& slice(double t) const;

    bool isCircle(double t) const { return slice(t).isCircle(); }
    double circleRadius(double t) const { return slice(t).circleRadius(); }

    double signedDistance(Point x, double t) const;
    TubularPoint tubularCoordinates(Point x, double t) const;
    Point embed(const TubularPoint& p) const; // X(r,s,t) = X0(s,t) + r n(s,t)

    // Nearest-parameter projection (Newton on the angular coordinate).
    double project(Point x, double t) const;

private:
    std::vector<PeriodicField> radiusSamples_;
    double outerRadius_ = 0.0;
    double delta_ = 0.0;
    std::vector<double> timeGrid_;
    std::vector<CurveSlice> slices_;

    int sampleIndex(double t) const;
};

// Surface differential operators in the d=2, Sigma = T^1 setting:
//   grad_Gamma h = tau (ds h)/|X0'|   (returned as (n,tau)-frame components)
//   lap_Gamma h  = (1/|X0'|^2) ds^2 h - (|X0'|'/|X0'|^3) ds h.
VectorField2 surface_gradient(const PeriodicField& h, const InterfaceGeometry& g, double t);
PeriodicField surface_laplacian(const PeriodicField& h, const InterfaceGeometry& g, double t);

// Scalar tangential derivative ds h / |X0'| (the tau component of grad_Gamma).
PeriodicField tangential_derivative(const PeriodicField& h, const InterfaceGeometry& g, double t);

// Material derivative D_{t,Gamma} h = (dt + dS/dt ds) h along the trajectory;
// requires the geometry's time grid to contain the trajectory's nodes.
Trajectory material_derivative(const Trajectory& h, const InterfaceGeometry& g);

} // namespace mss
