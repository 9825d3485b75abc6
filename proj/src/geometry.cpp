#include "mssolve/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mss {

namespace {

double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// C-infinity step: 0 at x<=0, 1 at x>=1.
double smoothstep(double x) {
    double a = bump(x);
    double b = bump(1.0 - x);
    return a / (a + b);
}

// Project samples of a smooth periodic function onto modes, with tail check.
PeriodicField fitSmooth(const std::vector<double>& samples, int cutoff, const char* what) {
    PeriodicField f = PeriodicField::fromSamples(samples, cutoff);
    // The top modes must have decayed; otherwise the stored cutoff cannot
    // represent the curve's metric functions to spectral accuracy.
    double tail = 0.0;
    for (int k = cutoff - 1; k <= cutoff; ++k)
        tail = std::max(tail, std::abs(f.coeff(k)));
    double scale = std::max(1.0, f.maxAbsCoeff());
    if (tail > 1e-10 * scale) {
        std::ostringstream os;
        os << "geometry: spectral tail of " << what << " has not decayed (" << tail << ")";
        throw ValidationError(os.str());
    }
    return f;
}

} // namespace

double cutoff(double s, double delta) {
    if (delta <= 0.0) throw ValidationError("cutoff: delta must be positive");
    double a = std::abs(s);
    if (a <= delta) return 1.0;
    if (a >= 2.0 * delta) return 0.0;
    return smoothstep((2.0 * delta - a) / delta);
}

CurveSlice::CurveSlice(const PeriodicField& rhoModes, const PeriodicField& rhoDotModes)
    : rho_(rhoModes), rhoDot_(rhoDotModes) {
    int K = rho_.cutoff();
    circle_ = true;
    for (int k = 1; k <= K; ++k)
        if (std::abs(rho_.coeff(k)) > 1e-14) circle_ = false;

    // Work cutoff for the derived metric fields. Quotients of band-limited
    // functions are smooth but not band-limited; they are refit on a dense
    // sample grid with a spectral tail check.
    int Kw = std::max(16, 4 * K + 8);
    int n = std::max(256, 8 * Kw);

    PeriodicField drho = rho_.derivative();
    PeriodicField ddrho = rho_.secondDerivative();

    std::vector<double> speed(static_cast<size_t>(n)), invSpeed(static_cast<size_t>(n)),
        invSpeed2(static_cast<size_t>(n)), lap(static_cast<size_t>(n)), dsdt(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double s = 2.0 * M_PI * j / n;
        double r = rho_.evalReal(s);
        if (r <= 0.0) throw NonPositiveRadius("geometry: rho(theta) <= 0");
        double rp = drho.evalReal(s);
        double rpp = ddrho.evalReal(s);
        double m2 = r * r + rp * rp;
        double m = std::sqrt(m2);
        // d|X0'|/ds = (r rp + rp rpp)/m
        double mp = (r * rp + rp * rpp) / m;
        speed[static_cast<size_t>(j)] = m;
        invSpeed[static_cast<size_t>(j)] = 1.0 / m;
        invSpeed2[static_cast<size_t>(j)] = 1.0 / m2;
        lap[static_cast<size_t>(j)] = -mp / (m2 * m);
        // dS/dt on the curve: -(tau . dX0/dt)/|X0'|; dX0/dt = rhoDot e_r.
        double rdot = rhoDot_.evalReal(s);
        // tau = (rp e_r + r e_theta)/m  =>  tau . (rdot e_r) = rp rdot / m
        dsdt[static_cast<size_t>(j)] = -(rp * rdot / m) / m;
    }
    speed_ = fitSmooth(speed, Kw, "|X0'|");
    invSpeed_ = fitSmooth(invSpeed, Kw, "1/|X0'|");
    invSpeed2_ = fitSmooth(invSpeed2, Kw, "1/|X0'|^2");
    lapCoeff_ = fitSmooth(lap, Kw, "Delta_Gamma coefficient");
    dSdt_ = fitSmooth(dsdt, Kw, "dS/dt");
}

Point CurveSlice::position(double s) const {
    double r = rho_.evalReal(s);
    return {r * std::cos(s), r * std::sin(s)};
}

Point CurveSlice::tangentUnit(double s) const {
    double r = rho_.evalReal(s);
    double rp = rho_.derivative().evalReal(s);
    double c = std::cos(s), sn = std::sin(s);
    Point d{rp * c - r * sn, rp * sn + r * c};
    double m = norm2(d);
    return {d.x / m, d.y / m};
}

Point CurveSlice::normal(double s) const {
    // n = (-T_y, T_x)/|T| points from the annulus into the enclosed region.
    Point tau = tangentUnit(s);
    return {-tau.y, tau.x};
}

double CurveSlice::speed(double s) const {
    double r = rho_.evalReal(s);
    double rp = rho_.derivative().evalReal(s);
    return std::sqrt(r * r + rp * rp);
}

double CurveSlice::curvature(double s) const {
    double r = rho_.evalReal(s);
    double rp = rho_.derivative().evalReal(s);
    double rpp = rho_.secondDerivative().evalReal(s);
    double m2 = r * r + rp * rp;
    return (r * r + 2.0 * rp * rp - r * rpp) / std::pow(m2, 1.5);
}

Point CurveSlice::timeDerivative(double s) const {
    double rdot = rhoDot_.evalReal(s);
    return {rdot * std::cos(s), rdot * std::sin(s)};
}

double CurveSlice::dSdt(double s) const { return dSdt_.evalReal(s); }

double CurveSlice::circleRadius() const {
    if (!circle_) throw NonCircularGeometry("circleRadius: interface is not a circle");
    return rho_.coeff(0).real();
}

double CurveSlice::maxRadius() const {
    double worst = 0.0;
    int n = std::max(512, 8 * rho_.cutoff());
    for (int j = 0; j < n; ++j)
        worst = std::max(worst, rho_.evalReal(2.0 * M_PI * j / n));
    return worst;
}

double CurveSlice::minRadius() const {
    double best = 1e300;
    int n = std::max(512, 8 * rho_.cutoff());
    for (int j = 0; j < n; ++j)
        best = std::min(best, rho_.evalReal(2.0 * M_PI * j / n));
    return best;
}

InterfaceGeometry InterfaceGeometry::build(std::vector<PeriodicField> radiusSamples,
                                           double outerRadius, double delta,
                                           std::vector<double> timeGrid) {
    if (radiusSamples.empty())
        throw ValidationError("geometry: need at least one radius sample");
    if (radiusSamples.size() != timeGrid.size())
        throw ValidationError("geometry: radius samples and time grid size mismatch");
    for (size_t i = 1; i < timeGrid.size(); ++i)
        if (timeGrid[i] <= timeGrid[i - 1])
            throw ValidationError("geometry: time grid must be strictly increasing");
    if (delta <= 0.0) throw ValidationError("geometry: delta must be positive");

    InterfaceGeometry g;
    g.radiusSamples_ = std::move(radiusSamples);
    g.outerRadius_ = outerRadius;
    g.delta_ = delta;
    g.timeGrid_ = std::move(timeGrid);

    int n = static_cast<int>(g.radiusSamples_.size());
    for (int i = 0; i < n; ++i) {
        PeriodicField rho = g.radiusSamples_[static_cast<size_t>(i)];
        PeriodicField rhoDot(rho.cutoff());
        if (n >= 2) {
            // centered difference on the stored grid (one-sided at the ends)
            int im = std::max(0, i - 1);
            int ip = std::min(n - 1, i + 1);
            double dt = g.timeGrid_[static_cast<size_t>(ip)] - g.timeGrid_[static_cast<size_t>(im)];
            rhoDot = (g.radiusSamples_[static_cast<size_t>(ip)] -
                      g.radiusSamples_[static_cast<size_t>(im)]) *
                     cplx(1.0 / dt, 0.0);
        }
        g.slices_.emplace_back(rho, rhoDot);
        const CurveSlice& sl = g.slices_.back();
        if (sl.minRadius() <= 0.0)
            throw NonPositiveRadius("geometry: interface radius must stay positive");
        double gap = outerRadius - sl.maxRadius();
        if (gap <= 3.0 * delta) {
            std::ostringstream os;
            os << "geometry: dist(boundary, interface) = " << gap
               << " must exceed 3 delta = " << 3.0 * delta;
            throw SeparationViolation(os.str());
        }
    }
    return g;
}

InterfaceGeometry InterfaceGeometry::buildStatic(const PeriodicField& radiusModes,
                                                 double outerRadius, double delta) {
    return build({radiusModes}, outerRadius, delta, {0.0});
}

InterfaceGeometry InterfaceGeometry::circles(double r0, double outerRadius, double delta) {
    return buildStatic(PeriodicField::constant(0, r0), outerRadius, delta);
}

int InterfaceGeometry::sampleIndex(double t) const {
    if (timeGrid_.size() == 1) return 0;
    // nearest stored node; evolution drives the geometry on its own grid
    int best = 0;
    double bestDist = std::abs(t - timeGrid_[0]);
    for (size_t i = 1; i < timeGrid_.size(); ++i) {
        double d = std::abs(t - timeGrid_[i]);
        if (d < bestDist) {
            bestDist = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

const CurveSlice& InterfaceGeometry::slice(double t) const {
    return slices_[static_cast<size_t>(sampleIndex(t))];
}

double InterfaceGeometry::project(Point x, double t) const {
    const CurveSlice& sl = slice(t);
    double s = std::atan2(x.y, x.x);
    if (s < 0.0) s += 2.0 * M_PI;
    // Newton on F(s) = (x - X0(s)) . X0'(s) = 0; star-shapedness makes the
    // angular coordinate a good initial guess inside Gamma(3 delta).
    for (int it = 0; it < 50; ++it) {
        double r = sl.rho().evalReal(s);
        double rp = sl.rho().derivative().evalReal(s);
        double rpp = sl.rho().secondDerivative().evalReal(s);
        double c = std::cos(s), sn = std::sin(s);
        Point X{r * c, r * sn};
        Point Xp{rp * c - r * sn, rp * sn + r * c};
        Point Xpp{rpp * c - 2.0 * rp * sn - r * c, rpp * sn + 2.0 * rp * c - r * sn};
        Point d = x - X;
        double F = dot(d, Xp);
        double Fp = -dot(Xp, Xp) + dot(d, Xpp);
        if (std::abs(Fp) < 1e-300) break;
        double step = F / Fp;
        s -= step;
        if (std::abs(step) < 1e-12) break;
    }
    s = std::fmod(s, 2.0 * M_PI);
    if (s < 0.0) s += 2.0 * M_PI;
    return s;
}

double InterfaceGeometry::signedDistance(Point x, double t) const {
    const CurveSlice& sl = slice(t);
    if (sl.isCircle()) {
        return sl.circleRadius() - norm2(x);
    }
    double s = project(x, t);
    Point X = sl.position(s);
    double dist = norm2(x - X);
    // Newton projection can only be trusted near the curve; fall back to a
    // dense scan when the projection is far (still exact for sign purposes).
    if (dist > 3.0 * delta_) {
        int n = 4096;
        for (int j = 0; j < n; ++j) {
            double sj = 2.0 * M_PI * j / n;
            dist = std::min(dist, norm2(x - sl.position(sj)));
        }
    }
    double angle = std::atan2(x.y, x.x);
    bool inside = norm2(x) < sl.rho().evalReal(angle);
    return inside ? dist : -dist;
}

TubularPoint InterfaceGeometry::tubularCoordinates(Point x, double t) const {
    double r = signedDistance(x, t);
    if (std::abs(r) >= 3.0 * delta_) {
        std::ostringstream os;
        os << "tubularCoordinates: |sdist| = " << std::abs(r) << " >= 3 delta = "
           << 3.0 * delta_;
        throw OutsideTubularNeighborhood(os.str());
    }
    double s = slice(t).isCircle() ? std::fmod(std::atan2(x.y, x.x) + 2.0 * M_PI, 2.0 * M_PI)
                                   : project(x, t);
    return TubularPoint{r, s, t};
}

Point InterfaceGeometry::embed(const TubularPoint& p) const {
    const CurveSlice& sl = slice(p.t);
    Point X = sl.position(p.s);
    Point n = sl.normal(p.s);
    return X + p.r * n;
}

VectorField2 surface_gradient(const PeriodicField& h, const InterfaceGeometry& g, double t) {
    const CurveSlice& sl = g.slice(t);
    PeriodicField tau = h.derivative().multiply(sl.invSpeed()).truncated(h.cutoff());
    return VectorField2(PeriodicField::zero(h.cutoff()), tau);
}

PeriodicField tangential_derivative(const PeriodicField& h, const InterfaceGeometry& g, double t) {
    const CurveSlice& sl = g.slice(t);
    return h.derivative().multiply(sl.invSpeed()).truncated(h.cutoff());
}

PeriodicField surface_laplacian(const PeriodicField& h, const InterfaceGeometry& g, double t) {
    const CurveSlice& sl = g.slice(t);
    PeriodicField out =
        h.secondDerivative().multiply(sl.invSpeed2()) + h.derivative().multiply(sl.lapCoeff());
    return out.truncated(h.cutoff());
}

Trajectory material_derivative(const Trajectory& h, const InterfaceGeometry& g) {
    if (h.size() < 2)
        throw InsufficientTimeSamples("material_derivative needs >= 2 time samples");
    Trajectory dt = h.timeDerivative();
    std::vector<PeriodicField> out;
    out.reserve(static_cast<size_t>(h.size()));
    for (int i = 0; i < h.size(); ++i) {
        const CurveSlice& sl = g.slice(h.time(i));
        PeriodicField advect = h.node(i).derivative().multiply(sl.dSdtField());
        out.push_back((dt.node(i) + advect.truncated(h.cutoff())).truncated(h.cutoff()));
    }
    return Trajectory(h.times(), std::move(out));
}

} // namespace mss
