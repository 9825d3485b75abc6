#include "mssolve/field.hpp"

#include <algorithm>
#include <cmath>

namespace mss {

PeriodicField::PeriodicField(int cutoff, bool real)
    : cutoff_(cutoff), real_(real), modes_(2 * cutoff + 1, cplx(0.0, 0.0)) {
    if (cutoff < 0) throw ValidationError("PeriodicField cutoff must be >= 0");
}

PeriodicField PeriodicField::constant(int cutoff, double value) {
    PeriodicField f(cutoff);
    f.setCoeff(0, value);
    return f;
}

PeriodicField PeriodicField::cosine(int cutoff, int k, double amplitude) {
    PeriodicField f(cutoff);
    if (k == 0) {
        f.setCoeff(0, amplitude);
    } else {
        f.setCoeff(k, amplitude / 2.0);
        f.setCoeff(-k, amplitude / 2.0);
    }
    return f;
}

PeriodicField PeriodicField::sine(int cutoff, int k, double amplitude) {
    PeriodicField f(cutoff);
    if (k != 0) {
        f.setCoeff(k, cplx(0.0, -amplitude / 2.0));
        f.setCoeff(-k, cplx(0.0, amplitude / 2.0));
    }
    return f;
}

PeriodicField PeriodicField::singleMode(int cutoff, int k, cplx amplitude) {
    PeriodicField f(cutoff, false);
    f.setCoeff(k, amplitude);
    return f;
}

cplx PeriodicField::coeff(int k) const {
    if (std::abs(k) > cutoff_) return cplx(0.0, 0.0);
    return modes_[static_cast<size_t>(k + cutoff_)];
}

void PeriodicField::setCoeff(int k, cplx value) {
    if (std::abs(k) > cutoff_)
        throw ValidationError("PeriodicField::setCoeff: mode above cutoff");
    modes_[static_cast<size_t>(k + cutoff_)] = value;
}

void PeriodicField::addCoeff(int k, cplx value) {
    if (std::abs(k) > cutoff_)
        throw ValidationError("PeriodicField::addCoeff: mode above cutoff");
    modes_[static_cast<size_t>(k + cutoff_)] += value;
}

double PeriodicField::realityDefect() const {
    double worst = 0.0;
    for (int k = 0; k <= cutoff_; ++k)
        worst = std::max(worst, std::abs(coeff(-k) - std::conj(coeff(k))));
    return worst;
}

void PeriodicField::enforceReality() {
    for (int k = 1; k <= cutoff_; ++k) {
        cplx avg = 0.5 * (coeff(k) + std::conj(coeff(-k)));
        setCoeff(k, avg);
        setCoeff(-k, std::conj(avg));
    }
    setCoeff(0, cplx(coeff(0).real(), 0.0));
    real_ = true;
}

double PeriodicField::evalReal(double theta) const { return eval(theta).real(); }

cplx PeriodicField::eval(double theta) const {
    cplx sum(0.0, 0.0);
    for (int k = -cutoff_; k <= cutoff_; ++k)
        sum += coeff(k) * std::polar(1.0, k * theta);
    return sum;
}

PeriodicField PeriodicField::derivative() const {
    PeriodicField d(cutoff_, real_);
    for (int k = -cutoff_; k <= cutoff_; ++k)
        d.setCoeff(k, cplx(0.0, static_cast<double>(k)) * coeff(k));
    return d;
}

PeriodicField PeriodicField::secondDerivative() const {
    PeriodicField d(cutoff_, real_);
    for (int k = -cutoff_; k <= cutoff_; ++k)
        d.setCoeff(k, -static_cast<double>(k) * static_cast<double>(k) * coeff(k));
    return d;
}

PeriodicField PeriodicField::multiply(const PeriodicField& other) const {
    int K = std::max(cutoff_, other.cutoff_);
    PeriodicField out(K, real_ && other.real_);
    for (int k = -K; k <= K; ++k) {
        cplx sum(0.0, 0.0);
        for (int j = -cutoff_; j <= cutoff_; ++j) {
            int m = k - j;
            if (std::abs(m) > other.cutoff_) continue;
            sum += coeff(j) * other.coeff(m);
        }
        out.setCoeff(k, sum);
    }
    return out;
}

PeriodicField PeriodicField::truncated(int newCutoff) const {
    PeriodicField out(newCutoff, real_);
    int K = std::min(newCutoff, cutoff_);
    for (int k = -K; k <= K; ++k) out.setCoeff(k, coeff(k));
    return out;
}

PeriodicField PeriodicField::extended(int newCutoff) const {
    if (newCutoff < cutoff_)
        throw ValidationError("PeriodicField::extended: new cutoff smaller than current");
    return truncated(newCutoff);
}

PeriodicField& PeriodicField::operator+=(const PeriodicField& other) {
    if (other.cutoff_ > cutoff_) *this = extended(other.cutoff_);
    for (int k = -other.cutoff_; k <= other.cutoff_; ++k) addCoeff(k, other.coeff(k));
    real_ = real_ && other.real_;
    return *this;
}

PeriodicField& PeriodicField::operator-=(const PeriodicField& other) {
    if (other.cutoff_ > cutoff_) *this = extended(other.cutoff_);
    for (int k = -other.cutoff_; k <= other.cutoff_; ++k) addCoeff(k, -other.coeff(k));
    real_ = real_ && other.real_;
    return *this;
}

PeriodicField& PeriodicField::operator*=(cplx scalar) {
    for (auto& m : modes_) m *= scalar;
    if (scalar.imag() != 0.0) real_ = false;
    return *this;
}

double PeriodicField::maxAbsCoeff() const {
    double worst = 0.0;
    for (const auto& m : modes_) worst = std::max(worst, std::abs(m));
    return worst;
}

PeriodicField PeriodicField::fromSamples(const std::vector<double>& samples, int cutoff) {
    std::vector<cplx> cs(samples.begin(), samples.end());
    return fromSamples(cs, cutoff, true);
}

PeriodicField PeriodicField::fromSamples(const std::vector<cplx>& samples, int cutoff, bool real) {
    int n = static_cast<int>(samples.size());
    if (n <= 2 * cutoff)
        throw ValidationError("PeriodicField::fromSamples: need more samples than modes");
    PeriodicField out(cutoff, real);
    for (int k = -cutoff; k <= cutoff; ++k) {
        cplx sum(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            sum += samples[static_cast<size_t>(j)] * std::polar(1.0, -k * 2.0 * M_PI * j / n);
        out.setCoeff(k, sum / static_cast<double>(n));
    }
    if (real) out.enforceReality();
    return out;
}

std::vector<double> PeriodicField::sampleReal(int n) const {
    std::vector<double> out(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] = evalReal(2.0 * M_PI * j / n);
    return out;
}

Trajectory::Trajectory(std::vector<double> times, std::vector<PeriodicField> nodes)
    : times_(std::move(times)), nodes_(std::move(nodes)) {
    if (times_.size() != nodes_.size())
        throw ValidationError("Trajectory: times/nodes size mismatch");
    for (size_t i = 1; i < times_.size(); ++i)
        if (times_[i] <= times_[i - 1])
            throw ValidationError("Trajectory: time grid must be strictly increasing");
    for (size_t i = 1; i < nodes_.size(); ++i)
        if (nodes_[i].cutoff() != nodes_[0].cutoff())
            throw ValidationError("Trajectory: cutoff must be uniform across nodes");
}

int Trajectory::cutoff() const {
    if (nodes_.empty()) return 0;
    return nodes_[0].cutoff();
}

void Trajectory::push_back(double t, PeriodicField f) {
    if (!times_.empty()) {
        if (t <= times_.back())
            throw ValidationError("Trajectory::push_back: nonincreasing time");
        if (f.cutoff() != nodes_[0].cutoff())
            throw ValidationError("Trajectory::push_back: cutoff mismatch");
    }
    times_.push_back(t);
    nodes_.push_back(std::move(f));
}

Trajectory Trajectory::timeDerivative() const {
    int n = size();
    if (n < 2)
        throw InsufficientTimeSamples("Trajectory::timeDerivative needs >= 2 samples");
    std::vector<PeriodicField> d(static_cast<size_t>(n), PeriodicField::zero(cutoff()));
    for (int i = 0; i < n; ++i) {
        PeriodicField df(cutoff(), node(0).isReal());
        if (i == 0) {
            // second-order one-sided on a possibly nonuniform grid
            double h1 = times_[1] - times_[0];
            double h2 = times_[2 <= n - 1 ? 2 : 1] - times_[1 <= n - 1 ? 1 : 0];
            if (n == 2) {
                df = (node(1) - node(0)) * cplx(1.0 / h1, 0.0);
            } else {
                double a = -(2.0 * h1 + h2) / (h1 * (h1 + h2));
                double b = (h1 + h2) / (h1 * h2);
                double c = -h1 / (h2 * (h1 + h2));
                df = node(0) * cplx(a, 0.0) + node(1) * cplx(b, 0.0) + node(2) * cplx(c, 0.0);
            }
        } else if (i == n - 1) {
            double h1 = times_[static_cast<size_t>(n - 1)] - times_[static_cast<size_t>(n - 2)];
            if (n == 2) {
                df = (node(n - 1) - node(n - 2)) * cplx(1.0 / h1, 0.0);
            } else {
                double h2 = times_[static_cast<size_t>(n - 2)] - times_[static_cast<size_t>(n - 3)];
                double a = (2.0 * h1 + h2) / (h1 * (h1 + h2));
                double b = -(h1 + h2) / (h1 * h2);
                double c = h1 / (h2 * (h1 + h2));
                df = node(n - 1) * cplx(a, 0.0) + node(n - 2) * cplx(b, 0.0) + node(n - 3) * cplx(c, 0.0);
            }
        } else {
            double hm = times_[static_cast<size_t>(i)] - times_[static_cast<size_t>(i - 1)];
            double hp = times_[static_cast<size_t>(i + 1)] - times_[static_cast<size_t>(i)];
            double a = -hp / (hm * (hm + hp));
            double b = (hp - hm) / (hm * hp);
            double c = hm / (hp * (hm + hp));
            df = node(i - 1) * cplx(a, 0.0) + node(i) * cplx(b, 0.0) + node(i + 1) * cplx(c, 0.0);
        }
        d[static_cast<size_t>(i)] = df;
    }
    return Trajectory(times_, std::move(d));
}

} // namespace mss
