#include "mssolve/oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mss {

namespace {

using SpMat = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

Eigen::VectorXcd sparseSolve(int n, const std::vector<Triplet>& trips,
                             const Eigen::VectorXcd& rhs) {
    SpMat A(n, n);
    A.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseLU<SpMat> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
        throw SolverError("oracle: sparse factorization failed");
    return lu.solve(rhs);
}

cplx interp(const std::vector<double>& r, const std::vector<cplx>& u, double x) {
    if (r.size() < 2) throw SolverError("oracle profile too short");
    auto it = std::upper_bound(r.begin(), r.end(), x);
    size_t j = std::min(std::max<size_t>(1, static_cast<size_t>(it - r.begin())), r.size() - 1);
    double w = (x - r[j - 1]) / (r[j] - r[j - 1]);
    return (1.0 - w) * u[j - 1] + w * u[j];
}

// Single-grid two-phase Laplace solve; returns the reported interface
// quantities plus profiles.
struct LaplaceRun {
    cplx dPlus, dMinus;
    std::vector<double> rP, rM;
    std::vector<cplx> uP, uM;
};

LaplaceRun laplaceRun(int k, double r0, double R, MuOuter outer, cplx fplus, cplx fminus,
                      double a1, cplx a4, int M) {
    int kk = std::abs(k);
    double h = r0 / M;
    LaplaceRun out;

    { // disk phase: unknowns u_0..u_{M+1} (ghost at M+1)
        int n = M + 2;
        std::vector<Triplet> T;
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
        if (kk == 0) {
            T.emplace_back(0, 0, cplx(-4.0 / (h * h), 0.0));
            T.emplace_back(0, 1, cplx(4.0 / (h * h), 0.0));
            b(0) = a1;
        } else {
            T.emplace_back(0, 0, cplx(1.0, 0.0));
        }
        for (int i = 1; i <= M; ++i) {
            double r = i * h;
            double c = r * r / (h * h);
            double d = r / (2.0 * h);
            T.emplace_back(i, i - 1, cplx(c - d, 0.0));
            T.emplace_back(i, i, cplx(-2.0 * c - kk * kk, 0.0));
            T.emplace_back(i, i + 1, cplx(c + d, 0.0));
            b(i) = (kk == 0) ? cplx(r * r * a1, 0.0) : cplx(0.0, 0.0);
        }
        T.emplace_back(M + 1, M, cplx(1.0, 0.0)); // trace row u_M = fplus
        Eigen::VectorXcd bb = b;
        bb(M + 1) = fplus;
        // the trace row replaces nothing: rows 0..M are ODE/center, row M+1 trace
        Eigen::VectorXcd u = sparseSolve(n, T, bb);
        out.dPlus = (u(M + 1) - u(M - 1)) / (2.0 * h);
        out.rP.resize(static_cast<size_t>(M + 1));
        out.uP.resize(static_cast<size_t>(M + 1));
        for (int i = 0; i <= M; ++i) {
            out.rP[static_cast<size_t>(i)] = i * h;
            out.uP[static_cast<size_t>(i)] = u(i);
        }
    }

    { // annulus phase
        double hh = (R - r0) / M;
        bool neumann = (outer == MuOuter::Neumann);
        int n = neumann ? M + 3 : M + 2; // ghost at -1 always; at M+1 only for Neumann
        auto idx = [&](int j) { return j + 1; }; // j = -1..M(+1)
        std::vector<Triplet> T;
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
        int row = 0;
        T.emplace_back(row, idx(0), cplx(1.0, 0.0));
        b(row) = fminus;
        ++row;
        int jmax = neumann ? M : M - 1;
        for (int j = 0; j <= jmax; ++j) {
            double r = r0 + j * hh;
            double c = r * r / (hh * hh);
            double d = r / (2.0 * hh);
            T.emplace_back(row, idx(j - 1), cplx(c - d, 0.0));
            T.emplace_back(row, idx(j), cplx(-2.0 * c - kk * kk, 0.0));
            T.emplace_back(row, idx(j + 1), cplx(c + d, 0.0));
            b(row) = (kk == 0) ? cplx(r * r * a1, 0.0) : cplx(0.0, 0.0);
            ++row;
        }
        if (neumann) {
            T.emplace_back(row, idx(M + 1), cplx(1.0 / (2.0 * hh), 0.0));
            T.emplace_back(row, idx(M - 1), cplx(-1.0 / (2.0 * hh), 0.0));
            b(row) = a4;
            ++row;
        } else {
            T.emplace_back(row, idx(M), cplx(1.0, 0.0));
            b(row) = a4;
            ++row;
        }
        Eigen::VectorXcd u = sparseSolve(n, T, b);
        out.dMinus = (u(idx(1)) - u(idx(-1))) / (2.0 * hh);
        out.rM.resize(static_cast<size_t>(M + 1));
        out.uM.resize(static_cast<size_t>(M + 1));
        for (int j = 0; j <= M; ++j) {
            out.rM[static_cast<size_t>(j)] = r0 + j * hh;
            out.uM[static_cast<size_t>(j)] = u(idx(j));
        }
    }
    return out;
}

void richardsonGate(cplx e12, cplx e23, const char* what) {
    double diff = std::abs(e12 - e23);
    double scale = std::max(1.0, std::abs(e23));
    if (diff > 1e-8 * scale) {
        std::ostringstream os;
        os << "oracle: Richardson extrapolants for " << what << " disagree by " << diff;
        throw ExtrapolationDisagreement(os.str());
    }
}

cplx extrap(cplx coarse, cplx fine) { return (4.0 * fine - coarse) / 3.0; }

} // namespace

cplx OracleLaplaceResult::valuePlus(double r) const { return interp(rPlus, muPlus, r); }
cplx OracleLaplaceResult::valueMinus(double r) const { return interp(rMinus, muMinus, r); }

OracleLaplaceResult oracle_laplace_mode(int k, double r0, double R, MuOuter outer, cplx fplus,
                                        cplx fminus, double a1, cplx a4, int baseGrid) {
    if (r0 <= 0.0 || R <= r0) throw ValidationError("oracle_laplace_mode: need 0 < r0 < R");
    int M = baseGrid > 0 ? baseGrid : std::max(1000, 100 * std::abs(k));
    LaplaceRun a = laplaceRun(k, r0, R, outer, fplus, fminus, a1, a4, M);
    LaplaceRun b = laplaceRun(k, r0, R, outer, fplus, fminus, a1, a4, 2 * M);
    LaplaceRun c = laplaceRun(k, r0, R, outer, fplus, fminus, a1, a4, 4 * M);

    cplx e12p = extrap(a.dPlus, b.dPlus), e23p = extrap(b.dPlus, c.dPlus);
    cplx e12m = extrap(a.dMinus, b.dMinus), e23m = extrap(b.dMinus, c.dMinus);
    richardsonGate(e12p, e23p, "d mu+/dr");
    richardsonGate(e12m, e23m, "d mu-/dr");

    OracleLaplaceResult out;
    out.dmuPlusInterface = e23p;
    out.dmuMinusInterface = e23m;
    out.jump = -e23p + e23m; // n points into Omega^+, i.e. n = -e_r on circles
    out.tracePlus = fplus;
    out.traceMinus = fminus;
    out.rPlus = std::move(c.rP);
    out.muPlus = std::move(c.uP);
    out.rMinus = std::move(c.rM);
    out.muMinus = std::move(c.uM);
    return out;
}

namespace {

// Single-grid biharmonic (psi, omega) two-phase solve for k >= 1.
OracleStokesResult stokesRunK(int k, double r0, double R, VOuter outer, double alpha, cplx s_n,
                              cplx s_tau, cplx a_n, cplx a_tau, cplx g_n, cplx g_tau, int M) {
    const cplx I(0.0, 1.0);
    double h = r0 / M;
    double hh = (R - r0) / M;

    // unknown layout: disk psi_0..psi_{M+1}, omega_0..omega_{M+1},
    //                 annulus psi_{-1}..psi_{M+1}, omega_{-1}..omega_{M+1}
    int nP = M + 2;
    int nA = M + 3;
    int total = 2 * nP + 2 * nA;
    auto psiP = [&](int i) { return i; };
    auto omgP = [&](int i) { return nP + i; };
    auto psiA = [&](int j) { return 2 * nP + (j + 1); };
    auto omgA = [&](int j) { return 2 * nP + nA + (j + 1); };

    std::vector<Triplet> T;
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(total);
    int row = 0;
    auto addColloc = [&](bool disk, int j, double r, double step) {
        double c = r * r / (step * step);
        double d = r / (2.0 * step);
        auto P = disk ? std::function<int(int)>(psiP) : std::function<int(int)>(psiA);
        auto W = disk ? std::function<int(int)>(omgP) : std::function<int(int)>(omgA);
        // r^2 psi'' + r psi' - k^2 psi - r^2 omega = 0
        T.emplace_back(row, P(j - 1), cplx(c - d, 0.0));
        T.emplace_back(row, P(j), cplx(-2.0 * c - k * k, 0.0));
        T.emplace_back(row, P(j + 1), cplx(c + d, 0.0));
        T.emplace_back(row, W(j), cplx(-r * r, 0.0));
        ++row;
        // r^2 omega'' + r omega' - k^2 omega = 0
        T.emplace_back(row, W(j - 1), cplx(c - d, 0.0));
        T.emplace_back(row, W(j), cplx(-2.0 * c - k * k, 0.0));
        T.emplace_back(row, W(j + 1), cplx(c + d, 0.0));
        ++row;
    };

    // disk regularity rows
    T.emplace_back(row, psiP(0), cplx(1.0, 0.0));
    ++row;
    T.emplace_back(row, omgP(0), cplx(1.0, 0.0));
    ++row;
    for (int i = 1; i <= M; ++i) addColloc(true, i, i * h, h);
    for (int j = 0; j <= M; ++j) addColloc(false, j, r0 + j * hh, hh);

    // centered-derivative helper at the interface and outer boundary
    auto addD = [&](int r_, auto idxf, int j, double step, cplx coef) {
        T.emplace_back(r_, idxf(j + 1), coef / (2.0 * step));
        T.emplace_back(r_, idxf(j - 1), -coef / (2.0 * step));
    };

    // R1: (ik/r0)(psi+_M - psi-_0) = -s_n
    T.emplace_back(row, psiP(M), I * static_cast<double>(k) / r0);
    T.emplace_back(row, psiA(0), -I * static_cast<double>(k) / r0);
    b(row) = -s_n;
    ++row;
    // R2: -psi'+ + psi'- = s_tau
    addD(row, psiP, M, h, cplx(-1.0, 0.0));
    addD(row, psiA, 0, hh, cplx(1.0, 0.0));
    b(row) = s_tau;
    ++row;
    // t_r = (2ik/r)(psi' - psi/r) - (i r / k) omega'
    auto addTr = [&](auto Pf, auto Wf, int j, double r, double step, double sign) {
        addD(row, Pf, j, step, sign * 2.0 * I * static_cast<double>(k) / r);
        T.emplace_back(row, Pf(j), -sign * 2.0 * I * static_cast<double>(k) / (r * r));
        addD(row, Wf, j, step, -sign * I * r / static_cast<double>(k));
    };
    // t_th = -omega + 2 psi'/r - 2 k^2 psi / r^2
    auto addTth = [&](auto Pf, auto Wf, int j, double r, double step, double sign) {
        T.emplace_back(row, Wf(j), cplx(-sign, 0.0));
        addD(row, Pf, j, step, cplx(sign * 2.0 / r, 0.0));
        T.emplace_back(row, Pf(j), cplx(-sign * 2.0 * k * k / (r * r), 0.0));
    };
    // R3: t_r+ - t_r- = a_n
    addTr(psiP, omgP, M, r0, h, 1.0);
    addTr(psiA, omgA, 0, r0, hh, -1.0);
    b(row) = a_n;
    ++row;
    // R4: t_th+ - t_th- = -a_tau
    addTth(psiP, omgP, M, r0, h, 1.0);
    addTth(psiA, omgA, 0, r0, hh, -1.0);
    b(row) = -a_tau;
    ++row;

    // outer rows
    if (outer == VOuter::B1 || outer == VOuter::B2) {
        T.emplace_back(row, psiA(M), I * static_cast<double>(k) / R);
        b(row) = g_n;
        ++row;
    } else { // B3 normal row: t_r(R) + alpha v_r(R) = g_n
        addTr(psiA, omgA, M, R, hh, 1.0);
        T.emplace_back(row, psiA(M), alpha * I * static_cast<double>(k) / R);
        b(row) = g_n;
        ++row;
    }
    if (outer == VOuter::B1) {
        addD(row, psiA, M, hh, cplx(-1.0, 0.0)); // v_th(R) = -psi'(R) = g_tau
        b(row) = g_tau;
        ++row;
    } else { // B2/B3 tangential row: t_th(R) + alpha v_th(R) = g_tau
        addTth(psiA, omgA, M, R, hh, 1.0);
        addD(row, psiA, M, hh, cplx(-alpha, 0.0));
        b(row) = g_tau;
        ++row;
    }
    if (row != total) throw SolverError("oracle_stokes_mode: row/unknown count mismatch");

    Eigen::VectorXcd u = sparseSolve(total, T, b);

    auto ctr = [&](auto idxf, int j, double step) {
        return (u(idxf(j + 1)) - u(idxf(j - 1))) / (2.0 * step);
    };
    OracleStokesResult out;
    double kk = static_cast<double>(k);
    cplx dpsiP = ctr(psiP, M, h), domgP = ctr(omgP, M, h);
    cplx dpsiA = ctr(psiA, 0, hh), domgA = ctr(omgA, 0, hh);
    out.vrPlus = I * kk / r0 * u(psiP(M));
    out.vthPlus = -dpsiP;
    out.vrMinus = I * kk / r0 * u(psiA(0));
    out.vthMinus = -dpsiA;
    out.pPlus = I * r0 / kk * domgP;
    out.pMinus = I * r0 / kk * domgA;
    out.trPlus = 2.0 * I * kk / r0 * (dpsiP - u(psiP(M)) / r0) - out.pPlus;
    out.trMinus = 2.0 * I * kk / r0 * (dpsiA - u(psiA(0)) / r0) - out.pMinus;
    out.tthPlus = -u(omgP(M)) + 2.0 * dpsiP / r0 - 2.0 * kk * kk * u(psiP(M)) / (r0 * r0);
    out.tthMinus = -u(omgA(0)) + 2.0 * dpsiA / r0 - 2.0 * kk * kk * u(psiA(0)) / (r0 * r0);
    return out;
}

// k = 0: v_r is forced to m/r by incompressibility; v_theta solves a
// decoupled radial ODE; pressures are piecewise constants.
OracleStokesResult stokesRun0(double r0, double R, VOuter outer, double alpha, cplx s_n,
                              cplx s_tau, cplx a_n, cplx a_tau, cplx g_n, cplx g_tau, int M) {
    double h = r0 / M;
    double hh = (R - r0) / M;
    cplx m = r0 * s_n;
    if (outer == VOuter::B1 || outer == VOuter::B2) {
        double scale = std::max({1.0, std::abs(s_n), std::abs(g_n)});
        if (std::abs(r0 * s_n - R * g_n) > 1e-10 * scale)
            throw CompatibilityViolated("oracle_stokes_mode: k=0 radial flux data inconsistent");
    }

    // v_theta system: disk v_0..v_{M+1}, annulus v_{-1}..v_{M+1}
    int nP = M + 2, nA = M + 3;
    int total = nP + nA;
    auto vP = [&](int i) { return i; };
    auto vA = [&](int j) { return nP + j + 1; };
    std::vector<Triplet> T;
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(total);
    int row = 0;
    T.emplace_back(row, vP(0), cplx(1.0, 0.0));
    ++row;
    auto colloc = [&](auto idxf, int j, double r, double step) {
        double c = r * r / (step * step);
        double d = r / (2.0 * step);
        T.emplace_back(row, idxf(j - 1), cplx(c - d, 0.0));
        T.emplace_back(row, idxf(j), cplx(-2.0 * c - 1.0, 0.0));
        T.emplace_back(row, idxf(j + 1), cplx(c + d, 0.0));
        ++row;
    };
    for (int i = 1; i <= M; ++i) colloc(vP, i, i * h, h);
    for (int j = 0; j <= M; ++j) colloc(vA, j, r0 + j * hh, hh);
    auto addD = [&](int r_, auto idxf, int j, double step, cplx coef) {
        T.emplace_back(r_, idxf(j + 1), coef / (2.0 * step));
        T.emplace_back(r_, idxf(j - 1), -coef / (2.0 * step));
    };
    // v jump
    T.emplace_back(row, vP(M), cplx(1.0, 0.0));
    T.emplace_back(row, vA(0), cplx(-1.0, 0.0));
    b(row) = s_tau;
    ++row;
    // t_th = v' - v/r jump = -a_tau
    addD(row, vP, M, h, cplx(1.0, 0.0));
    T.emplace_back(row, vP(M), cplx(-1.0 / r0, 0.0));
    addD(row, vA, 0, hh, cplx(-1.0, 0.0));
    T.emplace_back(row, vA(0), cplx(1.0 / r0, 0.0));
    b(row) = -a_tau;
    ++row;
    // outer tangential row
    if (outer == VOuter::B1) {
        T.emplace_back(row, vA(M), cplx(1.0, 0.0));
        b(row) = g_tau;
        ++row;
    } else {
        addD(row, vA, M, hh, cplx(1.0, 0.0));
        T.emplace_back(row, vA(M), cplx(-1.0 / R + alpha, 0.0));
        b(row) = g_tau;
        ++row;
    }
    if (row != total) throw SolverError("oracle_stokes_mode k=0: row count mismatch");
    Eigen::VectorXcd u = sparseSolve(total, T, b);

    cplx pPlus, pMinus;
    if (outer == VOuter::B3) {
        pMinus = -2.0 * m / (R * R) + alpha * m / R - g_n;
        pPlus = pMinus + 2.0 * m / (r0 * r0) - a_n;
    } else {
        // jump row -P+ + 2m/r0^2 + P- = a_n with area normalization
        // pi r0^2 P+ + pi (R^2-r0^2) P- = 0
        double w = r0 * r0 / (R * R - r0 * r0);
        // P+ = P- + 2m/r0^2 - a_n ; P-(1 + w) = -w (2m/r0^2 - a_n)
        pMinus = -w * (2.0 * m / (r0 * r0) - a_n) / (1.0 + w);
        pPlus = pMinus + 2.0 * m / (r0 * r0) - a_n;
    }

    OracleStokesResult out;
    out.vrPlus = 0.0;
    out.vrMinus = m / r0;
    out.vthPlus = u(vP(M));
    out.vthMinus = u(vA(0));
    out.pPlus = pPlus;
    out.pMinus = pMinus;
    out.trPlus = -pPlus;
    out.trMinus = -2.0 * m / (r0 * r0) - pMinus;
    out.tthPlus = (u(vP(M + 1)) - u(vP(M - 1))) / (2.0 * h) - u(vP(M)) / r0;
    out.tthMinus = (u(vA(1)) - u(vA(-1))) / (2.0 * hh) - u(vA(0)) / r0;
    return out;
}

} // namespace

OracleStokesResult oracle_stokes_mode(int k, double r0, double R, VOuter outer, double alpha,
                                      cplx s_n, cplx s_tau, cplx a_n, cplx a_tau, cplx g_n,
                                      cplx g_tau, int baseGrid) {
    if (r0 <= 0.0 || R <= r0) throw ValidationError("oracle_stokes_mode: need 0 < r0 < R");
    if ((outer == VOuter::B2 || outer == VOuter::B3) && alpha <= 0.0)
        throw CoercivityViolated("oracle_stokes_mode: B2/B3 require positive friction");
    int kk = std::abs(k);
    int M = baseGrid > 0 ? baseGrid : std::max(1000, 120 * kk);
    auto run = [&](int grid) {
        return kk == 0 ? stokesRun0(r0, R, outer, alpha, s_n, s_tau, a_n, a_tau, g_n, g_tau, grid)
                       : stokesRunK(kk, r0, R, outer, alpha, s_n, s_tau, a_n, a_tau, g_n, g_tau,
                                    grid);
    };
    OracleStokesResult a = run(M), b = run(2 * M), c = run(4 * M);

    OracleStokesResult out;
    auto combine = [&](cplx OracleStokesResult::* f, const char* what) {
        cplx e12 = extrap(a.*f, b.*f);
        cplx e23 = extrap(b.*f, c.*f);
        richardsonGate(e12, e23, what);
        out.*f = e23;
    };
    combine(&OracleStokesResult::vrPlus, "vr+");
    combine(&OracleStokesResult::vthPlus, "vth+");
    combine(&OracleStokesResult::vrMinus, "vr-");
    combine(&OracleStokesResult::vthMinus, "vth-");
    combine(&OracleStokesResult::pPlus, "p+");
    combine(&OracleStokesResult::pMinus, "p-");
    combine(&OracleStokesResult::trPlus, "tr+");
    combine(&OracleStokesResult::trMinus, "tr-");
    combine(&OracleStokesResult::tthPlus, "tth+");
    combine(&OracleStokesResult::tthMinus, "tth-");
    return out;
}

} // namespace mss
