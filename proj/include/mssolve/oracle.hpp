#pragma once

#include <vector>

#include "mssolve/field.hpp"

namespace mss {

enum class MuOuter { Neumann, Dirichlet };
enum class VOuter { B1, B2, B3 };

struct OracleLaplaceResult {
    cplx jump;           // pullback of [grad mu . n], n pointing into Omega^+
    cplx dmuPlusInterface;   // d mu^+/dr at r0
    cplx dmuMinusInterface;  // d mu^-/dr at r0
    cplx tracePlus;          // mu^+(r0) (should equal the datum)
    cplx traceMinus;
    // finest-grid profiles for interior sampling (linear interpolation)
    std::vector<double> rPlus, rMinus;
    std::vector<cplx> muPlus, muMinus;

    cplx valuePlus(double r) const;
    cplx valueMinus(double r) const;
};

// Reference two-phase Laplace solve on concentric circles, one Fourier
// mode at a time. Second-order finite differences on three nested grids
// (M, 2M, 4M); successive Richardson extrapolants must agree to 1e-8 or
// ExtrapolationDisagreement is thrown. a1 is a constant volume source
// (enters mode 0 only), a4 the outer datum for the active condition.
OracleLaplaceResult oracle_laplace_mode(int k, double r0, double R, MuOuter outer,
                                        cplx fplus, cplx fminus, double a1 = 0.0,
                                        cplx a4 = cplx(0.0, 0.0), int baseGrid = 0);

struct OracleStokesResult {
    // interface traces (complex mode amplitudes, polar components)
    cplx vrPlus, vthPlus, vrMinus, vthMinus;
    cplx pPlus, pMinus;
    // traction components (2 D_rr - p, 2 D_rtheta) on each side at r0
    cplx trPlus, tthPlus, trMinus, tthMinus;
};

// Reference two-phase Stokes solve on concentric circles per mode, via the
// biharmonic stream-function/vorticity system for k >= 1 and the
// incompressibility-forced radial/azimuthal decomposition at k = 0.
// Jump data (s, a) are given in the interface (n, tau) frame, outer data g
// in the (n_dOmega, tau) frame. alpha is the friction constant of B2/B3.
OracleStokesResult oracle_stokes_mode(int k, double r0, double R, VOuter outer,
                                      double alpha, cplx s_n, cplx s_tau, cplx a_n,
                                      cplx a_tau, cplx g_n, cplx g_tau, int baseGrid = 0);

} // namespace mss
