#pragma once

// Frozen expected values for the ultraslow preset, computed independently
// with 50-digit arbitrary-precision arithmetic from the closed-form
// coefficient expressions. Two light-speed conventions are kept: the exact SI
// value (library default) and the rounded 3.0e8 that the five-figure desk
// numbers assume.

namespace oracle {

// geometry of the mixing angle (independent of c)
inline constexpr double kCosTheta = 1.5811388298865473e-5;
inline constexpr double kTanTheta = 63245.553203367587;
inline constexpr double kCollectiveG = 6.3245553203367587e12;

// susceptibilities at g=2e6, N=1e13, Omega=1e8, Delta=-1e7, gamma_ab=1e6,
// omega0=2e15 (independent of c)
inline constexpr double kChi1 = 40.0;
inline constexpr double kChi3Re = 4.8484799015611656e-2;
inline constexpr double kChi3Im = 4.8974544460213794e-5;

// coefficients with c = 3.0e8
inline constexpr double kVg_c3 = 7.4999999981250000e-2;
inline constexpr double kBeta2_c3 = -2.6666666666666667e-5;
inline constexpr double kEtaRe_c3 = 3.2323199343741104e12;
inline constexpr double kCnRe_c3 = 808.07998379554760;
inline constexpr double kCnIm_c3 = 0.81624240787429051;
inline constexpr double kBigK_c3 = 8.8888888955555556e7;

// coefficients with c = 2.99792458e8 (SI)
inline constexpr double kVg_si = 7.4948114481262971e-2;
inline constexpr double kCnRe_si = 809.19921533933080;
inline constexpr double kCnIm_si = 0.81737294478720283;
inline constexpr double kBigK_si = 8.9012004551048478e7;

inline constexpr double kDeltaLoss = 1.0101004947963284e-3;  // Im(c_n)/|c_n|

// soliton family at the preset (a0cos0 = 0.1)
inline constexpr double kM_c3 = 314.64273470880846;
inline constexpr double kM_si = 314.42506276731868;
inline constexpr double kKappa = 6324.5537078860037;  // c-independent
inline constexpr double kHwhm = 2.0822937992964137e-4;
inline constexpr double kTau_c3 = 2.7763917330893162e-3;
inline constexpr double kTau_si = 2.7783137890907010e-3;
inline constexpr double kPrintedDxi = 1.8033184083672059e-4;
inline constexpr double kPrintedTau_c3 = 1.0411463685054138e-8;

// normalization units E0 = M(0), L = 1/A0, tau = g^2 N/(Omega^2 A0 c)
inline constexpr double kLUnit = 1.5811388298865473e-4;
inline constexpr double kTauUnit_c3 = 2.1081851065153964e-3;
inline constexpr double kTauUnit_si = 2.1096445726950840e-3;

// polariton estimates
inline constexpr double kEpsPeak_c3 = 4.9749384538978874e-3;
inline constexpr double kBspResidual_c3 = 1.9800010096057522e-11;
inline constexpr double kAdiabaticity_c3 = 5.6949414278972882e-11;

// dark preset Omega = 3e6, Delta = -1e7, a0cos0 = 0.02, c = SI
inline constexpr double kDarkCosTheta = 4.7434164902520354e-7;
inline constexpr double kDarkCnRe_si = -86983.452657975758;
inline constexpr double kDarkCnIm_si = 9558.6211712061272;
inline constexpr double kDarkM_si = 201.57290247411931;
inline constexpr double kDarkKappa = 42037.363740300163;
inline constexpr double kDarkDeltaLoss = 0.10923255186885404;

// amplitude-law ratio M(0.5e8)/M(1e8) at c = SI
inline constexpr double kMRatioHalfOmega = 0.98473595063451631;

// exact perturbation coefficient p = (1/2) d ln|c_n| / dtheta at the preset
inline constexpr double kPerturbationExact = 63884.331993835766;

}  // namespace oracle
