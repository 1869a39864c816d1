#pragma once

#include <cstddef>
#include <vector>

#include "core/medium.hpp"

namespace dsp {

// Periodic comoving-frame grid. n must be a power of two so dxi = length/n is
// exact in binary floating point and dxi * n == length holds exactly.
struct Grid1D {
  std::size_t n = 0;
  double length = 0;              // m
  double dxi = 0;                 // m
  std::vector<double> xi;         // [-L/2, L/2)
  std::vector<double> q;          // 2 pi m / L in FFT index order, m in [-n/2, n/2)

  static Grid1D make(std::size_t n_points, double domain_length);
};

// Per-run FFT buffers and plans. Plan creation is serialized internally (the
// planner is not reentrant); execution is safe from concurrent runs as long
// as each run owns its workspace.
class SpectralWorkspace {
 public:
  explicit SpectralWorkspace(std::size_t n);
  ~SpectralWorkspace();
  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  std::size_t size() const { return n_; }

  // In-place unnormalized forward transform.
  void forward(std::vector<cplx>& field);
  // In-place inverse transform, scaled by 1/n.
  void inverse(std::vector<cplx>& field);

  // exp(-i q^2 dtau) multipliers, cached while dtau repeats.
  const std::vector<cplx>& dispersion_multiplier(const std::vector<double>& q, double dtau);

 private:
  std::size_t n_;
  void* buffer_ = nullptr;  // fftw_complex[n]
  void* plan_fwd_ = nullptr;
  void* plan_bwd_ = nullptr;
  std::vector<cplx> multiplier_;
  double cached_dtau_ = 0;
  bool multiplier_valid_ = false;
};

}  // namespace dsp
