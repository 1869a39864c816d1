#include "core/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace dsp {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// FFTW's planner is not reentrant; concurrent sweep runs each build their own
// workspace, so creation/destruction is funneled through one lock.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Grid1D Grid1D::make(std::size_t n_points, double domain_length) {
  if (!is_power_of_two(n_points) || n_points < 256)
    throw std::invalid_argument("grid.points must be a power of two >= 256");
  if (!(domain_length > 0) || !std::isfinite(domain_length))
    throw std::invalid_argument("grid.length must be finite and > 0");
  Grid1D g;
  g.n = n_points;
  g.length = domain_length;
  g.dxi = domain_length / static_cast<double>(n_points);
  g.xi.resize(n_points);
  g.q.resize(n_points);
  const double dq = 2.0 * kPi / domain_length;
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n_points / 2);
  for (std::size_t j = 0; j < n_points; ++j) {
    g.xi[j] = (static_cast<double>(j) - static_cast<double>(half)) * g.dxi;
    const std::ptrdiff_t m =
        static_cast<std::ptrdiff_t>(j) < half ? static_cast<std::ptrdiff_t>(j)
                                              : static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(n_points);
    g.q[j] = dq * static_cast<double>(m);
  }
  return g;
}

SpectralWorkspace::SpectralWorkspace(std::size_t n) : n_(n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("SpectralWorkspace: n must be a power of two");
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_complex* buf = fftw_alloc_complex(n);
  if (!buf) throw std::bad_alloc();
  buffer_ = buf;
  // FFTW_ESTIMATE keeps planning deterministic (no runtime measurement);
  // FFTW_UNALIGNED lets the plans run directly on std::vector storage.
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("SpectralWorkspace: FFT planning failed");
}

SpectralWorkspace::~SpectralWorkspace() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  if (buffer_) fftw_free(static_cast<fftw_complex*>(buffer_));
}

void SpectralWorkspace::forward(std::vector<cplx>& field) {
  if (field.size() != n_) throw std::invalid_argument("forward: field size mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(field.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), p, p);
}

void SpectralWorkspace::inverse(std::vector<cplx>& field) {
  if (field.size() != n_) throw std::invalid_argument("inverse: field size mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(field.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), p, p);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : field) v *= scale;
}

const std::vector<cplx>& SpectralWorkspace::dispersion_multiplier(const std::vector<double>& q,
                                                                  double dtau) {
  if (q.size() != n_) throw std::invalid_argument("dispersion_multiplier: grid size mismatch");
  if (!multiplier_valid_ || dtau != cached_dtau_) {
    multiplier_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j)
      multiplier_[j] = std::polar(1.0, -q[j] * q[j] * dtau);
    cached_dtau_ = dtau;
    multiplier_valid_ = true;
  }
  return multiplier_;
}

}  // namespace dsp
