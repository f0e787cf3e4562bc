// Thin wrapper around FFTW3 for the 1-D and 2-D complex transforms used by
// the spectral operators. Plans are cached per (size, direction) and created
// with FFTW_ESTIMATE | FFTW_UNALIGNED so they are deterministic and work on
// arbitrary std::vector storage.
#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace qclab {

using cplx = std::complex<double>;

namespace detail {

class FftPlanCache {
 public:
  static FftPlanCache& instance() {
    static FftPlanCache cache;
    return cache;
  }

  void execute_1d(std::vector<cplx>& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    fftw_plan plan = nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto key = std::make_pair(n, inverse ? -1 : 1);
      auto it = plans1d_.find(key);
      if (it == plans1d_.end()) {
        std::vector<cplx> scratch(n);
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch.data()),
                                reinterpret_cast<fftw_complex*>(scratch.data()),
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans1d_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(a.data()),
                     reinterpret_cast<fftw_complex*>(a.data()));
    if (inverse) {
      const double s = 1.0 / n;
      for (auto& v : a) v *= s;
    }
  }

  void execute_2d(std::vector<cplx>& a, int rows, int cols, bool inverse) {
    if (static_cast<int>(a.size()) != rows * cols)
      throw std::invalid_argument("fft2: size mismatch");
    fftw_plan plan = nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto key = std::make_tuple(rows, cols, inverse ? -1 : 1);
      auto it = plans2d_.find(key);
      if (it == plans2d_.end()) {
        std::vector<cplx> scratch(static_cast<size_t>(rows) * cols);
        plan = fftw_plan_dft_2d(rows, cols, reinterpret_cast<fftw_complex*>(scratch.data()),
                                reinterpret_cast<fftw_complex*>(scratch.data()),
                                inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans2d_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(a.data()),
                     reinterpret_cast<fftw_complex*>(a.data()));
    if (inverse) {
      const double s = 1.0 / (static_cast<double>(rows) * cols);
      for (auto& v : a) v *= s;
    }
  }

 private:
  FftPlanCache() = default;
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans1d_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans2d_;
};

}  // namespace detail

inline void fft(std::vector<cplx>& a) { detail::FftPlanCache::instance().execute_1d(a, false); }
inline void ifft(std::vector<cplx>& a) { detail::FftPlanCache::instance().execute_1d(a, true); }

inline void fft2(std::vector<cplx>& a, int rows, int cols) {
  detail::FftPlanCache::instance().execute_2d(a, rows, cols, false);
}
inline void ifft2(std::vector<cplx>& a, int rows, int cols) {
  detail::FftPlanCache::instance().execute_2d(a, rows, cols, true);
}

// Signed FFT frequency for index k of an n-point transform.
inline int fft_freq(int k, int n) { return (k <= n / 2 - 1 || n == 1) ? k : (k < n ? k - n : 0); }

}  // namespace qclab
