// Copyright 2026  The artamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "artamp/error.hpp"

namespace artamp::internal {
namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan inverse;
};

// FFTW's planner is not thread-safe; execution of an existing plan on new
// arrays is.
std::mutex& PlannerMutex() {
  static std::mutex m;
  return m;
}

PlanPair GetPlans(std::size_t n) {
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard<std::mutex> lock(PlannerMutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  double* in = fftw_alloc_real(n);
  fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
  const int size = static_cast<int>(n);
  PlanPair plans{
      fftw_plan_dft_r2c_1d(size, in, out, FFTW_ESTIMATE),
      fftw_plan_dft_c2r_1d(size, out, in, FFTW_ESTIMATE | FFTW_DESTROY_INPUT)};
  fftw_free(in);
  fftw_free(out);
  cache.emplace(n, plans);
  return plans;
}

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};

}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "FFT size must be > 0");
  PlanPair plans = GetPlans(n);
  forward_plan_ = plans.forward;
  inverse_plan_ = plans.inverse;
}

void RealFft::Forward(std::span<const double> in,
                      std::span<std::complex<double>> out) const {
  std::unique_ptr<double, FftwDeleter> buf(fftw_alloc_real(n_));
  std::unique_ptr<fftw_complex, FftwDeleter> spec(fftw_alloc_complex(bins()));
  std::fill_n(buf.get(), n_, 0.0);
  std::copy_n(in.begin(), std::min(in.size(), n_), buf.get());
  fftw_execute_dft_r2c(static_cast<fftw_plan>(forward_plan_), buf.get(),
                       spec.get());
  const std::size_t m = std::min(out.size(), bins());
  for (std::size_t k = 0; k < m; ++k)
    out[k] = std::complex<double>(spec.get()[k][0], spec.get()[k][1]);
}

void RealFft::Inverse(std::span<const std::complex<double>> in,
                      std::span<double> out) const {
  std::unique_ptr<fftw_complex, FftwDeleter> spec(fftw_alloc_complex(bins()));
  std::unique_ptr<double, FftwDeleter> buf(fftw_alloc_real(n_));
  for (std::size_t k = 0; k < bins(); ++k) {
    const std::complex<double> v = k < in.size() ? in[k] : 0.0;
    spec.get()[k][0] = v.real();
    spec.get()[k][1] = v.imag();
  }
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inverse_plan_), spec.get(),
                       buf.get());
  const double scale = 1.0 / static_cast<double>(n_);
  const std::size_t m = std::min(out.size(), n_);
  for (std::size_t i = 0; i < m; ++i) out[i] = buf.get()[i] * scale;
}

}  // namespace artamp::internal
