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

#ifndef ARTAMP_SRC_FFT_HPP_
#define ARTAMP_SRC_FFT_HPP_

#include <complex>
#include <span>
#include <vector>

namespace artamp::internal {

// Real-input DFT of a fixed size n, producing n/2+1 bins. Plans are shared
// process-wide; instances are cheap and safe to use from several threads.
class RealFft {
 public:
  explicit RealFft(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  // Unnormalized forward transform.
  void Forward(std::span<const double> in,
               std::span<std::complex<double>> out) const;
  // Inverse transform scaled by 1/n, so Inverse(Forward(x)) == x.
  void Inverse(std::span<const std::complex<double>> in,
               std::span<double> out) const;

 private:
  std::size_t n_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace artamp::internal

#endif  // ARTAMP_SRC_FFT_HPP_
