// Copyright 2026 The lsk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <span>
#include <vector>

namespace lsk::ttsback {

// Coefficients A_l of the [5/5] Padé approximant of exp(x):
//   exp(x) ~ sum_l A_l x^l / sum_l A_l (-x)^l,
//   A_l = (2L - l)! L! / ((2L)! l! (L - l)!),  L = 5.
inline constexpr int kPadeOrder = 5;
inline constexpr std::array<double, kPadeOrder + 1> kPade = {
    1.0, 1.0 / 2.0, 1.0 / 9.0, 1.0 / 72.0, 1.0 / 1008.0, 1.0 / 30240.0};

// Mel-cepstrum c(0..M) to MLSA filter coefficients b(0..M):
// b(M) = c(M), b(m) = c(m) - alpha * b(m+1).
std::vector<double> mc2b(std::span<const double> mc, double alpha);

// Per-sample MLSA filter realizing exp(b(0)) * exp(F1(z)) * exp(F2(z)) where
// F1 = b(1) Phi_1 and F2 = sum_{m>=2} b(m) Phi_m, each exponential replaced
// by the Padé approximant above.
class MlsaFilter {
 public:
  MlsaFilter(int order, double alpha);

  // Filters one sample with coefficients `b` (size order + 1).
  double operator()(double x, std::span<const double> b);
  void reset();
  int order() const { return order_; }
  double alpha() const { return alpha_; }

 private:
  double stage1(double x, double b1);
  double stage2(double x, std::span<const double> b);
  double fir(double x, std::span<const double> b, double* d);

  int order_;
  double alpha_;
  double beta_;  // 1 - alpha^2
  std::vector<double> d1_;  // first stage: delays then Padé taps
  std::vector<double> d2_;  // second stage: kPadeOrder all-pass chains then taps
};

// Filters a whole excitation with frame-wise mel-cepstra (rows of size
// order + 1). The excitation holds `samples_per_frame` samples per frame;
// filter coefficients are interpolated linearly between frame centres.
// Throws E_DIM_MISMATCH for a wrong order or length.
std::vector<double> mlsa_filter(std::span<const double> excitation,
                                std::span<const std::vector<double>> mgc, double alpha,
                                int order);

}  // namespace lsk::ttsback
