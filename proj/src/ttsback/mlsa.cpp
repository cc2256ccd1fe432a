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

#include "lsk/ttsback/mlsa.hpp"

#include <cmath>

#include "lsk/common/error.hpp"

namespace lsk::ttsback {

std::vector<double> mc2b(std::span<const double> mc, double alpha) {
  std::vector<double> b(mc.begin(), mc.end());
  if (b.empty()) return b;
  for (std::size_t m = b.size() - 1; m-- > 0;) b[m] = mc[m] - alpha * b[m + 1];
  return b;
}

MlsaFilter::MlsaFilter(int order, double alpha)
    : order_(order), alpha_(alpha), beta_(1.0 - alpha * alpha) {
  if (order < 1) throw Error(Errc::kInvalidArgument, "MLSA order must be at least 1");
  if (!(alpha > -1.0 && alpha < 1.0)) throw Error(Errc::kInvalidArgument, "alpha outside (-1,1)");
  reset();
}

void MlsaFilter::reset() {
  d1_.assign(2 * (kPadeOrder + 1), 0.0);
  d2_.assign(kPadeOrder * (order_ + 2) + kPadeOrder + 1, 0.0);
}

double MlsaFilter::stage1(double x, double b1) {
  double* d = d1_.data();
  double* pt = d + kPadeOrder + 1;
  double out = 0.0;
  for (int i = kPadeOrder; i >= 1; --i) {
    d[i] = beta_ * pt[i - 1] + alpha_ * d[i];
    pt[i] = d[i] * b1;
    const double v = pt[i] * kPade[i];
    x += (i & 1) ? v : -v;
    out += v;
  }
  pt[0] = x;
  return out + x;
}

// One branch of the second stage: the warped delay chain of F2 applied to x.
double MlsaFilter::fir(double x, std::span<const double> b, double* d) {
  d[0] = x;
  d[1] = beta_ * d[0] + alpha_ * d[1];
  for (int i = 2; i <= order_; ++i) d[i] += alpha_ * (d[i + 1] - d[i - 1]);
  double y = 0.0;
  for (int i = 2; i <= order_; ++i) y += d[i] * b[i];
  for (int i = order_ + 1; i > 1; --i) d[i] = d[i - 1];
  return y;
}

double MlsaFilter::stage2(double x, std::span<const double> b) {
  double* pt = d2_.data() + kPadeOrder * (order_ + 2);
  double out = 0.0;
  for (int i = kPadeOrder; i >= 1; --i) {
    pt[i] = fir(pt[i - 1], b, d2_.data() + (i - 1) * (order_ + 2));
    const double v = pt[i] * kPade[i];
    x += (i & 1) ? v : -v;
    out += v;
  }
  pt[0] = x;
  return out + x;
}

double MlsaFilter::operator()(double x, std::span<const double> b) {
  const double y = stage1(x, b[1]);
  return std::exp(b[0]) * stage2(y, b);
}

std::vector<double> mlsa_filter(std::span<const double> excitation,
                                std::span<const std::vector<double>> mgc, double alpha,
                                int order) {
  const std::size_t frames = mgc.size();
  for (const auto& row : mgc) {
    if (row.size() != static_cast<std::size_t>(order) + 1) {
      throw Error(Errc::kDimMismatch, "mel-cepstrum has " + std::to_string(row.size()) +
                                          " coefficients, voice order needs " +
                                          std::to_string(order + 1));
    }
  }
  if (frames == 0) {
    if (!excitation.empty()) throw Error(Errc::kDimMismatch, "excitation without frames");
    return {};
  }
  if (excitation.size() % frames != 0) {
    throw Error(Errc::kDimMismatch, "excitation length " + std::to_string(excitation.size()) +
                                        " is not a multiple of " + std::to_string(frames) +
                                        " frames");
  }
  const std::size_t period = excitation.size() / frames;
  std::vector<std::vector<double>> b(frames);
  for (std::size_t f = 0; f < frames; ++f) b[f] = mc2b(mgc[f], alpha);

  MlsaFilter filter(order, alpha);
  std::vector<double> out(excitation.size());
  std::vector<double> coef(order + 1);
  const double half = static_cast<double>(period) / 2.0;
  for (std::size_t n = 0; n < excitation.size(); ++n) {
    // Position relative to frame centres at f * period + period / 2.
    const double t = (static_cast<double>(n) - half) / static_cast<double>(period);
    if (t <= 0.0 || frames == 1) {
      coef = b.front();
    } else if (t >= static_cast<double>(frames - 1)) {
      coef = b.back();
    } else {
      const auto f = static_cast<std::size_t>(t);
      const double w = t - static_cast<double>(f);
      for (int m = 0; m <= order; ++m) coef[m] = (1.0 - w) * b[f][m] + w * b[f + 1][m];
    }
    out[n] = filter(excitation[n], coef);
  }
  return out;
}

}  // namespace lsk::ttsback
