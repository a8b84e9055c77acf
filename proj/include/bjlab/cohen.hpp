// Copyright 2026 The bjlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BJLAB_COHEN_HPP
#define BJLAB_COHEN_HPP

#include <optional>

#include "bjlab/kernels.hpp"
#include "bjlab/transforms.hpp"

namespace bjlab {

struct CohenResult {
  TFDistribution distribution;
  CohenKernelSpec kernel_used;
  std::optional<AmbiguityMatrix> ambiguity_snapshot;
};

// Q = F_sigma(Theta * F_sigma(W(f,g))): transform the cross-Wigner
// distribution to the ambiguity plane, multiply by the sampled kernel,
// transform back. The auto case (g = f) returns a real-valued distribution
// after the imaginary-residual check.
CohenResult cohen_apply(const Signal& f, const Signal& g,
                        const CohenKernelSpec& spec,
                        bool keep_ambiguity = false);

// Born-Jordan distribution of order n: cohen_apply(f, f, bj_order(n)).
CohenResult bjd(const Signal& f, int n);

// Max over the N x N ambiguity grid of
// |(pi z1 z2)^order sinc^order(z1 z2) - sin^order(pi z1 z2)|,
// the algebraic content of applying (grad_x . grad_omega)^order in the
// symplectic-Fourier domain.
double smoothing_multiplier_check(int order, int n);

// F_sigma^{-1}[multiplier * F_sigma(D)]; linear in D.
TFDistribution fourier_multiplier_apply(const TFDistribution& d,
                                        const KernelMatrix& multiplier);

}  // namespace bjlab

#endif  // BJLAB_COHEN_HPP
