#pragma once

#include <vector>

#include "gelflow/flow_field.hpp"
#include "gelflow/image.hpp"

namespace gelflow {

// Scalar hyperparameters of the loss terms. Defaults follow the standard
// working point: alpha 0.85, beta 10 on [0,1] intensities, lambda_theta and
// lambda_z 0.01, lambda_dc 75, lambda_df 0.01, per-scale weights 1.
struct EnergyWeights {
  double alpha = 0.85;         // SSIM vs L1 balance, in [0,1]
  double beta = 10.0;          // edge sensitivity of the anti-edge weight
  double lambda_theta = 0.01;  // shear coefficient
  double lambda_z = 0.01;      // rotation coefficient
  double lambda_dc = 75.0;     // decomposition loss weight
  double lambda_df = 0.01;     // deformation loss weight
  std::vector<double> lambda_s;  // per-scale weights; missing entries mean 1.0

  double scale_weight(int level) const {
    return level < static_cast<int>(lambda_s.size()) ? lambda_s[level] : 1.0;
  }

  // Throws InvalidInput when a field is outside its documented range.
  void validate() const;
};

struct ScaleLoss {
  double photometric = 0.0;
  double decomposition = 0.0;
  double deformation = 0.0;
};

// Multi-scale objective: total = sum_s lambda_s * (ph_s + lambda_dc * dc_s +
// lambda_df * df_s). per_scale holds the raw (unweighted) per-level terms;
// the three aggregate fields carry their lambda factors.
struct LossBreakdown {
  double photometric = 0.0;
  double decomposition = 0.0;
  double deformation = 0.0;
  double total = 0.0;
  std::vector<ScaleLoss> per_scale;
};

// Per-pixel SSIM over a reflect-padded 3x3 uniform window with c1 = 0.01^2,
// c2 = 0.03^2 on the [0,1] range; channels averaged into a 1-channel map.
Image ssim_map(const Image& a, const Image& b);

// mean_p [ alpha * (1 - SSIM)/2 + (1 - alpha) * mean_c |a - b| ].
double photometric_loss(const Image& i1s, const Image& warped, const EnergyWeights& w);

// 1 - exp(-beta * mean_c(|gx| + |gy|)) per pixel; 1-channel map.
Image anti_edge_weight(const Image& i1s, double beta);

// mean_p weight * (|eps_xx| + |eps_yy| + 2*lambda_theta*|eps_xy| +
// 2*lambda_z*|omega|).
double decomposition_loss(const FlowField& flow, const Image& i1s, const EnergyWeights& w);

// mean_p weight * (|dR/dx| + |dR/dy|) with R the window-fit deformation ratio
// and the same forward-difference stencil as decompose.
double deformation_loss(const FlowField& flow, const Image& i1s, const EnergyWeights& w);

// Single level: photometric(i1s, warp(i2s, flow)) + lambda_dc * decomposition
// + lambda_df * deformation. The solver minimizes exactly this.
double level_energy(const Image& i1s, const Image& i2s, const FlowField& flow,
                    const EnergyWeights& w);
ScaleLoss level_losses(const Image& i1s, const Image& i2s, const FlowField& flow,
                       const EnergyWeights& w);

// Multi-scale combination over levels 0..l-2 (the coarsest level only seeds
// the initialization and is excluded from the objective). flows[s] pairs with
// pyramid level s and must cover levels 0..l-2.
LossBreakdown total_energy(const ImagePyramid& pyr1, const ImagePyramid& pyr2,
                           const std::vector<FlowField>& flows, const EnergyWeights& w);

// Analytic gradients of the three level terms with respect to the flow,
// assembled through the fixed adjoints of warping, the difference stencils,
// and the window least-squares map. L1 kinks use sign(0) = 0.
FlowField photometric_loss_gradient(const Image& i1s, const Image& i2s, const FlowField& flow,
                                    const EnergyWeights& w);
FlowField decomposition_loss_gradient(const FlowField& flow, const Image& i1s,
                                      const EnergyWeights& w);
FlowField deformation_loss_gradient(const FlowField& flow, const Image& i1s,
                                    const EnergyWeights& w);

// d(level_energy)/d(flow).
FlowField energy_gradient(const Image& i1s, const Image& i2s, const FlowField& flow,
                          const EnergyWeights& w);

}  // namespace gelflow
