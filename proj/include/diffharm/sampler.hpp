#ifndef DIFFHARM_SAMPLER_HPP
#define DIFFHARM_SAMPLER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "diffharm/codec.hpp"
#include "diffharm/estimator.hpp"
#include "diffharm/guidance.hpp"
#include "diffharm/image.hpp"
#include "diffharm/rng.hpp"
#include "diffharm/schedule.hpp"

namespace diffharm {

struct SamplerConfig {
    TimestepPlan plan;
    double eta = 0.0; // 0 = deterministic DDIM
    std::optional<GuidanceConfig> guidance;
    std::uint64_t seed = 0;
    bool verbose = false; // per-step progress on stderr
};

// One DDIM update from level t to t_prev. eta scales the stochastic term;
// at t_prev = 0 the predicted clean latent is returned exactly.
Tensor ddim_step(const Tensor& h_t, const Tensor& eps_hat, int t, int t_prev,
                 const NoiseSchedule& sched, double eta, Rng& rng);

// Full guided sampling loop. The latent is the state of record; decoding
// happens for guidance gradients and the final output only, which is
// clamped to [0,1]. condition and guidance_image are pixel-space tensors
// of shape pixel_shape (either may be null; guidance_image is required
// when cfg.guidance is set).
ImageRGB sample(const NoiseEstimator& estimator, const LatentCodec& codec,
                const Shape& pixel_shape, const Tensor* condition,
                const Tensor* guidance_image, const SamplerConfig& cfg,
                const NoiseSchedule& sched);

// k runs with seeds base_seed .. base_seed + k - 1.
std::vector<ImageRGB> sample_k(const NoiseEstimator& estimator,
                               const LatentCodec& codec,
                               const Shape& pixel_shape,
                               const Tensor* condition,
                               const Tensor* guidance_image,
                               const SamplerConfig& cfg,
                               const NoiseSchedule& sched, int k,
                               std::uint64_t base_seed);

} // namespace diffharm

#endif
