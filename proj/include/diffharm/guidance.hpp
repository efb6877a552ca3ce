#ifndef DIFFHARM_GUIDANCE_HPP
#define DIFFHARM_GUIDANCE_HPP

#include <cstdint>
#include <vector>

#include "diffharm/codec.hpp"
#include "diffharm/rng.hpp"
#include "diffharm/schedule.hpp"
#include "diffharm/tensor.hpp"

namespace diffharm {

struct GuidanceConfig {
    // Gradient scale. Positive steers sampling toward lower appearance
    // distance; the sign is deliberately part of the value.
    double scale = 10.0;
    int n = 4; // noisy guidance copies per step
    std::uint64_t rng_seed = 0;
};

// Appearance consistency discriminator: mean over pixels of the squared
// difference of channel-mean grayscales. Blind to zero-sum chroma shifts.
double appearance_distance(const Tensor& x1, const Tensor& x2);

// Analytic gradient of appearance_distance in its first argument:
// dD/dx_c(p) = 2 (C(x)(p) - C(y)(p)) / (channels * H * W), equal across
// channels at each pixel.
Tensor appearance_distance_grad(const Tensor& x, const Tensor& y);

// n independent forward-noisings of the guidance image at level t.
std::vector<Tensor> noisy_guidance_set(const Tensor& y, int t,
                                       const NoiseSchedule& sched, int n,
                                       Rng& rng);

// Gradient of sum_i D(x_t, y_t^i) with respect to x_t.
Tensor guidance_gradient(const Tensor& x_t,
                         const std::vector<Tensor>& guidance_set);

// Pullback of guidance_gradient through the decoder.
Tensor latent_guidance_gradient(const Tensor& h_t,
                                const std::vector<Tensor>& guidance_set,
                                const LatentCodec& codec);

} // namespace diffharm

#endif
