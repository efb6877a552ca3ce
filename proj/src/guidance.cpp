#include "diffharm/guidance.hpp"

#include <cmath>

#include "diffharm/common.hpp"

namespace diffharm {

namespace {

// Channel mean per pixel, C(x) of the discriminator.
std::vector<double> channel_mean(const Tensor& x) {
    const int ch = x.shape.channels;
    const std::size_t pixels = x.data.size() / ch;
    std::vector<double> out(pixels);
    for (std::size_t p = 0; p < pixels; ++p) {
        double acc = 0.0;
        for (int c = 0; c < ch; ++c) acc += x.data[p * ch + c];
        out[p] = acc / ch;
    }
    return out;
}

} // namespace

double appearance_distance(const Tensor& x1, const Tensor& x2) {
    require_same_shape(x1, x2, "appearance_distance");
    const auto c1 = channel_mean(x1);
    const auto c2 = channel_mean(x2);
    double acc = 0.0;
    for (std::size_t p = 0; p < c1.size(); ++p) {
        const double d = c1[p] - c2[p];
        acc += d * d;
    }
    return acc / static_cast<double>(c1.size());
}

Tensor appearance_distance_grad(const Tensor& x, const Tensor& y) {
    require_same_shape(x, y, "appearance_distance_grad");
    const auto cx = channel_mean(x);
    const auto cy = channel_mean(y);
    const int ch = x.shape.channels;
    const double norm =
        2.0 / (static_cast<double>(ch) * static_cast<double>(cx.size()));
    Tensor grad(x.shape);
    for (std::size_t p = 0; p < cx.size(); ++p) {
        const double g = norm * (cx[p] - cy[p]);
        for (int c = 0; c < ch; ++c) grad.data[p * ch + c] = g;
    }
    return grad;
}

std::vector<Tensor> noisy_guidance_set(const Tensor& y, int t,
                                       const NoiseSchedule& sched, int n,
                                       Rng& rng) {
    require_timestep(sched, t, 1, "noisy_guidance_set");
    if (n < 1) {
        throw ConfigError("noisy_guidance_set: n must be >= 1, got " +
                          std::to_string(n));
    }
    std::vector<Tensor> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Tensor eps = randn(y.shape, rng);
        out.push_back(q_sample(y, t, eps, sched));
    }
    return out;
}

Tensor guidance_gradient(const Tensor& x_t,
                         const std::vector<Tensor>& guidance_set) {
    if (guidance_set.empty()) {
        throw ConfigError("guidance_gradient: empty guidance set");
    }
    Tensor total(x_t.shape, 0.0);
    for (const Tensor& y : guidance_set) {
        axpy(total, 1.0, appearance_distance_grad(x_t, y));
    }
    return total;
}

Tensor latent_guidance_gradient(const Tensor& h_t,
                                const std::vector<Tensor>& guidance_set,
                                const LatentCodec& codec) {
    const Tensor decoded = codec.decode(h_t);
    return codec.decode_vjp(h_t, guidance_gradient(decoded, guidance_set));
}

} // namespace diffharm
