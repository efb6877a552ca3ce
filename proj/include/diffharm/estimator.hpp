#ifndef DIFFHARM_ESTIMATOR_HPP
#define DIFFHARM_ESTIMATOR_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "diffharm/schedule.hpp"
#include "diffharm/tensor.hpp"

namespace diffharm {

// Conditional noise estimator: predicts the noise component of a noisy
// latent. Implementations are closed-form, so sampler behavior is exactly
// checkable without a trained network.
class NoiseEstimator {
public:
    virtual ~NoiseEstimator() = default;

    // condition may be null for unconditional prediction. t >= 1.
    virtual Tensor predict(const Tensor& h_t, int t,
                           const Tensor* condition) const = 0;
};

struct PointDataset {
    struct Item {
        Tensor x0;
        std::optional<Tensor> condition;
    };
    std::vector<Item> items;
};

// Loads every *.png in a directory as one dataset point; a file named
// <stem>_cond.png attaches a condition to <stem>.png.
PointDataset load_point_dataset(const std::filesystem::path& dir);

// Exact MMSE estimator for a point-mass data distribution:
// eps_hat = (h_t - sqrt(abar_t) x0) / sqrt(1 - abar_t).
std::unique_ptr<NoiseEstimator> single_point_estimator(
    Tensor x0, const NoiseSchedule& sched);

// Exact MMSE estimator for a finite empirical distribution. Posterior
// weights are computed in the log domain with a max shift; conditioning
// reweights by a Gaussian kernel in condition distance.
class MixtureEstimator final : public NoiseEstimator {
public:
    MixtureEstimator(PointDataset data, std::optional<double> bandwidth,
                     const NoiseSchedule& sched);

    Tensor predict(const Tensor& h_t, int t,
                   const Tensor* condition) const override;

    // Normalized posterior weights over dataset items.
    std::vector<double> posterior_weights(const Tensor& h_t, int t,
                                          const Tensor* condition) const;

    // E[x0 | h_t, c], the weight-averaged dataset point.
    Tensor posterior_mean(const Tensor& h_t, int t,
                          const Tensor* condition) const;

private:
    PointDataset data_;
    std::optional<double> bandwidth_;
    NoiseSchedule sched_;
};

std::unique_ptr<NoiseEstimator> mixture_estimator(
    PointDataset data, std::optional<double> condition_bandwidth,
    const NoiseSchedule& sched);

} // namespace diffharm

#endif
