#include "diffharm/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diffharm/common.hpp"
#include "diffharm/image.hpp"
#include "diffharm/png_io.hpp"

namespace diffharm {

namespace {

class SinglePointEstimator final : public NoiseEstimator {
public:
    SinglePointEstimator(Tensor x0, NoiseSchedule sched)
        : x0_(std::move(x0)), sched_(std::move(sched)) {}

    Tensor predict(const Tensor& h_t, int t, const Tensor*) const override {
        require_same_shape(h_t, x0_, "single_point_estimator");
        require_timestep(sched_, t, 1, "single_point_estimator");
        const double ab = sched_.alpha_bar(t);
        const double a = std::sqrt(ab);
        const double inv = 1.0 / std::sqrt(1.0 - ab);
        Tensor eps = h_t;
        for (std::size_t i = 0; i < eps.data.size(); ++i)
            eps.data[i] = (eps.data[i] - a * x0_.data[i]) * inv;
        return eps;
    }

private:
    Tensor x0_;
    NoiseSchedule sched_;
};

double sq_dist(const Tensor& a, const Tensor& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        acc += d * d;
    }
    return acc;
}

} // namespace

std::unique_ptr<NoiseEstimator> single_point_estimator(
    Tensor x0, const NoiseSchedule& sched) {
    return std::make_unique<SinglePointEstimator>(std::move(x0), sched);
}

MixtureEstimator::MixtureEstimator(PointDataset data,
                                   std::optional<double> bandwidth,
                                   const NoiseSchedule& sched)
    : data_(std::move(data)), bandwidth_(bandwidth), sched_(sched) {
    if (data_.items.empty()) {
        throw ConfigError("mixture_estimator: dataset is empty");
    }
    if (bandwidth_ && !(*bandwidth_ > 0.0)) {
        throw ConfigError("mixture_estimator: bandwidth must be > 0, got " +
                          std::to_string(*bandwidth_));
    }
    for (const auto& item : data_.items) {
        if (!(item.x0.shape == data_.items.front().x0.shape)) {
            throw ShapeError("mixture_estimator: nonuniform x0 shapes " +
                             item.x0.shape.str() + " vs " +
                             data_.items.front().x0.shape.str());
        }
    }
}

std::vector<double> MixtureEstimator::posterior_weights(
    const Tensor& h_t, int t, const Tensor* condition) const {
    require_timestep(sched_, t, 1, "mixture_estimator");
    require_same_shape(h_t, data_.items.front().x0, "mixture_estimator");

    const double ab = sched_.alpha_bar(t);
    const double a = std::sqrt(ab);
    const double var = 1.0 - ab;

    const std::size_t n = data_.items.size();
    std::vector<double> logw(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Tensor& x = data_.items[i].x0;
        double d2 = 0.0;
        for (std::size_t j = 0; j < h_t.data.size(); ++j) {
            const double d = h_t.data[j] - a * x.data[j];
            d2 += d * d;
        }
        double lw = -d2 / (2.0 * var);
        if (condition && bandwidth_ && data_.items[i].condition) {
            require_same_shape(*condition, *data_.items[i].condition,
                               "mixture_estimator condition");
            lw -= sq_dist(*condition, *data_.items[i].condition) /
                  (2.0 * (*bandwidth_) * (*bandwidth_));
        }
        logw[i] = lw;
    }

    const double m = *std::max_element(logw.begin(), logw.end());
    double z = 0.0;
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::exp(logw[i] - m);
        z += w[i];
    }
    for (double& v : w) v /= z;
    return w;
}

Tensor MixtureEstimator::posterior_mean(const Tensor& h_t, int t,
                                        const Tensor* condition) const {
    const auto w = posterior_weights(h_t, t, condition);
    Tensor mean(h_t.shape, 0.0);
    for (std::size_t i = 0; i < w.size(); ++i)
        axpy(mean, w[i], data_.items[i].x0);
    return mean;
}

Tensor MixtureEstimator::predict(const Tensor& h_t, int t,
                                 const Tensor* condition) const {
    const Tensor mean = posterior_mean(h_t, t, condition);
    const double ab = sched_.alpha_bar(t);
    const double a = std::sqrt(ab);
    const double inv = 1.0 / std::sqrt(1.0 - ab);
    Tensor eps = h_t;
    for (std::size_t i = 0; i < eps.data.size(); ++i)
        eps.data[i] = (eps.data[i] - a * mean.data[i]) * inv;
    return eps;
}

std::unique_ptr<NoiseEstimator> mixture_estimator(
    PointDataset data, std::optional<double> condition_bandwidth,
    const NoiseSchedule& sched) {
    return std::make_unique<MixtureEstimator>(std::move(data),
                                              condition_bandwidth, sched);
}

PointDataset load_point_dataset(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw IoError("dataset directory not found: " + dir.string());
    }
    const std::string cond_suffix = "_cond";
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".png") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());

    PointDataset ds;
    for (const auto& f : files) {
        const std::string stem = f.stem().string();
        if (stem.size() >= cond_suffix.size() &&
            stem.ends_with(cond_suffix)) {
            continue;
        }
        PointDataset::Item item;
        item.x0 = image_to_tensor(load_png(f));
        const auto cond_path = f.parent_path() / (stem + cond_suffix + ".png");
        if (std::filesystem::exists(cond_path)) {
            item.condition = image_to_tensor(load_png(cond_path));
        }
        ds.items.push_back(std::move(item));
    }
    if (ds.items.empty()) {
        throw IoError("dataset directory has no PNG points: " + dir.string());
    }
    return ds;
}

} // namespace diffharm
