#include "diffharm/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diffharm/common.hpp"

namespace diffharm {

NoiseSchedule linear_schedule(int T, double beta_start, double beta_end) {
    if (T < 1) {
        throw ConfigError("linear_schedule: T must be >= 1, got " +
                          std::to_string(T));
    }
    if (!(beta_start > 0.0) || !(beta_end < 1.0) || beta_start > beta_end) {
        throw ConfigError(
            "linear_schedule: need 0 < beta_start <= beta_end < 1, got "
            "beta_start=" + std::to_string(beta_start) +
            " beta_end=" + std::to_string(beta_end));
    }

    NoiseSchedule s;
    s.T = T;
    s.betas.resize(T);
    s.alphas.resize(T);
    s.alpha_bars.resize(T + 1);
    s.alpha_bars[0] = 1.0;
    for (int t = 1; t <= T; ++t) {
        const double b =
            (T == 1) ? beta_start
                     : beta_start + (beta_end - beta_start) * (t - 1) / (T - 1);
        s.betas[t - 1] = b;
        s.alphas[t - 1] = 1.0 - b;
        s.alpha_bars[t] = s.alpha_bars[t - 1] * s.alphas[t - 1];
    }
    return s;
}

void require_timestep(const NoiseSchedule& sched, int t, int t_min,
                      const char* where) {
    if (t < t_min || t > sched.T) {
        throw ConfigError(std::string(where) + ": timestep " +
                          std::to_string(t) + " out of range [" +
                          std::to_string(t_min) + ", " +
                          std::to_string(sched.T) + "]");
    }
}

TimestepPlan make_plan(const NoiseSchedule& sched, int num_steps) {
    if (num_steps < 1 || num_steps > sched.T) {
        throw ConfigError("make_plan: num_steps " + std::to_string(num_steps) +
                          " out of range [1, " + std::to_string(sched.T) + "]");
    }
    TimestepPlan plan;
    plan.reserve(num_steps + 1);
    if (num_steps == 1) {
        plan.push_back(sched.T);
    } else {
        for (int i = 0; i < num_steps; ++i) {
            const double t = sched.T - static_cast<double>(i) *
                                           (sched.T - 1) / (num_steps - 1);
            const int ti = static_cast<int>(std::lround(t));
            if (plan.empty() || ti < plan.back()) plan.push_back(ti);
        }
    }
    plan.push_back(0);
    return plan;
}

Tensor q_sample(const Tensor& x0, int t, const Tensor& eps,
                const NoiseSchedule& sched) {
    require_same_shape(x0, eps, "q_sample");
    require_timestep(sched, t, 0, "q_sample");
    if (t == 0) return x0;

    const double ab = sched.alpha_bar(t);
    const double a = std::sqrt(ab);
    const double b = std::sqrt(1.0 - ab);
    Tensor out = x0;
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = a * out.data[i] + b * eps.data[i];
    return out;
}

} // namespace diffharm
