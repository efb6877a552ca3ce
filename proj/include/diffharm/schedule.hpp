#ifndef DIFFHARM_SCHEDULE_HPP
#define DIFFHARM_SCHEDULE_HPP

#include <vector>

#include "diffharm/tensor.hpp"

namespace diffharm {

// Forward-process tables. Data index t=0 is clean; noise levels are
// indexed 1..T, so alpha_bar(0) == 1 by definition.
struct NoiseSchedule {
    int T = 0;
    std::vector<double> betas;      // betas[t-1] = beta_t, t in 1..T
    std::vector<double> alphas;     // alphas[t-1] = 1 - beta_t
    std::vector<double> alpha_bars; // alpha_bars[t] = prod_{s<=t} alpha_s, size T+1

    double beta(int t) const { return betas[t - 1]; }
    double alpha(int t) const { return alphas[t - 1]; }
    double alpha_bar(int t) const { return alpha_bars[t]; }
};

NoiseSchedule linear_schedule(int T, double beta_start, double beta_end);

// Strictly decreasing timesteps, first <= T, terminal element 0.
using TimestepPlan = std::vector<int>;

// Evenly spaced DDIM subsequence from T down to 1, plus terminal 0.
TimestepPlan make_plan(const NoiseSchedule& sched, int num_steps);

// x_t = sqrt(abar_t) * x0 + sqrt(1 - abar_t) * eps. t = 0 returns x0.
Tensor q_sample(const Tensor& x0, int t, const Tensor& eps,
                const NoiseSchedule& sched);

void require_timestep(const NoiseSchedule& sched, int t, int t_min,
                      const char* where);

} // namespace diffharm

#endif
