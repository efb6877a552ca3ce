#ifndef DIFFHARM_RNG_HPP
#define DIFFHARM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "diffharm/tensor.hpp"

namespace diffharm {

// Deterministic random source. mt19937_64 is fully specified by the
// standard and Gaussian draws go through Box-Muller rather than
// std::normal_distribution, whose algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Named sub-stream of a master seed. Streams with different names are
    // independent, so consuming more draws on one (e.g. more guidance
    // noise) never disturbs another.
    static Rng stream(std::uint64_t seed, std::string_view name);

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform();
    double uniform(double lo, double hi);
    double normal();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

Tensor randn(Shape shape, Rng& rng);

} // namespace diffharm

#endif
