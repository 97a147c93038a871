#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace mlgp {

/// Derive a child seed from a root seed, a purpose tag and indices.
/// A single top-level seed expands into independent per-chain / per-fold /
/// per-prediction streams without any coordination between workers.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t i0 = 0, std::uint64_t i1 = 0);

/// Deterministic random stream. Distribution code is written out explicitly
/// (Box-Muller, Marsaglia-Tsang) so traces do not depend on the standard
/// library's distribution implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// uniform on (0, 1); never returns exactly 0 or 1
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// standard normal via Box-Muller
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Gamma(shape, rate); Marsaglia-Tsang with the shape<1 boost
    double gamma(double shape, double rate);

    double exponential(double rate) ;

    /// index in [0, n) with probability weights[i] (need not be normalized)
    int categorical(const Eigen::VectorXd& weights);

    int uniform_int(int n); // [0, n)

    Eigen::VectorXd normal_vector(Eigen::Index n);

    /// Dirichlet(concentration) via normalized gammas
    Eigen::VectorXd dirichlet(const Eigen::VectorXd& concentration);

    /// Fisher-Yates shuffle of indices [0, n)
    std::vector<int> permutation(int n);

private:
    std::mt19937_64 gen_;
};

} // namespace mlgp
