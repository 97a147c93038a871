#include "mlgp/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mlgp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t i0, std::uint64_t i1) {
    std::uint64_t h = splitmix64(root ^ fnv1a(tag));
    h = splitmix64(h ^ (i0 + 0x1000000001ULL));
    h = splitmix64(h ^ (i1 + 0x2000000003ULL));
    return h;
}

double RngStream::uniform() {
    // 53-bit mantissa, shifted into (0,1)
    const double u = (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
    return u;
}

double RngStream::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double RngStream::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("gamma: shape and rate must be positive");
    if (shape < 1.0) {
        const double g = gamma(shape + 1.0, 1.0);
        const double u = uniform();
        return g * std::pow(u, 1.0 / shape) / rate;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

double RngStream::exponential(double rate) {
    return -std::log(uniform()) / rate;
}

int RngStream::categorical(const Eigen::VectorXd& weights) {
    const double total = weights.sum();
    double u = uniform() * total;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        u -= weights[i];
        if (u <= 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size() - 1);
}

int RngStream::uniform_int(int n) {
    // rejection to avoid modulo bias
    const std::uint64_t bound = ~0ULL - (~0ULL % static_cast<std::uint64_t>(n));
    std::uint64_t r;
    do {
        r = gen_();
    } while (r >= bound);
    return static_cast<int>(r % static_cast<std::uint64_t>(n));
}

Eigen::VectorXd RngStream::normal_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
    return v;
}

Eigen::VectorXd RngStream::dirichlet(const Eigen::VectorXd& concentration) {
    Eigen::VectorXd w(concentration.size());
    for (Eigen::Index i = 0; i < concentration.size(); ++i)
        w[i] = gamma(concentration[i], 1.0);
    const double s = w.sum();
    if (s <= 0.0) {
        // all gammas underflowed; fall back to the argmax vertex
        Eigen::Index imax;
        concentration.maxCoeff(&imax);
        w.setZero();
        w[imax] = 1.0;
        return w;
    }
    return w / s;
}

std::vector<int> RngStream::permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = uniform_int(i + 1);
        std::swap(p[i], p[j]);
    }
    return p;
}

} // namespace mlgp
