#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace quasiq::rng {

// splitmix64 finalizer. Every random draw in the library goes through an engine
// keyed by (seed, stream); results are therefore reproducible independent of
// the order in which streams are consumed.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed ^ mix(stream));
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive(derive(seed, a), b);
}

inline std::mt19937_64 engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(derive(seed, stream));
}

// stable compile-time hash for naming sub-streams after string tags
constexpr std::uint64_t tag(const char* s) {
    std::uint64_t h = 1469598103934665603ULL;
    while (*s) {
        h ^= static_cast<unsigned char>(*s++);
        h *= 1099511628211ULL;
    }
    return h;
}

inline Eigen::VectorXcd gaussian_vector(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        const double re = dist(gen);
        const double im = dist(gen);
        v(i) = std::complex<double>(re, im);
    }
    return v;
}

inline Eigen::MatrixXcd gaussian_matrix(int rows, int cols, std::mt19937_64& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double re = dist(gen);
            const double im = dist(gen);
            m(r, c) = std::complex<double>(re, im);
        }
    }
    return m;
}

// Flat draw from the probability simplex: normalized exponential variates.
inline std::vector<double> simplex_weights(int terms, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> w(terms);
    double total = 0.0;
    for (int i = 0; i < terms; ++i) {
        double u = dist(gen);
        while (u <= 0.0) u = dist(gen);
        w[i] = -std::log(u);
        total += w[i];
    }
    for (double& x : w) x /= total;
    return w;
}

} // namespace quasiq::rng
