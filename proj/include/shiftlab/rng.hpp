#pragma once

// Seeded random source whose output is identical across standard libraries.
// std::uniform_real_distribution and friends are implementation-defined, so
// the mappings from raw 64-bit words are done by hand here.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace shiftlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    double normal()
    {
        // Box-Muller; the 1 - u keeps the log argument away from zero.
        const double u = 1.0 - uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    std::complex<double> complex_normal() { return {normal(), normal()}; }

    /// Uniform in the disc of radius r.
    std::complex<double> in_disc(double r)
    {
        const double rho = r * std::sqrt(uniform());
        return std::polar(rho, 2.0 * std::numbers::pi * uniform());
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Seed for the i-th independent stream derived from a base seed (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace shiftlab
