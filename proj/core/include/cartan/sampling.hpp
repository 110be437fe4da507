#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace cartan {

struct SamplingSpec {
    std::uint64_t seed = 0;
    int count = 200;
    double excision = 1e-2;
};

/// Uniform-by-area samples in the annulus rMin <= |z| < rMax, rejecting
/// points within `excision` of any entry of `avoid`.
std::vector<std::complex<double>> sampleAnnulus(std::mt19937_64& rng, int count, double rMin, double rMax,
                                                const std::vector<std::complex<double>>& avoid = {},
                                                double excision = 0.0);

inline std::vector<std::complex<double>> sampleDisk(std::mt19937_64& rng, int count, double radius,
                                                    const std::vector<std::complex<double>>& avoid = {},
                                                    double excision = 0.0)
{
    return sampleAnnulus(rng, count, 0.0, radius, avoid, excision);
}

/// Default sampling radius of a constant-curvature chart: the unit disk
/// (less a margin) for negative curvature, |z| < 3 otherwise.
double chartSamplingRadius(double curvature);

}  // namespace cartan
