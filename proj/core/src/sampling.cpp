#include "cartan/sampling.hpp"

#include <cmath>
#include <numbers>

#include "cartan/errors.hpp"

namespace cartan {

std::vector<std::complex<double>> sampleAnnulus(std::mt19937_64& rng, int count, double rMin, double rMax,
                                                const std::vector<std::complex<double>>& avoid, double excision)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 1000L * count + 10000) {
            throw Error(ErrorKind::OutsideDomain, "excisions leave no admissible sampling area");
        }
        const double r = std::sqrt(rMin * rMin + (rMax * rMax - rMin * rMin) * unit(rng));
        const double t = 2.0 * std::numbers::pi * unit(rng);
        const std::complex<double> z = std::polar(r, t);
        bool ok = true;
        for (const auto& c : avoid) {
            if (std::abs(z - c) < excision) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(z);
        }
    }
    return out;
}

double chartSamplingRadius(double curvature) { return curvature < 0.0 ? 0.9 : 3.0; }

}  // namespace cartan
