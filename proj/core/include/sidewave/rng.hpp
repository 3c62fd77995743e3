#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sidewave {

/// Seeded generator with pinned algorithms: mt19937_64 for bits, 53-bit
/// mantissa scaling for uniforms and Box-Muller for normals. The standard
/// distributions are implementation-defined, so they are not used here;
/// identical seeds must give identical streams on every build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static constexpr const char* algorithm() { return "mt19937_64/u53/box-muller"; }

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace sidewave
