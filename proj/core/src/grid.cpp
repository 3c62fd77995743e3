#include "sidewave/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sidewave/coeffs.hpp"
#include "sidewave/errors.hpp"

namespace sidewave {

Grid::Grid(double L, double T, int Nx, int Nt) : L_(L), T_(T), nx_(Nx), nt_(Nt) {
    if (!(L > 0.0) || !(T > 0.0)) throw ValidationError("L and T must be positive");
    if (Nx < 2 || Nt < 2) throw ValidationError("Nx and Nt must be at least 2");
}

double Grid::cfl_time_bound(const CoefficientProfile& profile, double L, int Nx) {
    Grid probe(L, L, Nx, 2);  // only dx matters here
    SampledCoefficients c = sample_on_grid(profile, probe);
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < Nx; ++j) {
        double rho = std::min(c.rho_cell[j], c.rho_cell[j + 1]);
        worst = std::min(worst, std::sqrt(rho / c.a_face[j]));
    }
    return probe.dx() * worst;
}

Grid Grid::with_cfl(const CoefficientProfile& profile, double T, int Nx, double cfl_safety) {
    if (!(cfl_safety > 0.0) || cfl_safety > 1.0)
        throw ValidationError("cfl_safety must lie in (0, 1]");
    double bound = cfl_time_bound(profile, profile.length(), Nx);
    int Nt = static_cast<int>(std::ceil(T / (cfl_safety * bound) - 1e-12));
    Nt = std::max(Nt, 2);
    return Grid(profile.length(), T, Nx, Nt);
}

double Grid::cfl_ratio(const CoefficientProfile& profile) const {
    return dt() / cfl_time_bound(profile, L_, nx_);
}

void Grid::require_cfl(const CoefficientProfile& profile) const {
    double r = cfl_ratio(profile);
    if (r > 1.0 + 1e-12)
        throw ValidationError("CFL certificate violated: dt exceeds stable bound by factor " +
                              std::to_string(r));
}

int Grid::nearest_step(double time) const {
    int n = static_cast<int>(std::lround(time / dt()));
    return std::clamp(n, 0, nt_);
}

std::pair<int, int> Grid::clamp_window(const TimeWindow& w) const {
    int lo = static_cast<int>(std::ceil(w.lo / dt() - 1e-9));
    int hi = static_cast<int>(std::floor(w.hi / dt() + 1e-9));
    lo = std::clamp(lo, 0, nt_);
    hi = std::clamp(hi, 0, nt_);
    if (hi < lo) throw ValidationError("empty time window after snapping to grid");
    return {lo, hi};
}

}  // namespace sidewave
