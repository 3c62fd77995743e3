#pragma once

#include <cstddef>
#include <utility>

namespace sidewave {

class CoefficientProfile;

/// Closed time window [lo, hi] inside [0, T].
struct TimeWindow {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
};

/// Space-time discretization: Nx cells on [0, L] (Nx+1 nodes), Nt steps on
/// [0, T]. Solver runs require a CFL certificate against a profile.
class Grid {
public:
    Grid(double L, double T, int Nx, int Nt);

    /// Chooses Nt so that dt = cfl_safety * (largest stable step) for the
    /// given profile; cfl_safety in (0, 1].
    static Grid with_cfl(const CoefficientProfile& profile, double T, int Nx,
                         double cfl_safety = 0.9);

    double L() const { return L_; }
    double T() const { return T_; }
    int nx() const { return nx_; }
    int nt() const { return nt_; }
    double dx() const { return L_ / nx_; }
    double dt() const { return T_ / nt_; }

    double x(int j) const { return j * dx(); }
    double t(int n) const { return n * dt(); }

    /// Largest dt for which the explicit march is certified:
    /// dx * min over faces of sqrt(rho_cell / a_face), with rho_cell the
    /// smaller of the two adjacent cell values.
    static double cfl_time_bound(const CoefficientProfile& profile, double L, int Nx);

    /// dt / (stable bound); must be <= 1 for a certified run.
    double cfl_ratio(const CoefficientProfile& profile) const;
    void require_cfl(const CoefficientProfile& profile) const;

    /// Nearest node index to time t, clamped to [0, Nt].
    int nearest_step(double t) const;
    /// Node range [first, last] covered by the window (snapped inward).
    std::pair<int, int> clamp_window(const TimeWindow& w) const;

private:
    double L_, T_;
    int nx_, nt_;
};

}  // namespace sidewave
