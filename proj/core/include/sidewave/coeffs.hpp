#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sidewave {

class Grid;

/// One linear piece of a coefficient on [x_left, x_right]:
/// value(x) = c0 + c1 * (x - x_left).
struct LinearPiece {
    double c0 = 0.0;
    double c1 = 0.0;

    double at(double offset) const { return c0 + c1 * offset; }
};

/// Piecewise-linear BV coefficient pair (rho, a) on [0, L].
///
/// Pieces are attached to the intervals between consecutive breakpoints;
/// jumps live at the breakpoints. One-sided limits such as a(0+), a(L-) and
/// a(x0+-) are read from the adjacent piece. Degree <= 1 pieces keep the
/// slowness bound and the total variation exactly computable.
class CoefficientProfile {
public:
    /// breakpoints: strictly increasing, first 0, last L; per-interval pieces.
    CoefficientProfile(std::vector<double> breakpoints,
                       std::vector<LinearPiece> rho_pieces,
                       std::vector<LinearPiece> a_pieces);

    /// Constant-coefficient profile.
    static CoefficientProfile constant(double L, double rho, double a);

    double length() const { return breakpoints_.back(); }
    std::size_t piece_count() const { return rho_pieces_.size(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }

    /// Point values; at a breakpoint the limit from `side` is returned.
    enum class Side { left, right };
    double rho_at(double x, Side side = Side::right) const;
    double a_at(double x, Side side = Side::right) const;

    double a_left_limit() const;    // a(0+)
    double a_right_limit() const;   // a(L-)

    /// Declared bounds [rho0, rho1] and [a0, a1] (exact for linear pieces).
    std::pair<double, double> rho_bounds() const;
    std::pair<double, double> a_bounds() const;

    /// Splits pieces at the given positions without changing the functions.
    CoefficientProfile refined(const std::vector<double>& extra_breakpoints) const;

private:
    std::size_t piece_index(double x, Side side) const;

    std::vector<double> breakpoints_;
    std::vector<LinearPiece> rho_pieces_;
    std::vector<LinearPiece> a_pieces_;
};

/// Slowness bound beta = ess sup over [0,L] of sqrt(rho(x)/a(x)).
/// The ratio of two linear functions is monotone between breakpoints, so the
/// supremum is attained at a one-sided interval endpoint and is evaluated
/// exactly from the candidate list.
double compute_beta(const CoefficientProfile& profile);

/// (TV(rho), TV(a)): sum of |jumps| at interior breakpoints plus
/// integral of |slope| over the pieces.
std::pair<double, double> total_variation(const CoefficientProfile& profile);

/// Coefficients sampled on a solver grid with Nx+1 nodes.
///
/// rho_cell[j] is the mean of rho over the dual cell around node j
/// (half cells at the ends); a_face[j] is the harmonic mean of a over the
/// segment [x_j, x_{j+1}]. A jump located strictly inside a segment is
/// therefore length-weighted harmonically (1 | 4 at mid-segment gives 1.6);
/// a jump exactly at a node contributes its one-sided limits to the two
/// adjacent segments. Boundary injection coefficients keep the exact
/// one-sided limits a(0+), a(L-).
struct SampledCoefficients {
    std::vector<double> rho_cell;   // Nx+1
    std::vector<double> a_face;     // Nx
    double a_left = 0.0;            // a(0+)
    double a_right = 0.0;           // a(L-)
};

SampledCoefficients sample_on_grid(const CoefficientProfile& profile, const Grid& grid);

}  // namespace sidewave
