#include "sidewave/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sidewave/errors.hpp"
#include "sidewave/grid.hpp"

namespace sidewave {

namespace {

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

// Exact integral of a linear piece over [lo, hi] in local offsets.
double integrate_linear(const LinearPiece& p, double lo, double hi) {
    return p.c0 * (hi - lo) + 0.5 * p.c1 * (hi * hi - lo * lo);
}

// Exact integral of 1/(c0 + c1*s) over [lo, hi]; the piece is positive there.
double integrate_reciprocal(const LinearPiece& p, double lo, double hi) {
    if (std::abs(p.c1) < 1e-300) return (hi - lo) / p.c0;
    double num = p.c0 + p.c1 * hi;
    double den = p.c0 + p.c1 * lo;
    return std::log(num / den) / p.c1;
}

}  // namespace

CoefficientProfile::CoefficientProfile(std::vector<double> breakpoints,
                                       std::vector<LinearPiece> rho_pieces,
                                       std::vector<LinearPiece> a_pieces)
    : breakpoints_(std::move(breakpoints)),
      rho_pieces_(std::move(rho_pieces)),
      a_pieces_(std::move(a_pieces)) {
    if (breakpoints_.size() < 2)
        throw ValidationError("profile needs at least two breakpoints");
    if (rho_pieces_.size() != breakpoints_.size() - 1 ||
        a_pieces_.size() != breakpoints_.size() - 1)
        throw ValidationError("piece count must equal interval count");
    if (breakpoints_.front() != 0.0)
        throw ValidationError("first breakpoint must be 0");
    if (!strictly_increasing(breakpoints_))
        throw ValidationError("breakpoints must be strictly increasing");
    if (!(breakpoints_.back() > 0.0))
        throw ValidationError("profile length must be positive");
    // Positivity checked at interval endpoints, sufficient for degree <= 1.
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        double len = breakpoints_[i + 1] - breakpoints_[i];
        for (const auto* p : {&rho_pieces_[i], &a_pieces_[i]}) {
            if (!(p->at(0.0) > 0.0) || !(p->at(len) > 0.0))
                throw ValidationError("rho and a must be positive on every piece");
        }
    }
}

CoefficientProfile CoefficientProfile::constant(double L, double rho, double a) {
    return CoefficientProfile({0.0, L}, {{rho, 0.0}}, {{a, 0.0}});
}

std::size_t CoefficientProfile::piece_index(double x, Side side) const {
    if (x < 0.0 || x > length()) throw ValidationError("x outside [0, L]");
    // Interval i covers [b_i, b_{i+1}); at an interior breakpoint the side
    // picks the adjacent piece.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
    std::size_t idx = (i == 0) ? 0 : i - 1;
    if (idx >= rho_pieces_.size()) idx = rho_pieces_.size() - 1;
    if (side == Side::left && idx > 0 && x == breakpoints_[idx]) --idx;
    return idx;
}

double CoefficientProfile::rho_at(double x, Side side) const {
    std::size_t i = piece_index(x, side);
    return rho_pieces_[i].at(x - breakpoints_[i]);
}

double CoefficientProfile::a_at(double x, Side side) const {
    std::size_t i = piece_index(x, side);
    return a_pieces_[i].at(x - breakpoints_[i]);
}

double CoefficientProfile::a_left_limit() const { return a_pieces_.front().at(0.0); }

double CoefficientProfile::a_right_limit() const {
    double len = breakpoints_.back() - breakpoints_[breakpoints_.size() - 2];
    return a_pieces_.back().at(len);
}

std::pair<double, double> CoefficientProfile::rho_bounds() const {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        double len = breakpoints_[i + 1] - breakpoints_[i];
        for (double v : {rho_pieces_[i].at(0.0), rho_pieces_[i].at(len)}) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

std::pair<double, double> CoefficientProfile::a_bounds() const {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        double len = breakpoints_[i + 1] - breakpoints_[i];
        for (double v : {a_pieces_[i].at(0.0), a_pieces_[i].at(len)}) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

CoefficientProfile CoefficientProfile::refined(const std::vector<double>& extra) const {
    std::vector<double> pts = breakpoints_;
    for (double x : extra) {
        if (x <= 0.0 || x >= length()) continue;
        pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<LinearPiece> rho, a;
    rho.reserve(pts.size() - 1);
    a.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        std::size_t src = piece_index(pts[i], Side::right);
        double off = pts[i] - breakpoints_[src];
        rho.push_back({rho_pieces_[src].at(off), rho_pieces_[src].c1});
        a.push_back({a_pieces_[src].at(off), a_pieces_[src].c1});
    }
    return CoefficientProfile(std::move(pts), std::move(rho), std::move(a));
}

double compute_beta(const CoefficientProfile& profile) {
    // rho/a is a Moebius function of x between breakpoints, hence monotone
    // there; candidates are the one-sided values at every interval endpoint.
    double worst = 0.0;
    const auto& bp = profile.breakpoints();
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        for (double x : {bp[i], bp[i + 1]}) {
            auto side = (x == bp[i]) ? CoefficientProfile::Side::right
                                     : CoefficientProfile::Side::left;
            double ratio = profile.rho_at(x, side) / profile.a_at(x, side);
            worst = std::max(worst, ratio);
        }
    }
    return std::sqrt(worst);
}

std::pair<double, double> total_variation(const CoefficientProfile& profile) {
    const auto& bp = profile.breakpoints();
    double tv_rho = 0.0, tv_a = 0.0;
    // |slope| * length over a linear piece equals the endpoint difference.
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        tv_rho += std::abs(profile.rho_at(bp[i + 1], CoefficientProfile::Side::left) -
                           profile.rho_at(bp[i], CoefficientProfile::Side::right));
        tv_a += std::abs(profile.a_at(bp[i + 1], CoefficientProfile::Side::left) -
                         profile.a_at(bp[i], CoefficientProfile::Side::right));
    }
    for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
        tv_rho += std::abs(profile.rho_at(bp[i], CoefficientProfile::Side::right) -
                           profile.rho_at(bp[i], CoefficientProfile::Side::left));
        tv_a += std::abs(profile.a_at(bp[i], CoefficientProfile::Side::right) -
                         profile.a_at(bp[i], CoefficientProfile::Side::left));
    }
    return {tv_rho, tv_a};
}

namespace {

// Mean of rho or a over [lo, hi] by exact per-piece integration;
// reciprocal=true integrates 1/f and returns the harmonic mean. A breakpoint
// exactly at lo or hi contributes nothing from the far side.
double exact_mean(const CoefficientProfile& profile, bool use_a, bool reciprocal,
                  double lo, double hi) {
    using Side = CoefficientProfile::Side;
    const auto& bp = profile.breakpoints();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        double piece_lo = std::max(lo, bp[i]);
        double piece_hi = std::min(hi, bp[i + 1]);
        if (piece_hi <= piece_lo) continue;
        double left = use_a ? profile.a_at(bp[i], Side::right)
                            : profile.rho_at(bp[i], Side::right);
        double right = use_a ? profile.a_at(bp[i + 1], Side::left)
                             : profile.rho_at(bp[i + 1], Side::left);
        LinearPiece piece{left, (right - left) / (bp[i + 1] - bp[i])};
        double off_lo = piece_lo - bp[i];
        double off_hi = piece_hi - bp[i];
        acc += reciprocal ? integrate_reciprocal(piece, off_lo, off_hi)
                          : integrate_linear(piece, off_lo, off_hi);
    }
    double len = hi - lo;
    return reciprocal ? len / acc : acc / len;
}

}  // namespace

SampledCoefficients sample_on_grid(const CoefficientProfile& profile, const Grid& grid) {
    if (grid.L() != profile.length())
        throw ValidationError("grid length does not match profile length");
    const int nx = grid.nx();
    const double dx = grid.dx();
    SampledCoefficients out;
    out.rho_cell.resize(nx + 1);
    out.a_face.resize(nx);
    for (int j = 0; j <= nx; ++j) {
        double lo = std::max(0.0, grid.x(j) - 0.5 * dx);
        double hi = std::min(grid.L(), grid.x(j) + 0.5 * dx);
        out.rho_cell[j] = exact_mean(profile, /*use_a=*/false, /*reciprocal=*/false, lo, hi);
    }
    for (int j = 0; j < nx; ++j) {
        out.a_face[j] =
            exact_mean(profile, /*use_a=*/true, /*reciprocal=*/true, grid.x(j), grid.x(j + 1));
    }
    out.a_left = profile.a_left_limit();
    out.a_right = profile.a_right_limit();
    return out;
}

}  // namespace sidewave
