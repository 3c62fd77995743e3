#pragma once

#include <functional>
#include <vector>

#include "sidewave/grid.hpp"

namespace sidewave {

/// Uniformly sampled function of t on [t0, t0 + n*dt], n+1 samples.
class TimeSignal {
public:
    TimeSignal() = default;
    TimeSignal(int steps, double dt, double t0 = 0.0)
        : samples_(steps + 1, 0.0), dt_(dt), t0_(t0) {}

    static TimeSignal from_function(const Grid& grid, const std::function<double(double)>& f);
    static TimeSignal zeros_like(const Grid& grid) { return TimeSignal(grid.nt(), grid.dt()); }

    int steps() const { return static_cast<int>(samples_.size()) - 1; }
    double dt() const { return dt_; }
    double t0() const { return t0_; }
    double t(int n) const { return t0_ + n * dt_; }

    double& operator[](int n) { return samples_[n]; }
    double operator[](int n) const { return samples_[n]; }
    std::vector<double>& samples() { return samples_; }
    const std::vector<double>& samples() const { return samples_; }

    bool all_finite() const;

    /// Samples reversed in time (t -> t_end - t), same grid.
    TimeSignal reversed() const;

    /// Centered first differences; one-sided at the two ends.
    TimeSignal derivative() const;

    /// Cumulative trapezoid of the samples starting at 0.
    TimeSignal antiderivative() const;

    TimeSignal& operator+=(const TimeSignal& other);
    TimeSignal& operator-=(const TimeSignal& other);
    TimeSignal& operator*=(double c);

private:
    std::vector<double> samples_;
    double dt_ = 0.0;
    double t0_ = 0.0;
};

/// Trapezoid quadrature weight of node n on the sub-range [lo, hi].
double trapezoid_weight(int n, int lo, int hi, double dt);

/// Trapezoidal L2 norm of the signal over the window (whole domain when the
/// window covers it).
double norm_l2(const TimeSignal& f, const TimeWindow& w);
double norm_l2(const TimeSignal& f);

/// H1 norm: L2 norm plus centered-difference derivative energy.
double norm_h1(const TimeSignal& f, const TimeWindow& w);

/// Trapezoidal inner product over the full sample range.
double inner_trapezoid(const TimeSignal& f, const TimeSignal& g);

/// Boundary source s in H^-1(alpha, omega) represented by its L2
/// antiderivative S: s = S', S constant (zero) outside the support window.
/// The duality pairing with p in H1_0 is then  int s p dt = -int S p' dt.
class SourceHminus {
public:
    SourceHminus(TimeSignal S, TimeWindow support);

    /// Builds S by cumulative integration of the given samples of s; the
    /// samples must vanish outside the support window.
    static SourceHminus from_samples(const TimeSignal& s, TimeWindow support);

    const TimeSignal& antiderivative_signal() const { return S_; }
    TimeSignal& antiderivative_signal() { return S_; }
    const TimeWindow& support() const { return support_; }

    /// Point samples s(t_n) by centered differencing of S.
    TimeSignal samples() const;

    /// Duality pairing  int s p dt  (trapezoid weights on the s samples).
    double pair_with(const TimeSignal& p) const;

    /// One binomial smoothing pass per level applied to S.
    void smooth(int passes);

private:
    TimeSignal S_;
    TimeWindow support_;
};

/// H^-1(alpha, omega) norm of s: solve -v'' = s on the window with
/// homogeneous Dirichlet conditions (tridiagonal) and return the L2 norm of
/// v'. Equals the dual norm of H1_0 with the gradient inner product.
double norm_hminus(const SourceHminus& s);
double norm_hminus(const TimeSignal& s_samples, const TimeWindow& w);

/// Spatial norms on nodal vectors (Nx+1 values, trapezoid weights).
double norm_l2_space(const std::vector<double>& f, double dx);
double norm_h1_space(const std::vector<double>& f, double dx);
/// H^-1(0, L) of a nodal function via the Dirichlet Poisson solve.
double norm_hminus_space(const std::vector<double>& f, double dx);

/// Low-pass filter: project onto the leading DCT-II modes, keeping the
/// fraction `keep` of the band (2/3 for the default spurious-mode cutoff).
TimeSignal lowpass(const TimeSignal& f, double keep);
void lowpass_inplace(std::vector<double>& samples, double keep);

/// s = D S: centered differences at interior nodes, one-sided at the ends.
TimeSignal apply_difference(const TimeSignal& S);

/// Exact transpose of apply_difference against the trapezoid-weighted
/// pairing: returns g with  <D S, q>_theta = <S, g>  for all S.
std::vector<double> apply_difference_transpose_weighted(const TimeSignal& q);

}  // namespace sidewave
