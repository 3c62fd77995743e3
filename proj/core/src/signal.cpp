#include "sidewave/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sidewave/errors.hpp"

namespace sidewave {

TimeSignal TimeSignal::from_function(const Grid& grid, const std::function<double(double)>& f) {
    TimeSignal out(grid.nt(), grid.dt());
    for (int n = 0; n <= grid.nt(); ++n) out[n] = f(grid.t(n));
    return out;
}

bool TimeSignal::all_finite() const {
    return std::all_of(samples_.begin(), samples_.end(),
                       [](double v) { return std::isfinite(v); });
}

TimeSignal TimeSignal::reversed() const {
    TimeSignal out = *this;
    std::reverse(out.samples_.begin(), out.samples_.end());
    return out;
}

TimeSignal TimeSignal::derivative() const {
    const int nt = steps();
    TimeSignal out(nt, dt_, t0_);
    if (nt < 1) return out;
    out[0] = (samples_[1] - samples_[0]) / dt_;
    for (int n = 1; n < nt; ++n) out[n] = (samples_[n + 1] - samples_[n - 1]) / (2.0 * dt_);
    out[nt] = (samples_[nt] - samples_[nt - 1]) / dt_;
    return out;
}

TimeSignal TimeSignal::antiderivative() const {
    const int nt = steps();
    TimeSignal out(nt, dt_, t0_);
    double acc = 0.0;
    out[0] = 0.0;
    for (int n = 1; n <= nt; ++n) {
        acc += 0.5 * dt_ * (samples_[n - 1] + samples_[n]);
        out[n] = acc;
    }
    return out;
}

TimeSignal& TimeSignal::operator+=(const TimeSignal& other) {
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] += other.samples_[i];
    return *this;
}

TimeSignal& TimeSignal::operator-=(const TimeSignal& other) {
    for (std::size_t i = 0; i < samples_.size(); ++i) samples_[i] -= other.samples_[i];
    return *this;
}

TimeSignal& TimeSignal::operator*=(double c) {
    for (double& v : samples_) v *= c;
    return *this;
}

double trapezoid_weight(int n, int lo, int hi, double dt) {
    if (n < lo || n > hi) return 0.0;
    if (lo == hi) return 0.0;
    return (n == lo || n == hi) ? 0.5 * dt : dt;
}

namespace {

std::pair<int, int> window_range(const TimeSignal& f, const TimeWindow& w) {
    const double dt = f.dt();
    int lo = static_cast<int>(std::ceil((w.lo - f.t0()) / dt - 1e-9));
    int hi = static_cast<int>(std::floor((w.hi - f.t0()) / dt + 1e-9));
    lo = std::clamp(lo, 0, f.steps());
    hi = std::clamp(hi, 0, f.steps());
    if (hi < lo) throw ValidationError("window outside the signal domain");
    return {lo, hi};
}

}  // namespace

double norm_l2(const TimeSignal& f, const TimeWindow& w) {
    auto [lo, hi] = window_range(f, w);
    double acc = 0.0;
    for (int n = lo; n <= hi; ++n) acc += trapezoid_weight(n, lo, hi, f.dt()) * f[n] * f[n];
    return std::sqrt(acc);
}

double norm_l2(const TimeSignal& f) {
    return norm_l2(f, TimeWindow{f.t0(), f.t0() + f.steps() * f.dt()});
}

double norm_h1(const TimeSignal& f, const TimeWindow& w) {
    TimeSignal df = f.derivative();
    double a = norm_l2(f, w);
    double b = norm_l2(df, w);
    return std::sqrt(a * a + b * b);
}

double inner_trapezoid(const TimeSignal& f, const TimeSignal& g) {
    const int nt = f.steps();
    double acc = 0.0;
    for (int n = 0; n <= nt; ++n) acc += trapezoid_weight(n, 0, nt, f.dt()) * f[n] * g[n];
    return acc;
}

SourceHminus::SourceHminus(TimeSignal S, TimeWindow support)
    : S_(std::move(S)), support_(support) {
    if (!(support_.hi > support_.lo)) throw ValidationError("empty source support window");
    if (!S_.all_finite()) throw ValidationError("non-finite antiderivative samples");
}

SourceHminus SourceHminus::from_samples(const TimeSignal& s, TimeWindow support) {
    return SourceHminus(s.antiderivative(), support);
}

TimeSignal SourceHminus::samples() const { return apply_difference(S_); }

double SourceHminus::pair_with(const TimeSignal& p) const {
    TimeSignal s = samples();
    return inner_trapezoid(s, p);
}

void SourceHminus::smooth(int passes) {
    const int nt = S_.steps();
    std::vector<double> tmp(nt + 1);
    for (int pass = 0; pass < passes; ++pass) {
        for (int n = 0; n <= nt; ++n) {
            double l = S_[std::max(0, n - 1)];
            double r = S_[std::min(nt, n + 1)];
            tmp[n] = 0.25 * l + 0.5 * S_[n] + 0.25 * r;
        }
        std::copy(tmp.begin(), tmp.end(), S_.samples().begin());
    }
}

namespace {

// -v'' = rhs on (window), v = 0 at both ends; returns sqrt(sum (v')^2 dt).
// Thomas factorization of the (m-1)x(m-1) second-difference matrix.
double dirichlet_gradient_norm(const std::vector<double>& rhs, double dt) {
    const int m = static_cast<int>(rhs.size()) + 1;  // segments
    if (m < 2) return 0.0;
    const int n = m - 1;  // interior nodes
    std::vector<double> diag(n, 2.0 / (dt * dt)), off(n, -1.0 / (dt * dt)), b(rhs), v(n);
    for (int i = 1; i < n; ++i) {
        double w = off[i - 1] / diag[i - 1];
        diag[i] -= w * off[i - 1];
        b[i] -= w * b[i - 1];
    }
    v[n - 1] = b[n - 1] / diag[n - 1];
    for (int i = n - 2; i >= 0; --i) v[i] = (b[i] - off[i] * v[i + 1]) / diag[i];
    double acc = 0.0;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = (v[i] - prev) / dt;
        acc += d * d * dt;
        prev = v[i];
    }
    acc += (0.0 - prev) / dt * (0.0 - prev) / dt * dt;
    return std::sqrt(acc);
}

}  // namespace

double norm_hminus(const TimeSignal& s_samples, const TimeWindow& w) {
    auto [lo, hi] = window_range(s_samples, w);
    if (hi - lo < 2) return 0.0;
    std::vector<double> rhs(s_samples.samples().begin() + lo + 1,
                            s_samples.samples().begin() + hi);
    return dirichlet_gradient_norm(rhs, s_samples.dt());
}

double norm_hminus(const SourceHminus& s) {
    return norm_hminus(s.samples(), s.support());
}

double norm_l2_space(const std::vector<double>& f, double dx) {
    const int n = static_cast<int>(f.size()) - 1;
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) {
        double w = (j == 0 || j == n) ? 0.5 * dx : dx;
        acc += w * f[j] * f[j];
    }
    return std::sqrt(acc);
}

double norm_h1_space(const std::vector<double>& f, double dx) {
    const int n = static_cast<int>(f.size()) - 1;
    double acc = norm_l2_space(f, dx);
    acc *= acc;
    for (int j = 0; j < n; ++j) {
        double d = (f[j + 1] - f[j]) / dx;
        acc += d * d * dx;
    }
    return std::sqrt(acc);
}

double norm_hminus_space(const std::vector<double>& f, double dx) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 2) return 0.0;
    std::vector<double> rhs(f.begin() + 1, f.begin() + n);
    return dirichlet_gradient_norm(rhs, dx);
}

void lowpass_inplace(std::vector<double>& x, double keep) {
    const int m = static_cast<int>(x.size());
    if (m < 3 || keep >= 1.0) return;
    const int kmax = static_cast<int>(std::floor(keep * m));
    const double pi = std::numbers::pi;
    // DCT-II analysis, truncated DCT-III synthesis; cos(k*theta) by the
    // Chebyshev recurrence so the whole filter is O(m * kmax).
    std::vector<double> coef(kmax, 0.0);
    for (int i = 0; i < m; ++i) {
        const double c1 = std::cos(pi * (i + 0.5) / m);
        double ck_prev = 1.0, ck = c1;
        coef[0] += x[i];
        for (int k = 1; k < kmax; ++k) {
            coef[k] += x[i] * ck;
            double next = 2.0 * c1 * ck - ck_prev;
            ck_prev = ck;
            ck = next;
        }
    }
    coef[0] /= m;
    for (int k = 1; k < kmax; ++k) coef[k] *= 2.0 / m;
    for (int i = 0; i < m; ++i) {
        const double c1 = std::cos(pi * (i + 0.5) / m);
        double ck_prev = 1.0, ck = c1;
        double acc = coef[0];
        for (int k = 1; k < kmax; ++k) {
            acc += coef[k] * ck;
            double next = 2.0 * c1 * ck - ck_prev;
            ck_prev = ck;
            ck = next;
        }
        x[i] = acc;
    }
}

TimeSignal lowpass(const TimeSignal& f, double keep) {
    TimeSignal out = f;
    lowpass_inplace(out.samples(), keep);
    return out;
}

TimeSignal apply_difference(const TimeSignal& S) {
    const int nt = S.steps();
    TimeSignal s(nt, S.dt(), S.t0());
    const double dt = S.dt();
    s[0] = (S[1] - S[0]) / dt;
    for (int n = 1; n < nt; ++n) s[n] = (S[n + 1] - S[n - 1]) / (2.0 * dt);
    s[nt] = (S[nt] - S[nt - 1]) / dt;
    return s;
}

std::vector<double> apply_difference_transpose_weighted(const TimeSignal& q) {
    const int nt = q.steps();
    const double dt = q.dt();
    std::vector<double> g(nt + 1, 0.0);
    auto theta = [&](int n) { return trapezoid_weight(n, 0, nt, dt); };
    // Scatter the transpose of the rows of apply_difference.
    g[0] += theta(0) * q[0] * (-1.0 / dt);
    g[1] += theta(0) * q[0] * (1.0 / dt);
    for (int n = 1; n < nt; ++n) {
        g[n - 1] += theta(n) * q[n] * (-1.0 / (2.0 * dt));
        g[n + 1] += theta(n) * q[n] * (1.0 / (2.0 * dt));
    }
    g[nt - 1] += theta(nt) * q[nt] * (-1.0 / dt);
    g[nt] += theta(nt) * q[nt] * (1.0 / dt);
    return g;
}

}  // namespace sidewave
