#include "fraclimit/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fraclimit/errors.hpp"
#include "fraclimit/identities.hpp"
#include "fraclimit/specfun.hpp"

namespace fraclimit::charpoly {

double char_linear_residual(double q, const Rational& R) {
    const double Rv = R.value();
    return specfun::real_branch_power(q, R) - Rv * q + (Rv - 1.0);
}

double char_power_residual_sum(double q, const Rational& R, int m) {
    const double Rv = R.value();
    // result2_lhs refuses the integer orders whose j-sum poles; after that the
    // reflection factor is safe.
    const double lhs = specfun::real_branch_power(q, -R) * identities::result2_lhs(m, Rv, q);
    const double rhs = specfun::reflection_rhs(Rv) / Rv *
                       specfun::binomial_real_real(static_cast<double>(m), Rv);
    return lhs - rhs;
}

double char_power_residual_hyp(double q, const Rational& R, int m) {
    const double Rv = R.value();
    const double lhs =
        specfun::real_branch_power(q, -R) * specfun::hyp2f1_terminating(m, Rv, q);
    const double rhs =
        specfun::reflection_rhs(Rv) * specfun::binomial_real_real(static_cast<double>(m), Rv);
    return lhs - rhs;
}

namespace {

constexpr double kAxisGap = 1e-6; // the residuals blow up at q = 0

// Bisection refinement of a bracketing interval. Runs the bracket all the way
// down to width_tol (a residual-only stop can park ~1e-7 from a shallow root,
// farther than the dedup radius, and shadow the explicit q = 1 probe) and
// reports the best point seen, so the returned residual is as small as the
// chain allows.
double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              const RootSearchOptions& opt) {
    double best_q = a;
    double best_res = std::fabs(fa);
    for (int iter = 0; iter < 200 && (b - a) > opt.width_tol; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (std::fabs(fm) < best_res) {
            best_res = std::fabs(fm);
            best_q = mid;
        }
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return best_q;
}

void scan_interval(const std::function<double(double)>& f, double lo, double hi, int points,
                   const RootSearchOptions& opt, std::vector<double>& roots) {
    if (!(hi > lo) || points < 2)
        return;
    const double step = (hi - lo) / static_cast<double>(points - 1);
    double prev_q = lo;
    double prev_f = f(lo);
    for (int i = 1; i < points; ++i) {
        const double cur_q = (i == points - 1) ? hi : lo + step * static_cast<double>(i);
        const double cur_f = f(cur_q);
        if (std::isfinite(prev_f) && std::isfinite(cur_f)) {
            if (prev_f == 0.0) {
                roots.push_back(prev_q);
            } else if ((prev_f < 0.0) != (cur_f < 0.0)) {
                roots.push_back(bisect(f, prev_q, cur_q, prev_f, opt));
            }
        }
        prev_q = cur_q;
        prev_f = cur_f;
    }
    if (std::isfinite(prev_f) && prev_f == 0.0)
        roots.push_back(prev_q);
}

} // namespace

std::vector<CharacteristicRoot> find_roots(const Rational& R, int m,
                                           const RootSearchOptions& options) {
    if (m < 0)
        throw ParameterError("find_roots requires m >= 0");
    if (!(options.hi > options.lo))
        throw ParameterError("find_roots: empty search interval");

    const std::function<double(double)> residual =
        m == 1 ? std::function<double(double)>([&R](double q) { return char_linear_residual(q, R); })
               : std::function<double(double)>(
                     [&R, m](double q) { return char_power_residual_hyp(q, R, m); });

    // Split the interval around the excluded origin; the negative side only
    // exists on the real branch (odd-denominator orders).
    const bool scan_negative = R.odd_denominator() && options.lo < -kAxisGap;
    const double neg_lo = options.lo;
    const double neg_hi = std::min(options.hi, -kAxisGap);
    const bool scan_positive = options.hi > kAxisGap;
    const double pos_lo = std::max(options.lo, kAxisGap);
    const double pos_hi = options.hi;

    const double total_len = (scan_negative ? neg_hi - neg_lo : 0.0) +
                             (scan_positive ? pos_hi - pos_lo : 0.0);
    std::vector<double> raw;
    if (total_len > 0.0) {
        if (scan_negative) {
            const int pts = std::max(
                2, static_cast<int>(std::lround(options.grid_points * (neg_hi - neg_lo) / total_len)));
            scan_interval(residual, neg_lo, neg_hi, pts, options, raw);
        }
        if (scan_positive) {
            const int pts = std::max(
                2, static_cast<int>(std::lround(options.grid_points * (pos_hi - pos_lo) / total_len)));
            scan_interval(residual, pos_lo, pos_hi, pts, options, raw);
        }
    }

    // The universal root hides from sign-change scans when it is a tangency,
    // so probe it directly.
    if (options.lo <= 1.0 && 1.0 <= options.hi) {
        const double r1 = residual(1.0);
        if (std::isfinite(r1) && std::fabs(r1) <= options.residual_tol)
            raw.push_back(1.0);
    }

    std::sort(raw.begin(), raw.end());

    std::vector<CharacteristicRoot> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        // Cluster everything within dedup_tol and keep the member with the
        // smallest residual (the explicit q = 1 probe wins its cluster).
        std::size_t j = i + 1;
        double best_q = raw[i];
        double best_res = std::fabs(residual(raw[i]));
        while (j < raw.size() && raw[j] - raw[j - 1] < options.dedup_tol) {
            const double res = std::fabs(residual(raw[j]));
            if (res < best_res) {
                best_res = res;
                best_q = raw[j];
            }
            ++j;
        }
        CharacteristicRoot root;
        root.q = best_q;
        root.residual = residual(best_q);
        root.handedness = best_q > 0.0 ? Handedness::Forward : Handedness::Reverse;
        root.branch_note = best_q < 0.0 ? "real branch (odd denominator)" : "positive axis";
        // Reported roots promise |residual| <= residual_tol; anything looser
        // (a crossing too steep to pin down at width_tol) is not a root claim
        // this search can stand behind.
        if (std::fabs(root.residual) <= options.residual_tol)
            out.push_back(root);
        i = j;
    }
    return out;
}

double verify_q1_identity(int m, const Rational& R) {
    if (m < 0)
        throw ParameterError("verify_q1_identity requires m >= 0");
    if (R.is_integer())
        throw ParameterError("verify_q1_identity undefined at integer order " + R.str());
    const double Rv = R.value();
    const double md = static_cast<double>(m);
    const double lhs = 1.0 / specfun::binomial_real_real(md - Rv, md);
    const double rhs = specfun::reflection_rhs(Rv) * specfun::binomial_real_real(md, Rv);
    return std::fabs(lhs - rhs);
}

} // namespace fraclimit::charpoly
