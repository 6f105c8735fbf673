#include "phw/limit_shape.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace phw {

double omega(double x) {
    const double a = std::abs(x);
    if (a >= 2.0)
        return a;
    return (2.0 / std::numbers::pi) * (x * std::asin(x / 2.0) + std::sqrt(4.0 - x * x));
}

double PolylineShape::eval(double x) const {
    if (pts.empty() || x <= pts.front().first || x >= pts.back().first)
        return std::abs(x);
    std::size_t lo = 0, hi = pts.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (pts[mid].first <= x)
            lo = mid;
        else
            hi = mid;
    }
    const double t = (x - pts[lo].first) / (pts[hi].first - pts[lo].first);
    return pts[lo].second + t * (pts[hi].second - pts[lo].second);
}

PolylineShape PolylineShape::from_profile(const Profile& profile) {
    PolylineShape s;
    const double scale = profile.scale();
    s.pts.reserve(profile.corners().size());
    for (const auto& c : profile.corners())
        s.pts.emplace_back(static_cast<double>(c.x) * scale, static_cast<double>(c.y) * scale);
    return s;
}

PolylineShape PolylineShape::omega_interpolant(std::size_t segments) {
    if (segments < 2)
        throw std::invalid_argument("omega interpolant needs at least 2 segments");
    PolylineShape s;
    s.pts.reserve(segments + 1);
    for (std::size_t i = 0; i <= segments; ++i) {
        const double x = -2.0 + 4.0 * static_cast<double>(i) / static_cast<double>(segments);
        s.pts.emplace_back(x, omega(x));
    }
    return s;
}

namespace {

// Golden-section maximisation of f on [a, b] (f smooth or concave per call site).
template <typename F>
double golden_max(F&& f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double best = std::max(f(a), f(b));
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 64 && (b - a) > 1e-12; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
        best = std::max({best, f1, f2});
    }
    return best;
}

template <typename Psi>
double sup_distance_impl(const Psi& psi_fn, const std::vector<double>& shape_knots) {
    // mesh: shape corners plus the kinks of Ω and |x|
    std::vector<double> knots = shape_knots;
    knots.push_back(-2.0);
    knots.push_back(0.0);
    knots.push_back(2.0);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                knots.end());
    double best = 0.0;
    auto diff = [&](double x) { return psi_fn(x) - omega(x); };
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1];
        if (b - a < 1e-15)
            continue;
        // ψ−Ω is concave per segment (Ω convex, ψ linear), so its max brackets
        // cleanly; the minimum of a convex −(ψ−Ω) sits at the endpoints.
        best = std::max(best, golden_max(diff, a, b));
        best = std::max(best, std::max(std::abs(diff(a)), std::abs(diff(b))));
    }
    return best;
}

} // namespace

double sup_distance(const Profile& psi, bool exclude_first_part) {
    if (exclude_first_part) {
        const auto& parts = psi.source().parts();
        std::vector<std::uint32_t> rest(parts.begin() + (parts.empty() ? 0 : 1), parts.end());
        const Profile reduced(Partition(std::move(rest)), psi.norm());
        return sup_distance(reduced, false);
    }
    std::vector<double> knots;
    const double scale = psi.scale();
    for (const auto& c : psi.corners())
        knots.push_back(static_cast<double>(c.x) * scale);
    return sup_distance_impl([&](double x) { return psi.psi(x); }, knots);
}

double sup_distance(const PolylineShape& psi) {
    std::vector<double> knots;
    for (const auto& p : psi.pts)
        knots.push_back(p.first);
    return sup_distance_impl([&](double x) { return psi.eval(x); }, knots);
}

Rational content_from_profile(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("content_from_profile requires a nonempty partition");
    return rescaled_profile(lambda).content_moment_half();
}

namespace {

/* The shape's boundary in French coordinates: the monotone polyline
 * (u, w) = ((y−x)/2, (y+x)/2) over the Russian vertices, u ascending and w
 * descending. φ_row(u) = w on the polyline; φ_col(w) = u by monotonicity.
 * Partition staircases contribute axis-parallel pieces, smooth interpolants
 * strictly monotone ones; evaluation at jump points picks the outer value,
 * which only ever differs on a measure-zero set. */
struct FrenchBoundary {
    std::vector<double> u, w; // same length; u ascending, w descending

    static FrenchBoundary build(const std::vector<std::pair<double, double>>& russian_pts) {
        FrenchBoundary fb;
        fb.u.reserve(russian_pts.size());
        fb.w.reserve(russian_pts.size());
        // Russian vertices come with x ascending, i.e. u descending; reverse.
        for (auto it = russian_pts.rbegin(); it != russian_pts.rend(); ++it) {
            const double uu = (it->second - it->first) / 2.0;
            const double ww = (it->second + it->first) / 2.0;
            fb.u.push_back(uu);
            fb.w.push_back(ww);
        }
        /* (y−x)/2 and (y+x)/2 round independently, so the two ends of one
         * vertical (or horizontal) land ulps apart — sometimes out of order.
         * Snap near-equal neighbours to a shared value so duplicate detection
         * and the binary search see exact knots; genuine knots of any usable
         * mesh sit far above this tolerance. */
        for (std::size_t i = 1; i < fb.u.size(); ++i) {
            const double tol_u = 1e-12 * std::max(1.0, std::abs(fb.u[i - 1]));
            if (std::abs(fb.u[i] - fb.u[i - 1]) <= tol_u)
                fb.u[i] = fb.u[i - 1];
            else if (fb.u[i] < fb.u[i - 1])
                throw std::invalid_argument("shape boundary is not 1-Lipschitz");
            const double tol_w = 1e-12 * std::max(1.0, std::abs(fb.w[i - 1]));
            if (std::abs(fb.w[i] - fb.w[i - 1]) <= tol_w)
                fb.w[i] = fb.w[i - 1];
            else if (fb.w[i] > fb.w[i - 1])
                throw std::invalid_argument("shape boundary is not 1-Lipschitz");
        }
        return fb;
    }

    double u_max() const { return u.back(); }

    /* w(u) by interpolation. Vertical pieces (staircase boundaries) make the
     * column height jump, so the value at such a u is one-sided: the outer
     * quadrature asks for the limit matching its interval (left_limit = true
     * for a right endpoint). Away from jumps both limits coincide. */
    double phi_row(double uu, bool left_limit = false) const {
        if (uu <= u.front())
            return w.front();
        if (uu >= u.back()) {
            if (!left_limit)
                return w.back();
            std::size_t j = u.size() - 1;
            while (j > 0 && u[j - 1] == u.back())
                --j;
            return w[j]; // top of the closing vertical
        }
        std::size_t lo = 0, hi = u.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (u[mid] <= uu)
                lo = mid;
            else
                hi = mid;
        }
        // lo is the last index with u[lo] ≤ uu, so u[hi] > uu strictly
        if (u[lo] == uu) {
            if (!left_limit)
                return w[lo];
            while (lo > 0 && u[lo - 1] == uu)
                --lo;
            return w[lo];
        }
        const double t = (uu - u[lo]) / (u[hi] - u[lo]);
        return w[lo] + t * (w[hi] - w[lo]);
    }
};

// ∫ log K dv with K = k0 + slope·(v − v0): exact antiderivative K(log K − 1)/slope.
double log_linear_integral(double k_at_a, double k_at_b, double slope) {
    auto g = [](double k) { return k <= 0.0 ? 0.0 : k * (std::log(k) - 1.0); };
    return (g(k_at_b) - g(k_at_a)) / slope;
}

struct InnerIntegrand {
    const FrenchBoundary& fb;

    /* F(u) = ∫₀^{φ(u)} log(φ_row(u) − v + φ_col(v) − u) dv in closed form.
     * Walk the boundary from its top (v = w descending side): φ_col is linear
     * in v between consecutive w-knots, so each piece integrates exactly. */
    double operator()(double uu) const { return with_phi(uu, fb.phi_row(uu)); }

    // F jumps where the row height φ does; the caller picks the side.
    double with_phi(double uu, double phi_u) const {
        if (phi_u <= 0.0)
            return 0.0;
        const double base = phi_u - uu;
        double acc = 0.0;
        // pieces of φ_col over v ∈ [0, phi_u], from the w-knot list. w is
        // descending along the stored arrays; iterate segments and clip.
        for (std::size_t s = 0; s + 1 < fb.u.size(); ++s) {
            // segment s: (u[s], w[s]) → (u[s+1], w[s+1]), w decreasing
            const double w_hi = fb.w[s], w_lo = fb.w[s + 1];
            const double v0 = std::max(0.0, std::min(w_lo, phi_u));
            const double v1 = std::max(0.0, std::min(w_hi, phi_u));
            if (v1 <= v0)
                continue;
            double col_slope; // dφ_col/dv on this piece
            double col_at_v0;
            if (w_hi == w_lo)
                continue; // horizontal in w: zero v-measure
            col_slope = (fb.u[s] - fb.u[s + 1]) / (w_hi - w_lo); // ≤ 0
            col_at_v0 = fb.u[s + 1] + col_slope * (v0 - w_lo);
            // K(v) = base − v + φ_col(v): linear, slope (col_slope − 1) < 0
            const double k_slope = col_slope - 1.0;
            const double k0 = std::max(0.0, base - v0 + col_at_v0);
            const double k1 = std::max(0.0, k0 + k_slope * (v1 - v0));
            acc += log_linear_integral(k0, k1, k_slope);
        }
        return acc;
    }
};

struct AdaptiveSimpson {
    const InnerIntegrand& f;
    const QuadratureOptions& opts;
    mutable long evals = 0;

    double run(double a, double b, double tol) const {
        // one-sided limits at the interval ends: F jumps across boundary
        // verticals, and those verticals are exactly the interval cuts
        const double fa = f.with_phi(a, f.fb.phi_row(a, /*left_limit=*/false));
        const double fb_ = f.with_phi(b, f.fb.phi_row(b, /*left_limit=*/true));
        const double fm = f((a + b) / 2);
        evals += 3;
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb_);
        return recurse(a, b, fa, fm, fb_, whole, tol, 0);
    }

    double recurse(double a, double b, double fa, double fm, double fb_,
                   double whole, double tol, int depth) const {
        const double m = (a + b) / 2;
        const double lm = (a + m) / 2, rm = (m + b) / 2;
        const double flm = f(lm), frm = f(rm);
        evals += 2;
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb_);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-13)
            return left + right + delta / 15.0;
        if (depth >= opts.max_depth)
            throw QuadratureError(
                "hook integral: adaptive quadrature stalled on [" + std::to_string(a) + ", " +
                std::to_string(b) + "] at depth " + std::to_string(depth) +
                ", local error " + std::to_string(std::abs(delta)) + " > " + std::to_string(15.0 * tol) +
                " (abs_tol " + std::to_string(opts.abs_tol) + ", evals " + std::to_string(evals) + ")");
        return recurse(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
               recurse(m, b, fm, frm, fb_, right, tol / 2, depth + 1);
    }
};

} // namespace

double hook_integral(const PolylineShape& psi, QuadratureOptions opts) {
    if (psi.pts.size() < 2)
        throw std::invalid_argument("hook integral requires a non-degenerate shape");
    const FrenchBoundary fb = FrenchBoundary::build(psi.pts);
    const InnerIntegrand inner{fb};
    AdaptiveSimpson quad{inner, opts};

    // split the outer range at the u-knots (the integrand kinks there)
    std::vector<double> cuts;
    cuts.push_back(0.0);
    for (double uu : fb.u)
        if (uu > 1e-15 && uu < fb.u_max() - 1e-15)
            cuts.push_back(uu);
    cuts.push_back(fb.u_max());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const double total_len = fb.u_max();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (b - a < 1e-15)
            continue;
        acc += quad.run(a, b, opts.abs_tol * (b - a) / total_len);
    }
    return acc;
}

double hook_integral(const Partition& lambda, QuadratureOptions opts) {
    if (lambda.empty())
        throw std::invalid_argument("hook integral requires a nonempty partition");
    return hook_integral(PolylineShape::from_profile(rescaled_profile(lambda)), opts);
}

ShapeStats shape_stats(const Partition& lambda, std::uint64_t n, std::uint64_t ell) {
    if (lambda.empty())
        throw std::invalid_argument("shape_stats requires a nonempty partition");
    if (lambda.size() != n)
        throw std::invalid_argument("shape_stats: |lambda| != n");
    if (ell < 1)
        throw std::invalid_argument("shape_stats requires ell >= 1");
    ShapeStats s{};
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    s.lambda1_ratio = static_cast<double>(lambda.parts()[0]) * std::log(static_cast<double>(n)) /
                      (2.0 * static_cast<double>(ell));
    s.lambda2_scaled = static_cast<double>(lambda.part(1)) / sqrt_n;
    s.length_scaled = static_cast<double>(lambda.length()) / sqrt_n;
    s.sup_dist_bulk = sup_distance(rescaled_profile(lambda, n), /*exclude_first_part=*/true);
    return s;
}

} // namespace phw
