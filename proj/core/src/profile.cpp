#include "phw/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phw {

namespace {

Rational ratio(const BigCount& num, const BigCount& den) {
    Rational r = Rational(num) / Rational(den);
    return r;
}

// ∫_a^b (αu + β) du and ∫_a^b u(αu + β) du, exact.
Rational linear_integral(std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta) {
    const BigCount A(static_cast<long>(a)), B(static_cast<long>(b));
    const BigCount al(static_cast<long>(alpha)), be(static_cast<long>(beta));
    return ratio(al * (B * B - A * A), BigCount(2)) + Rational(BigCount(be * (B - A)));
}

Rational linear_moment(std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta) {
    const BigCount A(static_cast<long>(a)), B(static_cast<long>(b));
    const BigCount al(static_cast<long>(alpha)), be(static_cast<long>(beta));
    return ratio(al * (B * B * B - A * A * A), BigCount(3)) + ratio(be * (B * B - A * A), BigCount(2));
}

} // namespace

Profile::Profile(const Partition& lambda, std::uint64_t n) : source_(lambda), norm_(n) {
    if (lambda.size() > n)
        throw std::invalid_argument("profile normalisation size must be >= |lambda|");
    if (lambda.empty())
        return; // ψ = |x|, no corners
    const auto& ps = lambda.parts();
    const std::int64_t m = static_cast<std::int64_t>(ps.size());

    // Slope −1 exactly over [λ_i − i, λ_i − i + 1] (i 1-based); these starts
    // are strictly decreasing in i, so walk them in ascending x and merge
    // runs of consecutive integers into single descending segments.
    std::vector<std::int64_t> descents(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        descents[ps.size() - 1 - i] = static_cast<std::int64_t>(ps[i]) - static_cast<std::int64_t>(i) - 1;

    std::int64_t x = -m, y = m;
    corners_.push_back({x, y});
    std::size_t i = 0;
    while (i < descents.size()) {
        std::size_t j = i;
        while (j + 1 < descents.size() && descents[j + 1] == descents[j] + 1)
            ++j;
        const std::int64_t up = descents[i] - x; // ascend to the run start
        y += up;
        x = descents[i];
        corners_.push_back({x, y});
        const std::int64_t down = static_cast<std::int64_t>(j - i + 1);
        x += down;
        y -= down;
        corners_.push_back({x, y});
        i = j + 1;
    }
    // The walk must land back on the vacuum at (λ₁, λ₁).
    if (x != static_cast<std::int64_t>(ps[0]) || y != x)
        throw std::logic_error("profile construction did not close on |x|");
}

double Profile::scale() const {
    return norm_ == 0 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(norm_));
}

double Profile::psi(double x) const {
    if (corners_.empty() || norm_ == 0)
        return std::abs(x);
    const double s = std::sqrt(static_cast<double>(norm_));
    const double u = x * s;
    if (u <= static_cast<double>(corners_.front().x) || u >= static_cast<double>(corners_.back().x))
        return std::abs(x);
    // binary search for the segment containing u
    std::size_t lo = 0, hi = corners_.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (static_cast<double>(corners_[mid].x) <= u)
            lo = mid;
        else
            hi = mid;
    }
    const auto& c0 = corners_[lo];
    const auto& c1 = corners_[hi];
    const double t = (u - static_cast<double>(c0.x)) / static_cast<double>(c1.x - c0.x);
    const double v = static_cast<double>(c0.y) + t * static_cast<double>(c1.y - c0.y);
    return v / s;
}

Rational Profile::area_above_axis() const {
    if (corners_.empty())
        return Rational(0);
    Rational acc(0);
    for (std::size_t k = 0; k + 1 < corners_.size(); ++k) {
        std::int64_t a = corners_[k].x, b = corners_[k + 1].x;
        const std::int64_t slope = (corners_[k + 1].y - corners_[k].y) / (b - a);
        const std::int64_t beta = corners_[k].y - slope * a;
        // subtract |u| piecewise, splitting at 0
        std::int64_t cuts[3] = {a, std::clamp<std::int64_t>(0, a, b), b};
        for (int piece = 0; piece < 2; ++piece) {
            const std::int64_t lo = cuts[piece], hi = cuts[piece + 1];
            if (lo == hi) continue;
            const std::int64_t sign = (lo + hi < 0) ? -1 : 1; // sign of u on (lo,hi)
            acc += linear_integral(lo, hi, slope - sign, beta);
        }
    }
    // rescaled: divide the unrescaled area by n
    return acc / Rational(BigCount(static_cast<unsigned long>(norm_)));
}

Rational Profile::content_moment_half() const {
    if (corners_.empty())
        return Rational(0);
    Rational acc(0);
    for (std::size_t k = 0; k + 1 < corners_.size(); ++k) {
        std::int64_t a = corners_[k].x, b = corners_[k + 1].x;
        const std::int64_t slope = (corners_[k + 1].y - corners_[k].y) / (b - a);
        const std::int64_t beta = corners_[k].y - slope * a;
        std::int64_t cuts[3] = {a, std::clamp<std::int64_t>(0, a, b), b};
        for (int piece = 0; piece < 2; ++piece) {
            const std::int64_t lo = cuts[piece], hi = cuts[piece + 1];
            if (lo == hi) continue;
            const std::int64_t sign = (lo + hi < 0) ? -1 : 1;
            acc += linear_moment(lo, hi, slope - sign, beta);
        }
    }
    // (n^{3/2}/2)·∫x(ψ−|x|)dx = (1/2)·∫u(ψ̂−|u|)du : the scale factor cancels.
    return acc / Rational(2);
}

bool Profile::is_one_lipschitz() const {
    for (std::size_t k = 0; k + 1 < corners_.size(); ++k) {
        const std::int64_t dx = corners_[k + 1].x - corners_[k].x;
        const std::int64_t dy = corners_[k + 1].y - corners_[k].y;
        if (dx <= 0 || std::abs(dy) > dx)
            return false;
    }
    return true;
}

Profile rescaled_profile(const Partition& lambda) { return Profile(lambda, lambda.size()); }

Profile rescaled_profile(const Partition& lambda, std::uint64_t n) { return Profile(lambda, n); }

} // namespace phw
