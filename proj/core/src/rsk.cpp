#include "phw/rsk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phw {

void validate_permutation(const Permutation& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    for (std::uint32_t v : sigma) {
        if (v < 1 || v > sigma.size() || seen[v])
            throw std::invalid_argument("malformed permutation: not a bijection on [n]");
        seen[v] = true;
    }
}

Partition RskResult::shape() const {
    std::vector<std::uint32_t> parts;
    parts.reserve(p.size());
    for (const auto& row : p)
        parts.push_back(static_cast<std::uint32_t>(row.size()));
    return Partition(std::move(parts));
}

RskResult rsk(const Permutation& sigma) {
    validate_permutation(sigma);
    RskResult r;
    for (std::uint32_t step = 0; step < sigma.size(); ++step) {
        std::uint32_t v = sigma[step];
        std::size_t row = 0;
        for (;;) {
            if (row == r.p.size()) {
                r.p.emplace_back();
                r.q.emplace_back();
            }
            auto& cur = r.p[row];
            auto it = std::upper_bound(cur.begin(), cur.end(), v);
            if (it == cur.end()) {
                cur.push_back(v);
                r.q[row].push_back(step + 1);
                break;
            }
            std::swap(*it, v); // bump and continue into the next row
            ++row;
        }
    }
    return r;
}

Partition rsk_shape(const Permutation& sigma) {
    validate_permutation(sigma);
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::uint32_t v : sigma) {
        std::size_t row = 0;
        for (;;) {
            if (row == rows.size())
                rows.emplace_back();
            auto& cur = rows[row];
            auto it = std::upper_bound(cur.begin(), cur.end(), v);
            if (it == cur.end()) {
                cur.push_back(v);
                break;
            }
            std::swap(*it, v);
            ++row;
        }
    }
    std::vector<std::uint32_t> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<std::uint32_t>(row.size()));
    return Partition(std::move(parts));
}

Permutation random_permutation(std::uint64_t n, Rng& rng) {
    Permutation sigma(n);
    for (std::uint64_t i = 0; i < n; ++i)
        sigma[i] = static_cast<std::uint32_t>(i + 1);
    for (std::uint64_t i = n; i > 1; --i) {
        const std::uint64_t j = rng.next_below(i);
        std::swap(sigma[i - 1], sigma[j]);
    }
    return sigma;
}

namespace {

Partition growth_sample(std::uint64_t n, Rng& rng) {
    Partition mu;
    double log_f_mu = 0.0;
    for (std::uint64_t m = 1; m <= n; ++m) {
        const auto candidates = add_box_shapes(mu);
        std::vector<double> w(candidates.size());
        std::vector<double> logf(candidates.size());
        double total = 0.0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            logf[i] = log_dim_syt(candidates[i]);
            // f_ν/(m·f_μ); the m is a common factor, so fold it into the
            // explicit normalisation below (the weights sum to m exactly).
            w[i] = std::exp(logf[i] - log_f_mu);
            total += w[i];
        }
        double u = rng.next_unit() * total;
        std::size_t pick = candidates.size() - 1;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (u < w[i]) {
                pick = i;
                break;
            }
            u -= w[i];
        }
        mu = candidates[pick];
        log_f_mu = logf[pick];
    }
    return mu;
}

} // namespace

Partition plancherel_sample(std::uint64_t n, Rng& rng, PlancherelMethod method) {
    if (n < 1)
        throw std::invalid_argument("plancherel_sample requires n >= 1");
    if (method == PlancherelMethod::Rsk)
        return rsk_shape(random_permutation(n, rng));
    return growth_sample(n, rng);
}

} // namespace phw
