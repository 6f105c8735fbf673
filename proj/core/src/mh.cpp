#include "phw/mh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace phw {

Partition warm_start_partition(std::uint32_t n, std::uint32_t ell) {
    if (n < 1)
        throw std::invalid_argument("warm start requires n >= 1");
    std::uint64_t L0 = 1;
    if (n >= 2) {
        const double raw = 2.0 * ell / std::log(static_cast<double>(n));
        L0 = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::llround(raw)), 1, n);
    }
    std::uint64_t rest = n - L0;
    // staircase t, t−1, …, 1 with t(t+1)/2 ≤ rest; leftover boxes widen the top rows
    std::uint64_t t = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(rest) + 1.0) - 1.0) / 2.0);
    while ((t + 1) * (t + 2) / 2 <= rest)
        ++t;
    while (t > 0 && t * (t + 1) / 2 > rest)
        --t;
    const std::uint64_t leftover = rest - t * (t + 1) / 2;
    std::vector<std::uint32_t> parts;
    parts.push_back(static_cast<std::uint32_t>(L0));
    for (std::uint64_t i = 0; i < t; ++i) {
        std::uint32_t row = static_cast<std::uint32_t>(t - i);
        if (i < leftover)
            ++row;
        parts.push_back(row);
    }
    if (leftover > t)
        parts.push_back(1); // leftover == t+1 can occur only as a full extra row
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace {

// log k for integer hooks, grown geometrically on demand.
class LogTable {
public:
    double operator()(std::int64_t k) {
        const auto idx = static_cast<std::size_t>(k);
        if (idx >= table_.size()) {
            std::size_t cap = std::max<std::size_t>(table_.size() * 2, idx + 16);
            const std::size_t old = table_.size();
            table_.resize(cap);
            for (std::size_t i = std::max<std::size_t>(old, 1); i < cap; ++i)
                table_[i] = std::log(static_cast<double>(i));
        }
        return table_[idx];
    }

private:
    std::vector<double> table_{0.0, 0.0}; // [0] unused, log 1 = 0
};

/* Mutable chain state: row lengths, column lengths, content sum and log f_λ,
 * all maintained incrementally under single-box moves. */
struct ChainState {
    std::vector<std::int64_t> rows, cols;
    std::int64_t content = 0;
    double log_f = 0.0;
    LogTable logs;

    void load(const Partition& p) {
        rows.assign(p.parts().begin(), p.parts().end());
        cols.clear();
        if (!rows.empty()) {
            cols.assign(static_cast<std::size_t>(rows[0]), 0);
            for (std::int64_t len : rows)
                for (std::int64_t j = 0; j < len; ++j)
                    ++cols[static_cast<std::size_t>(j)];
        }
        content = content_sum(p);
        log_f = log_dim_syt(p);
    }

    Partition snapshot() const {
        std::vector<std::uint32_t> parts(rows.begin(), rows.end());
        return Partition(std::move(parts));
    }

    // Number of removable corners = number of distinct part values.
    std::size_t removable_count() const {
        std::size_t r = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i + 1 == rows.size() || rows[i] > rows[i + 1])
                ++r;
        return r;
    }

    void removable_rows(std::vector<std::uint32_t>& out) const {
        out.clear();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i + 1 == rows.size() || rows[i] > rows[i + 1])
                out.push_back(static_cast<std::uint32_t>(i));
    }

    // Addable row indices of the current shape (index rows.size() = new row).
    void addable_rows(std::vector<std::uint32_t>& out) const {
        out.clear();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i == 0 || rows[i] < rows[i - 1])
                out.push_back(static_cast<std::uint32_t>(i));
        out.push_back(static_cast<std::uint32_t>(rows.size()));
    }

    void remove_box(std::uint32_t r) {
        const std::int64_t c = rows[r] - 1; // 0-based column of the removed box
        --rows[r];
        --cols[static_cast<std::size_t>(c)];
        if (rows[r] == 0)
            rows.pop_back(); // removable length-1 rows are always last
        if (!cols.empty() && cols.back() == 0)
            cols.pop_back();
    }

    void add_box(std::uint32_t r) {
        if (r == rows.size())
            rows.push_back(0);
        const std::int64_t c = rows[r]; // 0-based column of the new box
        ++rows[r];
        if (static_cast<std::size_t>(c) == cols.size())
            cols.push_back(0);
        ++cols[static_cast<std::size_t>(c)];
    }

    /* Σ log hooks over rows {r1, r2} and columns {c1, c2} of the current
     * shape (indices may exceed the shape — they contribute nothing).
     * hook(i,j) = rows[i] − j + cols[j] − i − 1 in 0-based coordinates. */
    double affected_log_hooks(std::int64_t r1, std::int64_t r2, std::int64_t c1, std::int64_t c2) {
        double s = 0.0;
        const std::int64_t m = static_cast<std::int64_t>(rows.size());
        const std::int64_t w = static_cast<std::int64_t>(cols.size());
        for (std::int64_t i : {r1, r2}) {
            if (i < 0 || i >= m)
                continue;
            for (std::int64_t j = 0; j < rows[static_cast<std::size_t>(i)]; ++j)
                s += logs(rows[static_cast<std::size_t>(i)] - j + cols[static_cast<std::size_t>(j)] - i - 1);
        }
        for (std::int64_t j : {c1, c2}) {
            if (j < 0 || j >= w)
                continue;
            for (std::int64_t i = 0; i < cols[static_cast<std::size_t>(j)]; ++i) {
                if (i == r1 || i == r2)
                    continue; // already counted with the rows
                s += logs(rows[static_cast<std::size_t>(i)] - j + cols[static_cast<std::size_t>(j)] - i - 1);
            }
        }
        return s;
    }
};

} // namespace

MhResult mh_sample(const MeasureSpec& spec, const ChainConfig& cfg,
                   const std::function<void(const MhSample&)>& sink) {
    spec.validate();
    cfg.validate();

    Partition start;
    if (cfg.init == ChainConfig::Init::Given) {
        start = cfg.initial;
        if (start.size() != spec.n)
            throw std::invalid_argument("chain config: initial partition has wrong size");
    } else {
        start = warm_start_partition(spec.n, spec.ell);
    }
    const bool positive_half = spec.variant == MeasureVariant::PositiveHalf;
    if (positive_half) {
        if (spec.n < 2)
            throw std::invalid_argument("positive-half chain requires n >= 2");
        if (content_sum(start) <= 0) {
            if (cfg.init == ChainConfig::Init::Given)
                throw std::invalid_argument("chain config: initial state has C <= 0 under positive-half");
            start = Partition({static_cast<std::uint32_t>(spec.n)}); // C = n(n−1)/2 > 0
        }
    }
    if (!positive_half && spec.ell > 0 && content_sum(start) == 0) {
        if (cfg.init == ChainConfig::Init::Given)
            throw std::invalid_argument("chain config: initial state has zero weight (C = 0)");
        if (spec.n < 2) // only state is (1), and it has no mass
            throw UndefinedMeasureError("full measure with ell > 0 is undefined at n = 1");
        // the warm start can land on the C = 0 diagonal (staircases do);
        // move one box from the last row to the first, raising C by
        // λ₁ − λ_k + k > 0
        std::vector<std::uint32_t> parts(start.parts());
        parts.front() += 1;
        if (parts.back() == 1)
            parts.pop_back();
        else
            parts.back() -= 1;
        start = Partition(std::move(parts));
    }

    ChainState st;
    st.load(start);
    Rng rng(cfg.seed);

    MhResult res;
    std::vector<std::uint32_t> removable, addable;
    const double ell = static_cast<double>(spec.ell);

    for (std::uint64_t step = 1; step <= cfg.steps; ++step) {
        ++res.proposals;
        st.removable_rows(removable);
        const std::size_t r_lambda = removable.size();
        const std::uint32_t src = removable[rng.next_below(r_lambda)];
        const std::int64_t c_src = st.rows[src] - 1; // 0-based column of the box

        st.remove_box(src);
        st.addable_rows(addable);
        const std::uint32_t dst = addable[rng.next_below(addable.size())];
        const std::int64_t c_dst = dst < st.rows.size() ? st.rows[dst] : 0;

        if (dst == src) {
            // self-proposal: the box goes back where it came from; identical
            // weight, always accepted
            st.add_box(dst);
            ++res.accepts;
        } else {
            // measure the affected hook lines on λ, so undo the removal first
            st.add_box(src);
            const double sum_before = st.affected_log_hooks(src, dst, c_src, c_dst);

            // apply the move: λ → ν
            st.remove_box(src);
            st.add_box(dst);
            const double sum_after = st.affected_log_hooks(src, dst, c_src, c_dst);

            const std::int64_t delta_c = (c_dst - static_cast<std::int64_t>(dst)) -
                                         (c_src - static_cast<std::int64_t>(src));
            const std::int64_t c_new = st.content + delta_c;

            bool reject = false;
            if (positive_half && c_new <= 0)
                reject = true;
            if (!positive_half && spec.ell > 0 && c_new == 0)
                reject = true;

            double log_ratio = 0.0;
            if (!reject) {
                const double dlogf = sum_before - sum_after; // log f = log n! − Σ log hooks
                double dlogc = 0.0;
                if (spec.ell > 0)
                    dlogc = std::log(std::abs(static_cast<double>(c_new))) -
                            std::log(std::abs(static_cast<double>(st.content)));
                const std::size_t r_nu = st.removable_count();
                log_ratio = 2.0 * dlogf + ell * dlogc +
                            std::log(static_cast<double>(r_lambda)) -
                            std::log(static_cast<double>(r_nu));
                if (log_ratio < 0.0 && rng.next_unit() >= std::exp(log_ratio))
                    reject = true;
                if (!reject) {
                    st.content = c_new;
                    st.log_f += dlogf;
                    ++res.accepts;
                }
            }
            if (reject) {
                // undo: ν → λ
                st.remove_box(dst);
                st.add_box(src);
            }
        }

        if (step > cfg.burnin && (step - cfg.burnin) % cfg.thin == 0) {
            MhSample s;
            s.step = step;
            s.state = st.snapshot();
            s.content = st.content;
            s.logw = 2.0 * st.log_f +
                     (spec.ell > 0 ? ell * std::log(std::abs(static_cast<double>(st.content))) : 0.0);
            ++res.emitted;
            sink(s);
        }
    }

    res.final_state = st.snapshot();
    res.final_content = st.content;
    res.final_logw = 2.0 * st.log_f +
                     (spec.ell > 0 ? ell * std::log(std::abs(static_cast<double>(st.content))) : 0.0);
    return res;
}

} // namespace phw
