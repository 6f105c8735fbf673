#include "phw/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace phw {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition parse_partition(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size() || text[i] != '[')
        throw std::invalid_argument("partition text must start with '['");
    ++i;
    std::vector<std::uint32_t> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            std::uint64_t v = 0;
            bool any = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 0xffffffffull)
                    throw std::invalid_argument("partition part out of range");
                ++i;
                any = true;
            }
            if (!any)
                throw std::invalid_argument("expected integer in partition text");
            parts.push_back(static_cast<std::uint32_t>(v));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw std::invalid_argument("expected ',' or ']' in partition text");
        }
    }
    skip_ws();
    if (i != text.size())
        throw std::invalid_argument("trailing characters after partition text");
    return Partition(std::move(parts));
}

std::string to_text(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ']';
    return s;
}

std::uint64_t partition_count(unsigned n) {
    if (n > 416)
        throw std::overflow_error("partition_count: p(n) exceeds 64 bits for n > 416");
    std::vector<unsigned __int128> p(n + 1, 0);
    p[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        __int128 acc = 0;
        for (unsigned k = 1;; ++k) {
            const unsigned long long g1 = static_cast<unsigned long long>(k) * (3ull * k - 1) / 2;
            const unsigned long long g2 = static_cast<unsigned long long>(k) * (3ull * k + 1) / 2;
            if (g1 > m) break;
            const __int128 sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * static_cast<__int128>(p[m - g1]);
            if (g2 <= m)
                acc += sign * static_cast<__int128>(p[m - g2]);
        }
        p[m] = static_cast<unsigned __int128>(acc);
    }
    if (p[n] > static_cast<unsigned __int128>(~0ull))
        throw std::overflow_error("partition_count: value exceeds 64 bits");
    return static_cast<std::uint64_t>(p[n]);
}

PartitionStream::PartitionStream(std::uint64_t n) : n_(n) {}

std::optional<Partition> PartitionStream::next() {
    if (done_)
        return std::nullopt;
    if (first_) {
        first_ = false;
        if (n_ == 0) {
            done_ = true;
            return Partition{};
        }
        if (n_ > 0xffffffffull)
            throw std::invalid_argument("partition stream limited to n < 2^32");
        cur_.assign(1, static_cast<std::uint32_t>(n_));
        return Partition(cur_);
    }
    // Successor in lexicographic descending order: decrement the rightmost
    // part > 1, then refill the tail greedily with parts of the new size.
    std::size_t k = cur_.size();
    while (k > 0 && cur_[k - 1] == 1) --k;
    if (k == 0) {
        done_ = true;
        return std::nullopt;
    }
    std::uint64_t rest = cur_.size() - k + 1; // the unit we removed plus all trailing 1s
    const std::uint32_t x = cur_[k - 1] - 1;
    cur_.resize(k - 1);
    cur_.push_back(x);
    while (rest >= x) {
        cur_.push_back(x);
        rest -= x;
    }
    if (rest > 0)
        cur_.push_back(static_cast<std::uint32_t>(rest));
    return Partition(cur_);
}

void for_each_partition(std::uint64_t n, const std::function<void(const Partition&)>& fn) {
    PartitionStream s(n);
    while (auto p = s.next())
        fn(*p);
}

void for_each_partition_strided(std::uint64_t n, unsigned stride, unsigned offset,
                                const std::function<void(const Partition&)>& fn) {
    if (stride == 0 || offset >= stride)
        throw std::invalid_argument("strided enumeration requires 0 <= offset < stride");
    PartitionStream s(n);
    std::uint64_t idx = 0;
    while (auto p = s.next()) {
        if (idx % stride == offset)
            fn(*p);
        ++idx;
    }
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return Partition{};
    std::vector<std::uint32_t> c(p.parts()[0], 0);
    for (std::uint32_t part : p.parts())
        for (std::uint32_t j = 0; j < part; ++j)
            ++c[j];
    return Partition(std::move(c));
}

std::vector<std::uint32_t> hook_lengths(const Partition& p) {
    const Partition conj = conjugate(p);
    std::vector<std::uint32_t> hooks;
    hooks.reserve(p.size());
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::uint32_t j = 0; j < p.parts()[i]; ++j)
            hooks.push_back(p.parts()[i] - j + conj.parts()[j] - static_cast<std::uint32_t>(i) - 1);
    return hooks;
}

BigCount dim_syt(const Partition& p) {
    BigCount prod = 1;
    for (std::uint32_t h : hook_lengths(p))
        prod *= h;
    BigCount num = factorial_big(p.size());
    if (mpz_divisible_p(num.get_mpz_t(), prod.get_mpz_t()) == 0)
        throw std::logic_error("dim_syt: hook product does not divide n!");
    BigCount f;
    mpz_divexact(f.get_mpz_t(), num.get_mpz_t(), prod.get_mpz_t());
    return f;
}

double log_dim_syt(const Partition& p) {
    double s = std::lgamma(static_cast<double>(p.size()) + 1.0);
    for (std::uint32_t h : hook_lengths(p))
        s -= std::log(static_cast<double>(h));
    return s;
}

std::int64_t content_sum(const Partition& p) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < p.length(); ++i) {
        const std::int64_t row = p.parts()[i];
        // Σ_{j=1..λ_i} (j − i) with i 1-based = λ_i(λ_i+1)/2 − i·λ_i
        c += row * (row + 1) / 2 - static_cast<std::int64_t>(i + 1) * row;
    }
    return c;
}

std::pair<Partition, Partition> split_big_small(const Partition& p, std::uint32_t threshold) {
    std::vector<std::uint32_t> big, small;
    for (std::uint32_t part : p.parts())
        (part > threshold ? big : small).push_back(part);
    return {Partition(std::move(big)), Partition(std::move(small))};
}

std::vector<Partition> add_box_shapes(const Partition& mu) {
    std::vector<Partition> out;
    const auto& ps = mu.parts();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i == 0 || ps[i] < ps[i - 1]) {
            std::vector<std::uint32_t> q = ps;
            ++q[i];
            out.emplace_back(std::move(q));
        }
    }
    std::vector<std::uint32_t> q = ps;
    q.push_back(1);
    out.emplace_back(std::move(q));
    return out;
}

std::vector<Partition> remove_box_shapes(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("remove_box_shapes: partition must be nonempty");
    std::vector<Partition> out;
    const auto& ps = lambda.parts();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i + 1 == ps.size() || ps[i] > ps[i + 1]) {
            std::vector<std::uint32_t> q = ps;
            if (q[i] == 1)
                q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
            else
                --q[i];
            out.emplace_back(std::move(q));
        }
    }
    return out;
}

} // namespace phw
