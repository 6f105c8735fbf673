#include "phw/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace phw {

void TranspositionTuple::validate() const {
    if (n == 0)
        throw std::invalid_argument("transposition tuple needs n >= 1");
    for (const auto& [a, b] : taus) {
        if (a == b)
            throw std::invalid_argument("transposition with equal points: " + std::to_string(a));
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("transposition point out of range [1, " +
                                        std::to_string(n) + "]: " + std::to_string(a) + " " +
                                        std::to_string(b));
    }
}

TranspositionTuple parse_tuple(std::uint32_t n, std::string_view text) {
    TranspositionTuple t;
    t.n = n;
    std::size_t pos = 0;
    bool any_segment = false;
    while (pos <= text.size()) {
        const std::size_t next = text.find(';', pos);
        const std::string_view seg =
            text.substr(pos, (next == std::string_view::npos ? text.size() : next) - pos);
        pos = (next == std::string_view::npos) ? text.size() + 1 : next + 1;
        const bool blank = seg.find_first_not_of(" \t") == std::string_view::npos;
        if (blank) {
            if (any_segment || next != std::string_view::npos)
                throw std::invalid_argument("empty transposition in tuple text");
            break; // entirely blank input: the empty tuple
        }
        any_segment = true;
        std::istringstream iss{std::string(seg)};
        long long a = 0, b = 0;
        std::string rest;
        if (!(iss >> a >> b) || (iss >> rest))
            throw std::invalid_argument("malformed transposition \"" + std::string(seg) +
                                        "\" (want \"a b\")");
        if (a < 1 || b < 1 || a > static_cast<long long>(n) || b > static_cast<long long>(n))
            throw std::invalid_argument("transposition point out of range [1, " +
                                        std::to_string(n) + "]: \"" + std::string(seg) + "\"");
        const auto ua = static_cast<std::uint32_t>(a), ub = static_cast<std::uint32_t>(b);
        t.taus.emplace_back(std::min(ua, ub), std::max(ua, ub));
    }
    t.validate();
    return t;
}

std::string to_text(const TranspositionTuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.taus.size(); ++i) {
        if (i)
            out += ';';
        out += std::to_string(t.taus[i].first);
        out += ' ';
        out += std::to_string(t.taus[i].second);
    }
    return out;
}

bool is_pure(const TranspositionTuple& t) {
    t.validate();
    // img = τ_k∘…∘τ₁ as a point map, maintained with its inverse for O(1) steps
    std::vector<std::uint32_t> img(t.n + 1), pos(t.n + 1);
    for (std::uint32_t x = 0; x <= t.n; ++x)
        img[x] = pos[x] = x;
    for (const auto& [a, b] : t.taus) {
        const std::uint32_t ia = pos[a], ib = pos[b];
        std::swap(img[ia], img[ib]);
        std::swap(pos[a], pos[b]);
    }
    for (std::uint32_t x = 1; x <= t.n; ++x)
        if (img[x] != x)
            return false;
    return true;
}

HurwitzMap::HurwitzMap(const TranspositionTuple& t) : n_(t.n), ell_(t.taus.size()), source_(t) {
    t.validate();
    vertex_of_.resize(2 * ell_);
    rotation_.resize(n_);
    pos_.resize(2 * ell_);
    for (std::size_t k = 0; k < ell_; ++k) {
        const std::uint32_t lo = std::min(t.taus[k].first, t.taus[k].second);
        const std::uint32_t hi = std::max(t.taus[k].first, t.taus[k].second);
        vertex_of_[2 * k] = lo;
        vertex_of_[2 * k + 1] = hi;
        // darts arrive in increasing id = increasing label: lists stay sorted
        rotation_[lo - 1].push_back(static_cast<std::uint32_t>(2 * k));
        rotation_[hi - 1].push_back(static_cast<std::uint32_t>(2 * k + 1));
    }
    for (std::uint32_t v = 0; v < n_; ++v)
        for (std::size_t i = 0; i < rotation_[v].size(); ++i)
            pos_[rotation_[v][i]] = static_cast<std::uint32_t>(i);
}

std::uint32_t HurwitzMap::sigma(std::uint32_t dart) const {
    const auto& r = rotation_[vertex_of_[dart] - 1];
    return r[(pos_[dart] + 1) % r.size()];
}

std::uint32_t HurwitzMap::sigma_prev(std::uint32_t dart) const {
    const auto& r = rotation_[vertex_of_[dart] - 1];
    return r[(pos_[dart] + r.size() - 1) % r.size()];
}

HurwitzMap map_from_tuple(const TranspositionTuple& t) { return HurwitzMap(t); }

/* Corner (e, σ(e)) is a label descent when σ(e)'s label does not exceed e's:
 * with ascending rotations that is the cyclic wrap, and at a degree-1 vertex
 * the full corner (e, e) — equality only ever occurs there. The face walk
 * leaving dart d sweeps the far-vertex corner (F(d), α(d)) with
 * σ(F(d)) = α(d), so the test reads label(d) ≤ label(F(d)). */
std::vector<Face> faces(const HurwitzMap& m) {
    std::vector<Face> out;
    std::vector<char> seen(m.dart_count(), 0);
    for (std::uint32_t d0 = 0; d0 < m.dart_count(); ++d0) {
        if (seen[d0])
            continue;
        Face f;
        std::uint32_t d = d0;
        do {
            seen[d] = 1;
            f.darts.push_back(d);
            const std::uint32_t nd = m.sigma_prev(HurwitzMap::mate(d));
            if (HurwitzMap::label(d) <= HurwitzMap::label(nd))
                ++f.descents;
            d = nd;
        } while (d != d0);
        out.push_back(std::move(f));
    }
    for (std::uint32_t v = 1; v <= m.n(); ++v) {
        if (m.degree(v) == 0) {
            Face f;
            f.isolated_vertex = v;
            f.descents = 1; // the lone full corner
            out.push_back(std::move(f));
        }
    }
    return out;
}

bool unique_vertex_descents(const HurwitzMap& m) {
    for (std::uint32_t v = 1; v <= m.n(); ++v) {
        const auto& r = m.rotation(v);
        if (r.empty())
            continue;
        std::size_t descents = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (HurwitzMap::label(r[(i + 1) % r.size()]) <= HurwitzMap::label(r[i]))
                ++descents;
        if (descents != 1)
            return false;
    }
    return true;
}

bool descent_corner_purity(const HurwitzMap& m) {
    for (const Face& f : faces(m))
        if (f.descents != 1)
            return false;
    return true;
}

namespace {

struct Dsu {
    std::vector<std::uint32_t> parent;

    explicit Dsu(std::uint32_t size) : parent(size) {
        for (std::uint32_t i = 0; i < size; ++i)
            parent[i] = i;
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

} // namespace

ComponentReport component_report(const HurwitzMap& m) {
    const std::uint32_t n = m.n();
    Dsu dsu(n);
    for (std::size_t k = 0; k < m.ell(); ++k)
        dsu.unite(m.vertex_of(static_cast<std::uint32_t>(2 * k)) - 1,
                  m.vertex_of(static_cast<std::uint32_t>(2 * k + 1)) - 1);

    // dense component ids in order of smallest contained vertex
    std::vector<std::uint32_t> id(n, 0);
    std::vector<std::uint32_t> root_id(n, n);
    std::uint32_t count = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t r = dsu.find(v);
        if (root_id[r] == n)
            root_id[r] = count++;
        id[v] = root_id[r];
    }

    ComponentReport rep;
    rep.components.resize(count);
    rep.component_count = count;
    for (std::uint32_t v = 0; v < n; ++v) {
        ++rep.components[id[v]].vertices;
        if (m.degree(v + 1) == 0)
            ++rep.isolated_vertices;
    }
    for (std::size_t k = 0; k < m.ell(); ++k)
        ++rep.components[id[m.vertex_of(static_cast<std::uint32_t>(2 * k)) - 1]].edges;
    for (const Face& f : faces(m)) {
        const std::uint32_t v = f.darts.empty() ? f.isolated_vertex : m.vertex_of(f.darts[0]);
        ++rep.components[id[v - 1]].faces;
    }

    for (ComponentInfo& c : rep.components) {
        c.euler = static_cast<std::int64_t>(c.vertices) - static_cast<std::int64_t>(c.edges) +
                  static_cast<std::int64_t>(c.faces);
        if (c.euler > 2 || (c.euler % 2) != 0)
            throw std::logic_error("component Euler characteristic " + std::to_string(c.euler) +
                                   " is not an even number <= 2");
        c.genus = (2 - c.euler) / 2;
        rep.face_count += c.faces;
        rep.euler_total += c.euler;
        rep.total_genus += c.genus;
        if (c.edges > rep.largest_edges ||
            (c.edges == rep.largest_edges && c.vertices > rep.largest_vertices)) {
            rep.largest_edges = c.edges;
            rep.largest_vertices = c.vertices;
        }
    }
    return rep;
}

TranspositionTuple random_tuple(std::uint32_t n, std::size_t ell, Rng& rng) {
    if (n < 2)
        throw std::invalid_argument("random_tuple needs n >= 2");
    TranspositionTuple t;
    t.n = n;
    t.taus.reserve(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        const auto a = static_cast<std::uint32_t>(1 + rng.next_below(n));
        auto b = static_cast<std::uint32_t>(1 + rng.next_below(n - 1));
        if (b >= a)
            ++b;
        t.taus.emplace_back(std::min(a, b), std::max(a, b));
    }
    return t;
}

PureTupleResult random_pure_tuple(std::uint32_t n, std::size_t ell, Rng& rng,
                                  std::uint64_t max_tries) {
    if (ell % 2 != 0)
        throw std::invalid_argument("random_pure_tuple needs even ell (odd products are never id)");
    PureTupleResult res;
    for (std::uint64_t t = 1; t <= max_tries; ++t) {
        TranspositionTuple cand = random_tuple(n, ell, rng);
        if (is_pure(cand)) {
            res.tuple = std::move(cand);
            res.tries = t;
            return res;
        }
    }
    res.tries = max_tries;
    return res;
}

MapStatistics map_statistics(const std::vector<TranspositionTuple>& sample) {
    MapStatistics st;
    st.samples = sample.size();
    if (sample.empty())
        return st;
    for (const TranspositionTuple& t : sample) {
        const ComponentReport rep = component_report(HurwitzMap(t));
        st.isolated_counts.push_back(rep.isolated_vertices);
        st.largest_edge_counts.push_back(rep.largest_edges);
        st.largest_vertex_counts.push_back(rep.largest_vertices);
        const double n = static_cast<double>(t.n);
        st.mean_isolated += static_cast<double>(rep.isolated_vertices);
        st.mean_isolated_fraction += static_cast<double>(rep.isolated_vertices) / n;
        if (t.ell() > 0)
            st.mean_largest_edge_fraction +=
                static_cast<double>(rep.largest_edges) / static_cast<double>(t.ell());
        if (t.n >= 2)
            st.mean_largest_vertex_scaled +=
                static_cast<double>(rep.largest_vertices) * std::log(n) / n;
    }
    const auto k = static_cast<double>(st.samples);
    st.mean_isolated /= k;
    st.mean_isolated_fraction /= k;
    st.mean_largest_edge_fraction /= k;
    st.mean_largest_vertex_scaled /= k;
    return st;
}

} // namespace phw
