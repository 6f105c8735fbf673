#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phw/rng.hpp"

namespace phw {

/* An ordered tuple of transpositions of {1..n}. The position of a pair in
 * `taus` is its edge label; pairs are stored with the smaller point first. */
struct TranspositionTuple {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> taus;

    std::size_t ell() const { return taus.size(); }
    // throws std::invalid_argument on a = b, a or b outside [1, n], or n = 0
    void validate() const;
};

// text form "1 2;2 3;3 4" (empty string = empty tuple)
TranspositionTuple parse_tuple(std::uint32_t n, std::string_view text);
std::string to_text(const TranspositionTuple& t);

// true iff τ₁τ₂⋯τ_ℓ = id, composing left to right (τ₁ acts first)
bool is_pure(const TranspositionTuple& t);

/* The labelled map of a tuple: vertices {1..n}, one edge per transposition,
 * and at every vertex the incident edge-ends in increasing label order —
 * that order *is* the counterclockwise rotation. Darts 2k and 2k+1 are the
 * two ends of edge k, at its smaller and larger endpoint respectively. */
class HurwitzMap {
public:
    explicit HurwitzMap(const TranspositionTuple& t);

    std::uint32_t n() const { return n_; }
    std::size_t ell() const { return ell_; }
    std::size_t dart_count() const { return 2 * ell_; }

    static std::uint32_t mate(std::uint32_t dart) { return dart ^ 1u; }
    static std::uint32_t label(std::uint32_t dart) { return dart >> 1; }

    std::uint32_t vertex_of(std::uint32_t dart) const { return vertex_of_[dart]; }
    std::uint32_t degree(std::uint32_t vertex) const { return static_cast<std::uint32_t>(rotation_[vertex - 1].size()); }
    // counterclockwise rotation at a vertex: incident darts, labels ascending
    const std::vector<std::uint32_t>& rotation(std::uint32_t vertex) const { return rotation_[vertex - 1]; }

    std::uint32_t sigma(std::uint32_t dart) const;      // next dart ccw at its vertex
    std::uint32_t sigma_prev(std::uint32_t dart) const; // next dart cw at its vertex

    const TranspositionTuple& source() const { return source_; }

private:
    std::uint32_t n_ = 0;
    std::size_t ell_ = 0;
    TranspositionTuple source_;
    std::vector<std::uint32_t> vertex_of_;           // dart → vertex (1-based)
    std::vector<std::vector<std::uint32_t>> rotation_; // vertex-1 → sorted darts
    std::vector<std::uint32_t> pos_;                 // dart → index in its rotation
};

HurwitzMap map_from_tuple(const TranspositionTuple& t);

/* One face of the map. Dart faces list the darts in traversal order (the
 * walk leaves dart d, crosses the edge, and continues from the next edge-end
 * clockwise at the far vertex); an isolated vertex is its own face with no
 * darts. `descents` counts the swept corners whose edge labels step down in
 * rotation order — an isolated vertex's single full corner counts as one. */
struct Face {
    std::vector<std::uint32_t> darts;
    std::uint32_t isolated_vertex = 0; // 1-based; set iff darts is empty
    std::size_t descents = 0;
};

std::vector<Face> faces(const HurwitzMap& m);

// exactly one label descent in the rotation of every vertex of degree ≥ 1
bool unique_vertex_descents(const HurwitzMap& m);

// every face contains exactly one descent corner (equivalent to is_pure)
bool descent_corner_purity(const HurwitzMap& m);

struct ComponentInfo {
    std::uint32_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::int64_t euler = 0; // V − E + F
    std::int64_t genus = 0; // (2 − χ)/2
};

struct ComponentReport {
    std::vector<ComponentInfo> components; // ordered by smallest contained vertex
    std::size_t component_count = 0;
    std::size_t face_count = 0;
    std::int64_t euler_total = 0;
    std::int64_t total_genus = 0;
    std::uint32_t isolated_vertices = 0;
    // largest = most edges, ties broken by vertex count
    std::size_t largest_edges = 0;
    std::uint32_t largest_vertices = 0;
};

ComponentReport component_report(const HurwitzMap& m);

TranspositionTuple random_tuple(std::uint32_t n, std::size_t ell, Rng& rng);

struct PureTupleResult {
    std::optional<TranspositionTuple> tuple; // empty: max_tries exhausted
    std::uint64_t tries = 0;                 // uniform draws consumed
};

/* Rejection sampling: draw uniform tuples until the product is the identity.
 * Exactly uniform over pure tuples; expected tries = C(n,2)^ℓ / H_{n,ℓ}. */
PureTupleResult random_pure_tuple(std::uint32_t n, std::size_t ell, Rng& rng,
                                  std::uint64_t max_tries);

/* Aggregates over a sample of tuples: isolated-vertex counts, largest
 * component sizes, and their normalised means (edges by ℓ, vertices by
 * n/log n, isolated count by n), each sample normalised by its own n, ℓ. */
struct MapStatistics {
    std::size_t samples = 0;
    std::vector<std::uint32_t> isolated_counts;
    std::vector<std::size_t> largest_edge_counts;
    std::vector<std::uint32_t> largest_vertex_counts;
    double mean_isolated = 0.0;
    double mean_isolated_fraction = 0.0;
    double mean_largest_edge_fraction = 0.0;
    double mean_largest_vertex_scaled = 0.0;
};

MapStatistics map_statistics(const std::vector<TranspositionTuple>& sample);

} // namespace phw
