#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/invariants.hpp"

namespace skein {

/// Which local move labels the edges of the quotient graph.
enum class Move { crossing_change, h2, h2_links };

/// Which invariant defines the vertex equivalence classes.
enum class WindowInvariant { beta, det, span };

enum class Category { knots, links };

const char* move_name(Move m);
const char* invariant_name(WindowInvariant i);
const char* category_name(Category c);

/// A finite window of one quotient graph: the move, the invariant, whether
/// vertices range over knots or links, and the finite set of invariant values.
struct QuotientSpec {
    Move move = Move::crossing_change;
    WindowInvariant invariant = WindowInvariant::beta;
    Category category = Category::knots;
    std::vector<long long> window;
};

/// A constructive witness for one edge: two family specs, the move relating
/// them, a tag naming the construction, and the two expected invariant values.
/// Verification recomputes both values and checks the beta step bound.
struct EdgeCertificate {
    Family left;
    Family right;
    Move move = Move::crossing_change;
    std::string construction;
    long long expected_left = 0;
    long long expected_right = 0;
};

struct CertificateResult {
    EdgeCertificate cert;
    bool passed = false;
    long long got_left = 0;
    long long got_right = 0;
    int beta_step = 0;
    std::string note;  ///< failure reason when not passed
};

/// Simple undirected graph over integer vertex labels.
struct FiniteGraph {
    std::vector<long long> vertices;
    std::vector<std::pair<long long, long long>> edges;  // u < v, sorted, deduplicated

    bool has_vertex(long long v) const;
    size_t index_of(long long v) const;  ///< throws GraphError on unknown labels
    std::vector<std::vector<size_t>> adjacency() const;
    size_t edge_count() const { return edges.size(); }
};

struct Window {
    QuotientSpec spec;
    FiniteGraph graph;
    std::vector<CertificateResult> certificates;  ///< verified, edge-bearing
    std::vector<CertificateResult> failed;        ///< flagged, no edge added
};

/// Assembles the window from the certificate catalog for the spec: every edge
/// carries a verified certificate, failed certificates are reported rather
/// than dropped, and where the primary construction for a pair fails a
/// catalogued fallback is tried and both outcomes recorded.
Window build_window(const QuotientSpec& spec, int oracle_bound = 24);

/// The case analysis that certifies every pair {m, n} of span classes in the
/// H(2) quotient of links. Cases 1-3 handle the vertices 0, 1, 2; case 4 the
/// consecutive pairs; cases 5-7 split on the parities of m < n.
EdgeCertificate seven_case_certificate(long long m, long long n);

/// Exact nonnegative rational, used for the hyperbolicity measures.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long n, long long d);
    bool operator==(const Rational& r) const { return num == r.num && den == r.den; }
    bool operator<=(const Rational& r) const { return num * r.den <= r.num * den; }
    std::string str() const;
};

/// BFS distance in edges; empty when the vertices are in different components.
std::optional<long long> graph_distance(const FiniteGraph& g, long long u, long long v);

/// Largest pairwise distance; empty when the graph is disconnected.
std::optional<long long> diameter(const FiniteGraph& g);

/// Four-point hyperbolicity: the maximum over vertex quadruples of
/// (S1 - S2) / 2 where S1 >= S2 >= S3 are the three pairing sums of
/// distances. Zero exactly on trees; requires a connected graph.
Rational hyperbolicity_four_point(const FiniteGraph& g);

/// Thin-triangle hyperbolicity over all geodesic triangles, sampled at
/// vertices: for every vertex triple and every choice of geodesics per side,
/// the largest distance from a vertex on one side to the union of the other
/// two. Points interior to edges can add at most 1/2 to the reported value.
/// Exponential in principle; refuses graphs above the vertex bound and
/// suggests the four-point measure instead.
Rational hyperbolicity_thin_triangle(const FiniteGraph& g, size_t vertex_bound = 12,
                                     size_t geodesic_cap = 100000);

struct StructureReport {
    bool is_path = false;
    bool is_complete = false;
    bool is_tree = false;
    std::optional<long long> diameter;
};

StructureReport structure_predicates(const FiniteGraph& g);

/// Induced subgraph on a subset of the vertex labels.
FiniteGraph induced_subgraph(const FiniteGraph& g, const std::vector<long long>& vertices);

/// JSON document with spec, vertices, edges, certificates and failed lists.
std::string window_json(const Window& w);

/// DOT rendering with the construction tags as edge tooltips.
std::string window_dot(const Window& w);

/// CSV table of the certificates (one row per certificate, both sides).
std::string window_csv(const Window& w);

}  // namespace skein
