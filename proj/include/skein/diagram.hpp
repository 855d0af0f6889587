#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/tangle.hpp"

namespace skein {

/// Planar diagram code. Each crossing lists its four arc labels
/// counterclockwise starting at an under-strand arc, so positions 0 and 2 are
/// the under-strand and positions 1 and 3 the over-strand (the convention of
/// the public knot tables). Crossingless unknotted circles, which the crossing
/// list cannot carry, are counted separately in free_loops.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int free_loops = 0;
    /// Optional per-component orientation overrides: each entry is the arc
    /// sequence of one component in the desired direction ("O" lines).
    std::vector<std::vector<int>> orientations;

    size_t crossing_count() const { return crossings.size(); }
};

/// Checks that every arc label occurs exactly twice; throws PDStructureError.
void validate_pd(const PDCode& d);

/// Brute-force Kauffman state sum: over all 2^c resolutions, a^(#A - #B) *
/// delta^(loops - 1), loops counted by union-find over the arc
/// identifications. States are enumerated in Gray-code order; the loop count
/// is recomputed per state. Refuses diagrams above the crossing bound.
Laurent state_sum_bracket(const PDCode& d, int crossing_bound = 24);

/// Result of the deterministic component traversal. Components are reported
/// as directed arc cycles; the direction is seeded at the smallest arc label
/// of each component and follows increasing labels there, unless an
/// orientation override in the PD code flips it.
struct Traversal {
    std::vector<std::vector<int>> components;  // directed arc cycles
    long long writhe = 0;                      // sum of crossing signs
};

Traversal traverse(const PDCode& d);

/// Writhe under the traversal orientation (with overrides applied).
long long writhe(const PDCode& d);

/// Number of link components, counting crossingless circles.
int component_count(const PDCode& d);

/// Renders the file format: one `X i j k l` line per crossing, `O a,b,...`
/// orientation lines, `L k` for crossingless circles, `#` comments allowed.
std::string render_pd(const PDCode& d);

PDCode parse_pd(std::string_view text);

/// Threads arcs through a tangle composition tree and closes it, producing a
/// diagram whose state sum equals the tangle-calculus bracket of the closure.
/// Arcs are numbered sequentially along each component.
PDCode synthesize_pd(const TangleRef& t, Closure which);

/// Splices the first arc of each summand; the bracket of the result is the
/// product of the brackets.
PDCode connected_sum_pd(const PDCode& a, const PDCode& b);

/// Side-by-side split union (arc labels of b are shifted).
PDCode disjoint_union_pd(const PDCode& a, const PDCode& b);

/// Renumbers arcs along the deterministic traversal, dropping orientation
/// overrides. Canonical form used by the synthesizer and the splice.
PDCode renumber_pd(const PDCode& d);

}  // namespace skein
