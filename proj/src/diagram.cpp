#include "skein/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

/// Union-find over arc indices, path compression plus union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), classes_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --classes_;
    }
    int classes() const { return classes_; }

private:
    std::vector<int> parent_, size_;
    int classes_;
};

struct Slot {
    int crossing;
    int pos;
    bool operator==(const Slot& o) const { return crossing == o.crossing && pos == o.pos; }
};

/// arc label -> the (exactly two) slots it occupies, in scan order.
std::map<int, std::vector<Slot>> arc_slots(const PDCode& d) {
    std::map<int, std::vector<Slot>> slots;
    for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
        for (int p = 0; p < 4; ++p) slots[d.crossings[ci][p]].push_back({ci, p});
    }
    return slots;
}

}  // namespace

void validate_pd(const PDCode& d) {
    for (const auto& [arc, slots] : arc_slots(d)) {
        if (slots.size() != 2) {
            throw PDStructureError("arc " + std::to_string(arc) + " occurs " +
                                   std::to_string(slots.size()) + " times, expected exactly 2");
        }
    }
    if (d.free_loops < 0) throw PDStructureError("negative count of crossingless circles");
}

Laurent state_sum_bracket(const PDCode& d, int crossing_bound) {
    const int c = static_cast<int>(d.crossings.size());
    if (c > crossing_bound) throw CrossingBoundError(c, crossing_bound);
    validate_pd(d);

    // Dense arc indexing for the union-find.
    std::map<int, int> arc_index;
    for (const auto& quad : d.crossings) {
        for (int arc : quad) arc_index.emplace(arc, static_cast<int>(arc_index.size()));
    }
    const int arcs = static_cast<int>(arc_index.size());

    Laurent total(Var::a);
    const Laurent delta = Laurent::delta();
    const unsigned long long states = 1ULL << c;
    for (unsigned long long s = 0; s < states; ++s) {
        const unsigned long long gray = s ^ (s >> 1);
        UnionFind uf(std::max(arcs, 1));
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            const auto& q = d.crossings[i];
            if (gray >> i & 1) {
                // B-smoothing joins positions (1,2) and (3,0).
                uf.unite(arc_index[q[1]], arc_index[q[2]]);
                uf.unite(arc_index[q[3]], arc_index[q[0]]);
            } else {
                // A-smoothing joins positions (0,1) and (2,3).
                uf.unite(arc_index[q[0]], arc_index[q[1]]);
                uf.unite(arc_index[q[2]], arc_index[q[3]]);
                ++a_count;
            }
        }
        const int loops = (arcs > 0 ? uf.classes() : 0) + d.free_loops;
        Laurent term = Laurent::monomial(Var::a, 1, 2 * a_count - c);
        for (int i = 1; i < loops; ++i) term *= delta;
        total += term;
    }
    return total;
}

namespace {

struct TraversalDetail {
    std::vector<std::vector<int>> components;  // directed arc cycles
    std::vector<int> in_dir;                   // per slot (ci*4+pos): 1 = strand enters here
};

int diag(int pos) { return pos ^ 2; }

TraversalDetail walk_components(const PDCode& d) {
    auto slots = arc_slots(d);
    TraversalDetail out;
    out.in_dir.assign(d.crossings.size() * 4, 0);
    std::map<int, bool> visited;
    for (auto& [arc, _] : slots) visited[arc] = false;

    auto slot_id = [](const Slot& s) { return s.crossing * 4 + s.pos; };

    for (auto& [seed, seen] : visited) {
        if (seen) continue;
        // Walk the component: enter the seed arc toward its first-listed slot.
        std::vector<int> cycle;
        int arc = seed;
        Slot target = slots[arc][0];
        while (true) {
            visited[arc] = true;
            cycle.push_back(arc);
            out.in_dir[slot_id(target)] = 1;       // strand arrives at this slot
            Slot exit{target.crossing, diag(target.pos)};
            arc = d.crossings[exit.crossing][exit.pos];
            // The next arc is entered from `exit`; it continues to its other slot.
            const auto& pair = slots[arc];
            target = (pair[0] == exit) ? pair[1] : pair[0];
            if (arc == seed && visited[arc]) {
                // Back at the seed arc; the walk is closed.
                break;
            }
            if (visited[arc]) break;  // safety; cannot happen on valid codes
        }
        out.components.push_back(std::move(cycle));
    }
    return out;
}

long long signs_from_directions(const PDCode& d, const std::vector<int>& in_dir,
                                const std::vector<bool>& flipped,
                                const std::vector<int>& component_of_slot) {
    long long w = 0;
    for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
        auto in_at = [&](int pos) {
            bool entering = in_dir[ci * 4 + pos] == 1;
            if (flipped[component_of_slot[ci * 4 + pos]]) entering = !entering;
            return entering;
        };
        const int under_in = in_at(0) ? 0 : 2;
        const int over_in = in_at(1) ? 1 : 3;
        // Positive crossing: the over-strand enters at the counterclockwise
        // predecessor of the incoming under-strand position.
        w += (over_in == (under_in + 3) % 4) ? 1 : -1;
    }
    return w;
}

}  // namespace

Traversal traverse(const PDCode& d) {
    validate_pd(d);
    TraversalDetail detail = walk_components(d);

    // Map each slot to its component index.
    auto slots = arc_slots(d);
    std::vector<int> component_of_slot(d.crossings.size() * 4, 0);
    std::map<int, int> component_of_arc;
    for (int k = 0; k < static_cast<int>(detail.components.size()); ++k) {
        for (int arc : detail.components[k]) component_of_arc[arc] = k;
    }
    for (const auto& [arc, ss] : slots) {
        for (const Slot& s : ss) component_of_slot[s.crossing * 4 + s.pos] = component_of_arc[arc];
    }

    // Apply orientation overrides: an override names consecutive arcs of one
    // component; flip the component when the walk runs the other way. A
    // two-arc cycle is the same sequence in both directions, so there the
    // direction is encoded by the starting arc: starting at the component's
    // smallest arc keeps the traversal direction, any other start reverses it.
    std::vector<bool> flipped(detail.components.size(), false);
    for (const auto& line : d.orientations) {
        if (line.empty()) continue;
        auto it = component_of_arc.find(line[0]);
        if (it == component_of_arc.end()) {
            throw PDStructureError("orientation override names unknown arc " +
                                   std::to_string(line[0]));
        }
        const auto& cyc = detail.components[it->second];
        bool flip = false;
        if (line.size() >= 2 && cyc.size() >= 2) {
            auto pos = std::find(cyc.begin(), cyc.end(), line[0]);
            int next = cyc[(std::distance(cyc.begin(), pos) + 1) % cyc.size()];
            flip = next != line[1];
        }
        if (!flip && cyc.size() == 2 && line[0] != cyc[0]) flip = true;
        flipped[it->second] = flip;
    }

    Traversal out;
    out.components = detail.components;
    for (size_t k = 0; k < out.components.size(); ++k) {
        if (flipped[k]) std::reverse(out.components[k].begin() + 1, out.components[k].end());
    }
    out.writhe = signs_from_directions(d, detail.in_dir, flipped, component_of_slot);
    return out;
}

long long writhe(const PDCode& d) { return traverse(d).writhe; }

int component_count(const PDCode& d) {
    if (d.crossings.empty()) return d.free_loops;
    return static_cast<int>(traverse(d).components.size()) + d.free_loops;
}

std::string render_pd(const PDCode& d) {
    std::ostringstream os;
    for (const auto& q : d.crossings) {
        os << "X " << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
    }
    if (d.free_loops > 0) os << "L " << d.free_loops << "\n";
    for (const auto& line : d.orientations) {
        os << "O ";
        for (size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << line[i];
        os << "\n";
    }
    return os.str();
}

PDCode parse_pd(std::string_view text) {
    PDCode d;
    std::istringstream is{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "X") {
            std::array<int, 4> q{};
            for (int& v : q) {
                if (!(ls >> v)) throw ParseError("X line needs four arc labels", lineno);
            }
            d.crossings.push_back(q);
        } else if (tag == "L") {
            int k = 0;
            if (!(ls >> k)) throw ParseError("L line needs a loop count", lineno);
            d.free_loops += k;
        } else if (tag == "O") {
            std::string rest;
            std::getline(ls, rest);
            std::vector<int> arcs;
            std::string tok;
            std::istringstream rs(rest);
            while (std::getline(rs, tok, ',')) {
                if (tok.find_first_not_of(" \t") == std::string::npos) continue;
                try {
                    arcs.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw ParseError("O line entry '" + tok + "' is not an arc label", lineno);
                }
            }
            if (arcs.empty()) throw ParseError("O line needs an arc sequence", lineno);
            d.orientations.push_back(std::move(arcs));
        } else {
            throw ParseError("unknown PD line tag '" + tag + "'", lineno);
        }
    }
    validate_pd(d);
    return d;
}

PDCode renumber_pd(const PDCode& d) {
    if (d.crossings.empty()) return PDCode{{}, d.free_loops, {}};
    Traversal tr = traverse(d);
    std::map<int, int> rename;
    int next = 1;
    for (const auto& cyc : tr.components) {
        for (int arc : cyc) rename[arc] = next++;
    }
    PDCode out;
    out.free_loops = d.free_loops;
    out.crossings = d.crossings;
    for (auto& q : out.crossings) {
        for (int& arc : q) arc = rename.at(arc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tangle synthesis
// ---------------------------------------------------------------------------

namespace {

/// Builds the 4-valent strand graph of a tangle tree. Nodes are crossing
/// corner ports plus degree-2 junctions for tangle boundaries; wires connect
/// them. Corner geometry: NW=0, NE=1, SW=2, SE=3.
struct Synth {
    enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

    std::vector<bool> mirrored;          // per crossing
    std::vector<std::vector<int>> adj;   // node id -> wired neighbours

    int new_crossing(bool m) {
        mirrored.push_back(m);
        return static_cast<int>(mirrored.size()) - 1;
    }
    int new_node() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    }
    void wire(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    struct Corners {
        int nw, ne, sw, se;
    };

    /// Recursive construction; `m` accumulates mirror parity from above.
    Corners build(const TangleRef& t, bool m) {
        switch (t->kind()) {
            case Tangle::Kind::mirror: return build(t->child(), !m);
            case Tangle::Kind::horizontal: return twist_chain(t->twists(), m, /*horizontal=*/true);
            case Tangle::Kind::vertical: return twist_chain(t->twists(), m, /*horizontal=*/false);
            case Tangle::Kind::sum: {
                Corners a = build(t->left(), m);
                Corners b = build(t->right(), m);
                wire(a.ne, b.nw);
                wire(a.se, b.sw);
                return {a.nw, b.ne, a.sw, b.se};
            }
            case Tangle::Kind::product: {
                Corners a = build(t->left(), m);
                Corners b = build(t->right(), m);
                wire(a.sw, b.nw);
                wire(a.se, b.ne);
                return {a.nw, a.ne, b.sw, b.se};
            }
        }
        throw Error("unreachable tangle kind");
    }

    Corners twist_chain(int n, bool m, bool horizontal) {
        Corners c{new_node(), new_node(), new_node(), new_node()};
        if (n == 0) {
            if (horizontal) {  // [0]: two horizontal strands
                wire(c.nw, c.ne);
                wire(c.sw, c.se);
            } else {  // [infinity]: two vertical strands
                wire(c.nw, c.sw);
                wire(c.ne, c.se);
            }
            return c;
        }
        std::vector<int> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = new_crossing(m);
        for (int i = 1; i < n; ++i) {
            if (horizontal) {
                wire(port_node(xs[i - 1], NE), port_node(xs[i], NW));
                wire(port_node(xs[i - 1], SE), port_node(xs[i], SW));
            } else {
                wire(port_node(xs[i - 1], SW), port_node(xs[i], NW));
                wire(port_node(xs[i - 1], SE), port_node(xs[i], NE));
            }
        }
        if (horizontal) {
            wire(c.nw, port_node(xs[0], NW));
            wire(c.sw, port_node(xs[0], SW));
            wire(c.ne, port_node(xs[n - 1], NE));
            wire(c.se, port_node(xs[n - 1], SE));
        } else {
            wire(c.nw, port_node(xs[0], NW));
            wire(c.ne, port_node(xs[0], NE));
            wire(c.sw, port_node(xs[n - 1], SW));
            wire(c.se, port_node(xs[n - 1], SE));
        }
        return c;
    }

    // Port nodes live at fixed ids in a dedicated range; junctions elsewhere.
    // Lazily ensure node storage for a crossing's four ports.
    std::map<std::pair<int, int>, int> port_ids;
    int port_node(int crossing, int corner) {
        auto key = std::make_pair(crossing, corner);
        auto it = port_ids.find(key);
        if (it != port_ids.end()) return it->second;
        int id = new_node();
        port_ids.emplace(key, id);
        return id;
    }

    /// After closure: every port has degree 1, every junction degree 2.
    /// Extract arcs (paths between ports) and free loops (junction cycles).
    PDCode emit() {
        // Reverse map: node id -> (crossing, corner) for port nodes.
        std::map<int, std::pair<int, int>> port_of;
        for (const auto& [key, id] : port_ids) port_of[id] = key;

        std::vector<int> arc_at(mirrored.size() * 4, 0);
        std::vector<bool> seen(adj.size(), false);
        int next_arc = 1;
        int loops = 0;

        auto step = [&](int from, int via) {
            // Continue through junction `via`, arriving from `from`.
            const auto& nb = adj[via];
            return nb[0] == from ? nb[1] : nb[0];
        };

        for (const auto& [id, key] : port_of) {
            if (seen[id]) continue;
            int prev = id;
            int cur = adj[id][0];
            seen[id] = true;
            while (!port_of.count(cur)) {
                seen[cur] = true;
                int nxt = step(prev, cur);
                prev = cur;
                cur = nxt;
            }
            seen[cur] = true;
            arc_at[id_to_slot(port_of.at(id))] = next_arc;
            arc_at[id_to_slot(port_of.at(cur))] = next_arc;
            ++next_arc;
        }
        // Remaining unvisited junction cycles are crossingless circles.
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            if (seen[v] || port_of.count(v)) continue;
            ++loops;
            int prev = v, cur = adj[v][0];
            seen[v] = true;
            while (cur != v) {
                seen[cur] = true;
                int nxt = step(prev, cur);
                prev = cur;
                cur = nxt;
            }
        }

        PDCode d;
        d.free_loops = loops;
        for (int ci = 0; ci < static_cast<int>(mirrored.size()); ++ci) {
            // Counterclockwise from an under-strand corner. The plain crossing
            // has its under-strand on the SW-NE diagonal, the mirrored one on
            // the SE-NW diagonal.
            auto arc = [&](int corner) { return arc_at[ci * 4 + corner]; };
            if (mirrored[ci]) {
                d.crossings.push_back({arc(SE), arc(NE), arc(NW), arc(SW)});
            } else {
                d.crossings.push_back({arc(SW), arc(SE), arc(NE), arc(NW)});
            }
        }
        return renumber_pd(d);
    }

    int id_to_slot(const std::pair<int, int>& key) const { return key.first * 4 + key.second; }
};

}  // namespace

PDCode synthesize_pd(const TangleRef& t, Closure which) {
    Synth s;
    Synth::Corners c = s.build(t, false);
    if (which == Closure::numerator) {
        s.wire(c.nw, c.ne);
        s.wire(c.sw, c.se);
    } else {
        s.wire(c.nw, c.sw);
        s.wire(c.ne, c.se);
    }
    return s.emit();
}

PDCode connected_sum_pd(const PDCode& a, const PDCode& b) {
    // The summand with no crossings is an unknot (or carries extra circles);
    // splicing an unknot circle into the other diagram is the identity.
    if (a.crossings.empty() || b.crossings.empty()) {
        const PDCode& loopy = a.crossings.empty() ? a : b;
        const PDCode& other = a.crossings.empty() ? b : a;
        if (loopy.free_loops < 1) throw PDStructureError("connected sum with an empty diagram");
        PDCode out = renumber_pd(other);
        out.free_loops += loopy.free_loops - 1;
        return out;
    }
    int max_a = a.crossings[0][0], arc_a = a.crossings[0][0];
    for (const auto& q : a.crossings) {
        for (int arc : q) {
            max_a = std::max(max_a, arc);
            arc_a = std::min(arc_a, arc);
        }
    }
    int max_b = b.crossings[0][0], min_b = b.crossings[0][0];
    for (const auto& q : b.crossings) {
        for (int arc : q) {
            max_b = std::max(max_b, arc);
            min_b = std::min(min_b, arc);
        }
    }
    const int offset = max_a;
    const int arc_b = min_b + offset;
    const int fresh = offset + max_b + 1;

    PDCode out;
    out.free_loops = a.free_loops + b.free_loops;
    out.crossings = a.crossings;
    for (const auto& q : b.crossings) {
        std::array<int, 4> shifted{};
        for (int i = 0; i < 4; ++i) shifted[i] = q[i] + offset;
        out.crossings.push_back(shifted);
    }
    // Cut the lowest arc of each summand and rejoin the four loose ends
    // pairwise across the summands: one slot of arc_a joins one slot of arc_b
    // under a fresh label, the remaining two slots share arc_a's label.
    bool replaced = false;
    for (size_t ci = 0; ci < a.crossings.size() && !replaced; ++ci) {
        for (int p = 0; p < 4 && !replaced; ++p) {
            if (out.crossings[ci][p] == arc_a) {
                out.crossings[ci][p] = fresh;
                replaced = true;
            }
        }
    }
    replaced = false;
    for (size_t ci = a.crossings.size(); ci < out.crossings.size(); ++ci) {
        for (int p = 0; p < 4; ++p) {
            if (out.crossings[ci][p] != arc_b) continue;
            out.crossings[ci][p] = replaced ? arc_a : fresh;
            replaced = true;
        }
    }
    return renumber_pd(out);
}

PDCode disjoint_union_pd(const PDCode& a, const PDCode& b) {
    PDCode out = a;
    int offset = 0;
    for (const auto& q : a.crossings) {
        for (int arc : q) offset = std::max(offset, arc);
    }
    for (const auto& q : b.crossings) {
        std::array<int, 4> shifted{};
        for (int i = 0; i < 4; ++i) shifted[i] = q[i] + offset;
        out.crossings.push_back(shifted);
    }
    for (const auto& line : b.orientations) {
        std::vector<int> shifted;
        for (int arc : line) shifted.push_back(arc + offset);
        out.orientations.push_back(std::move(shifted));
    }
    out.free_loops += b.free_loops;
    return out;
}

}  // namespace skein
