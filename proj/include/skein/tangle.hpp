#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

class Tangle;
using TangleRef = std::shared_ptr<const Tangle>;

/// A two-string tangle as a composition tree.
///
/// Leaves are horizontal twist tangles [n] and vertical twist tangles [1/n];
/// n = 0 gives the crossingless tangles [0] and [infinity]. Internal nodes are
/// the horizontal sum T + U, the vertical product T * U, and the mirror -T.
/// Negative twist counts at a leaf normalize to the mirror of the positive
/// leaf. Trees are immutable and may share subtrees; evaluation memoizes on
/// node identity.
class Tangle {
public:
    enum class Kind { horizontal, vertical, sum, product, mirror };

    static TangleRef horizontal(int n);
    static TangleRef vertical(int n);
    static TangleRef zero() { return horizontal(0); }
    static TangleRef infinity() { return vertical(0); }
    static TangleRef sum(TangleRef left, TangleRef right);
    static TangleRef product(TangleRef top, TangleRef bottom);
    static TangleRef mirror(TangleRef t);

    Kind kind() const { return kind_; }
    int twists() const { return twists_; }
    const TangleRef& left() const { return left_; }
    const TangleRef& right() const { return right_; }
    const TangleRef& child() const { return left_; }

    int crossing_count() const { return crossings_; }

private:
    Kind kind_;
    int twists_ = 0;
    TangleRef left_, right_;
    int crossings_ = 0;

    Tangle(Kind k, int n, TangleRef l, TangleRef r);
    friend struct TangleFactory;
};

/// Coefficients of a tangle over the basis {[0], [infinity]}:
/// <T> = f * [0] + g * [infinity], both entries in the variable a.
struct BracketVector {
    Laurent f{Var::a};
    Laurent g{Var::a};

    bool operator==(const BracketVector& r) const { return f == r.f && g == r.g; }
};

/// The two standard ways of closing a tangle into a link diagram.
enum class Closure { numerator, denominator };

/// Evaluates the composition tree bottom-up with the 2x2 recursions:
/// leaves by the closed twist formulas, sums and products by the matrices
/// [[f_U, 0], [g_U, f_U + delta*g_U]] and [[delta*f_U + g_U, f_U], [0, g_U]],
/// and the mirror by a -> a^-1 on both entries.
BracketVector bracket_vector(const TangleRef& t);

/// <T^N> = delta*f + g, <T^D> = f + delta*g.
Laurent closure_bracket(const TangleRef& t, Closure which);

/// The bilinear form br(T)^T [[delta, 1], [1, delta]] br(U); equals
/// closure_bracket(sum(T, U), numerator) exactly.
Laurent pairing(const TangleRef& t, const TangleRef& u);

/// Writhe normalization (-a)^(-3w) * bracket, turning the bracket of a
/// diagram into the link invariant X(a).
Laurent normalize_bracket(const Laurent& bracket, long long writhe);

/// Compact textual form, e.g. "((-[1/3] + [1/5]) * [1])"; round-trips through
/// parse_tangle.
std::string format_tangle(const TangleRef& t);

TangleRef parse_tangle(std::string_view text);

/// Parses a tangle expression with a trailing closure marker "^N" or "^D".
std::pair<TangleRef, Closure> parse_closed_tangle(std::string_view text);

}  // namespace skein
