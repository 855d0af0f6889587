#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/tangle.hpp"

namespace skein {

/// Symbolic description of a knot or link from the families the engine knows:
/// T(2,n) torus links, generalized twist links K(m,n), pretzels P(p,q,r), the
/// special knots K_q and K_{q,r}, connected sums, split unions, and raw PD
/// codes ingested from files.
///
/// Conventions are anchored so that Torus(n) reproduces the closed-form torus
/// Jones polynomial exactly (trefoil: t + t^3 - t^4), Twist(m,n) has span
/// m + n and det(K(2,n)) = 2n + 1, and Pretzel(p,q,r) has det |pq + pr + qr|.
class Family {
public:
    enum class Kind {
        unknot,
        unlink,
        torus,
        twist,
        pretzel,
        kq,
        kqr,
        connected_sum,
        disjoint_union,
        raw_pd,
    };

    static Family unknot();
    static Family unlink(int components);
    static Family torus(int n);
    static Family twist(int m, int n);
    static Family pretzel(int p, int q, int r);
    static Family kq(int q);              ///< q odd >= 1
    static Family kqr(int q, int r);      ///< q odd >= 1, r odd >= 3
    /// Connected sum along one component of each part. Parts may be links;
    /// the bracket is the product of the part brackets either way.
    static Family connected_sum(std::vector<Family> parts);
    static Family disjoint_union(std::vector<Family> parts);
    static Family raw_pd(PDCode code, std::string name);

    Kind kind() const { return kind_; }
    const std::vector<int>& params() const { return params_; }
    const std::vector<Family>& parts() const { return parts_; }
    const PDCode& pd() const { return pd_; }
    const std::string& name() const { return name_; }

    /// Grammar: `unknot`, `unlink:3`, `torus:5`, `twist:2,3`,
    /// `pretzel:3,-3,2`, `kq:3`, `kqr:3,5`, `sum(...)`, `sqcup(...)`,
    /// `pd:path/to/file.pd`.
    static Family parse(std::string_view spec);
    std::string str() const;

    /// Tangle presentation of the atomic families (everything except
    /// connected sums, split unions and raw PD codes).
    std::pair<TangleRef, Closure> to_tangle() const;

    /// Kauffman bracket of the standard diagram, by the tangle calculus for
    /// atomic families, multiplicativity for connected sums, the extra delta
    /// factors for split unions, and the state-sum oracle for raw PD codes.
    Laurent bracket(int oracle_bound = 24) const;

    /// Component count by the parity rules of each family; raw PD codes are
    /// counted by arc traversal.
    int components() const;

    /// Writhe of the standard diagram: n for Torus(n) (parallel strands when
    /// n is even), additive over sums and unions, the traversal writhe of the
    /// synthesized diagram otherwise.
    long long standard_writhe(int oracle_bound = 24) const;

    int crossing_number_bound() const;  ///< crossings of the standard diagram

    /// Standard diagram as a PD code. Torus links with an even parameter get
    /// orientation overrides pinning the parallel orientation.
    PDCode synthesize(int oracle_bound = 24) const;

    bool operator==(const Family& o) const { return str() == o.str(); }

private:
    Kind kind_ = Kind::unknot;
    std::vector<int> params_;
    std::vector<Family> parts_;
    PDCode pd_;
    std::string name_;
};

}  // namespace skein
