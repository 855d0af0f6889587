#pragma once

#include <array>
#include <string>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

/// Element of Z[zeta] where zeta is a primitive 12th root of unity, stored in
/// the basis {1, zeta, zeta^2, zeta^3} with the reduction zeta^4 = zeta^2 - 1.
///
/// zeta^3 squares to -1, so it plays the role of the imaginary unit for the
/// determinant evaluation; the evaluation points for the two derived
/// invariants are q = zeta (t = e^{i pi/3}) and q = zeta^3 (t = -1).
struct Cyclo12 {
    std::array<BigInt, 4> c{};  // coordinates of 1, zeta, zeta^2, zeta^3

    Cyclo12() = default;
    explicit Cyclo12(BigInt c0, BigInt c1 = 0, BigInt c2 = 0, BigInt c3 = 0)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyclo12 zeta_power(int k);  ///< zeta^k for any integer k

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    Cyclo12 operator+(const Cyclo12& r) const;
    Cyclo12 operator-(const Cyclo12& r) const;
    Cyclo12 operator*(const Cyclo12& r) const;
    Cyclo12 operator-() const;
    bool operator==(const Cyclo12& r) const { return c == r.c; }
    bool operator!=(const Cyclo12& r) const { return !(*this == r); }

    /// Complex conjugate, i.e. the ring automorphism zeta -> zeta^-1.
    Cyclo12 conj() const;

    std::string str() const;
};

/// Where to send the formal variable q.
enum class EvalPoint {
    zeta,   ///< q = zeta = e^{i pi/6}, so t = q^2 = e^{i pi/3}
    zeta3,  ///< q = zeta^3 = i, so t = q^2 = -1
};

/// Exact image of a q-polynomial under q -> zeta or q -> zeta^3.
Cyclo12 eval_cyclo(const Laurent& p, EvalPoint point);

/// z * conj(z), which lies in the real subring Z[sqrt(3)]; returned as the
/// pair (u, v) with value u + v*sqrt(3). For evaluations of genuine link
/// polynomials at the points above, v is always 0.
std::pair<BigInt, BigInt> cyclo_norm_squared(const Cyclo12& z);

}  // namespace skein
