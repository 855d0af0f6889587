#include "skein/cyclo.hpp"

namespace skein {

Cyclo12 Cyclo12::zeta_power(int k) {
    k %= 12;
    if (k < 0) k += 12;
    // Powers of zeta reduced by zeta^4 = zeta^2 - 1 (so zeta^6 = -1).
    static const int table[12][4] = {
        {1, 0, 0, 0},   // zeta^0
        {0, 1, 0, 0},   // zeta^1
        {0, 0, 1, 0},   // zeta^2
        {0, 0, 0, 1},   // zeta^3
        {-1, 0, 1, 0},  // zeta^4
        {0, -1, 0, 1},  // zeta^5
        {-1, 0, 0, 0},  // zeta^6
        {0, -1, 0, 0},  // zeta^7
        {0, 0, -1, 0},  // zeta^8
        {0, 0, 0, -1},  // zeta^9
        {1, 0, -1, 0},  // zeta^10
        {0, 1, 0, -1},  // zeta^11
    };
    return Cyclo12(table[k][0], table[k][1], table[k][2], table[k][3]);
}

Cyclo12 Cyclo12::operator+(const Cyclo12& r) const {
    Cyclo12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = c[i] + r.c[i];
    return out;
}

Cyclo12 Cyclo12::operator-(const Cyclo12& r) const {
    Cyclo12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = c[i] - r.c[i];
    return out;
}

Cyclo12 Cyclo12::operator-() const {
    Cyclo12 out;
    for (int i = 0; i < 4; ++i) out.c[i] = -c[i];
    return out;
}

Cyclo12 Cyclo12::operator*(const Cyclo12& r) const {
    BigInt raw[7];
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 4; ++j) raw[i + j] += c[i] * r.c[j];
    }
    // Reduce with zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta, zeta^6 = -1.
    Cyclo12 out;
    out.c[0] = raw[0] - raw[4] - raw[6];
    out.c[1] = raw[1] - raw[5];
    out.c[2] = raw[2] + raw[4];
    out.c[3] = raw[3] + raw[5];
    return out;
}

Cyclo12 Cyclo12::conj() const {
    // zeta^-1 = zeta - zeta^3, zeta^-2 = 1 - zeta^2, zeta^-3 = -zeta^3.
    return Cyclo12(c[0] + c[2], c[1], -c[2], -(c[1] + c[3]));
}

std::string Cyclo12::str() const {
    static const char* basis[4] = {"", "*z", "*z^2", "*z^3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        if (out.empty()) {
            out += c[i].str();
        } else {
            out += (c[i] < 0) ? " - " : " + ";
            out += BigInt(abs(c[i])).str();
        }
        out += basis[i];
    }
    return out.empty() ? "0" : out;
}

Cyclo12 eval_cyclo(const Laurent& p, EvalPoint point) {
    if (p.var() != Var::q) {
        throw VarMismatchError("cyclotomic evaluation expects a polynomial in q, got " +
                               std::string(var_name(p.var())));
    }
    const int step = point == EvalPoint::zeta ? 1 : 3;
    Cyclo12 out;
    for (const auto& [e, coeff] : p.terms()) {
        Cyclo12 z = Cyclo12::zeta_power(step * e);
        for (int i = 0; i < 4; ++i) out.c[i] += coeff * z.c[i];
    }
    return out;
}

std::pair<BigInt, BigInt> cyclo_norm_squared(const Cyclo12& z) {
    Cyclo12 n = z * z.conj();
    // Real elements have zero zeta^2 coordinate and c1 = -2*c3; the value is
    // then c0 - c3*sqrt(3), since sqrt(3) = 2*zeta - zeta^3.
    if (n.c[2] != 0 || n.c[1] != -2 * n.c[3]) {
        throw InternalInconsistencyError("norm landed outside the real subring: " + n.str());
    }
    return {n.c[0], -n.c[3]};
}

}  // namespace skein
