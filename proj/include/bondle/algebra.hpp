#pragma once
// Finite quandles, keis, singquandles, involutory bondles, oriented bondles:
// explicit operation tables, exhaustive axiom checking, and the standard
// constructor families (affine Z_n, group conjugation, dihedral groups).
//
// Relation catalogue (checked exhaustively over the carrier):
//   Quandle:  (Q1) x>x = x
//             (Q2) (x>y)>'y = x = (x>'y)>y     (>' is the inverse operation)
//             (Q3) (x>y)>z = (x>z)>(y>z)
//   Kei: Q1, Q3 and involutivity (x>y)>y = x.
//   Unoriented singquandle relations, with > involutory:
//     (1)  x = R2(R2(x,y), R1(x,y))
//     (2)  y = R1(R2(x,y), R1(x,y))
//     (3)  x = R1(y, R2(x,y))
//     (4)  R1(x,y) = R2(y, R2(x,y))
//     (5)  y = R2(R1(x,y), x)
//     (6)  R2(x,y) = R1(R1(x,y), x)
//     (7)  (y>z)>R2(x,z) = (y>x)>R1(x,z)
//     (8)  R1(x,y) = R2(y>x, x)
//     (9)  R2(x,y) = R1(y>x, x) > R2(y>x, x)
//     (10) R1(x>y, z)>y = R1(x, z>y)
//     (11) R2(x>y, z) = R2(x, z>y)>y
//   Involutory bondle: (1), (2), (7)-(11).
//   Oriented singquandle:
//     (12) R1(x>'y, z)>y = R1(x, z>y)
//     (13) R2(x>'y, z) = R2(x, z>y)>'y
//     (14) (y>'R1(x,z))>x = (y>R2(x,z))>'z
//     (15) R2(x,y) = R1(y, x>y)
//     (16) R1(x,y)>R2(x,y) = R2(y, x>y)
//   Oriented bondle: (12)-(16) plus
//     (17) R3(y, x>'z) = R3(y>z, x)>'z
//     (18) R3(x, y>z) = R3(x>'z, y)>z
//     (19) (z>'R3(x,y))>x = (z>'y)>R3(y,x)
//     (20) R3(x,y)>'y = R3(x>'R3(y,x), y)
// R4 is never stored: R4(x,y) = R3(y,x).

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace bondle {

using Table = std::vector<std::vector<int>>;

struct FiniteQuandle {
    int order = 0;
    Table op;     // x > y
    Table inv_op; // x >' y
};

struct BondMaps {
    Table R1, R2;
    Table R3; // empty when absent
    bool has_R3() const { return !R3.empty(); }
};

struct AxiomReport {
    struct Violation {
        std::string relation;
        std::array<int, 3> witness; // unused slots are -1
    };
    std::vector<Violation> violations;
    static constexpr std::size_t kMaxWitnessesPerRelation = 10;
    bool pass() const { return violations.empty(); }

    void add(const std::string& rel, int x, int y, int z) {
        std::size_t n = 0;
        for (const auto& v : violations)
            if (v.relation == rel) ++n;
        if (n < kMaxWitnessesPerRelation)
            violations.push_back({rel, {x, y, z}});
    }
};

struct NonUnit : std::runtime_error {
    NonUnit(long a, long n)
        : std::runtime_error("a=" + std::to_string(a) + " is not a unit mod " +
                             std::to_string(n)) {}
};
struct LemmaViolation : std::runtime_error {
    LemmaViolation(long m, long n)
        : std::runtime_error("m(m-1) != 0 mod n for m=" + std::to_string(m) +
                             ", n=" + std::to_string(n)) {}
};

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

inline bool table_total(const Table& t, int n) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) return false;
        for (int v : row)
            if (v < 0 || v >= n) return false;
    }
    return true;
}

inline AxiomReport check_quandle(const FiniteQuandle& q) {
    AxiomReport rep;
    const int n = q.order;
    if (!table_total(q.op, n) || !table_total(q.inv_op, n)) {
        rep.add("table-shape", -1, -1, -1);
        return rep;
    }
    const Table& op = q.op;
    const Table& iv = q.inv_op;
    for (int x = 0; x < n; ++x)
        if (op[x][x] != x) rep.add("Q1", x, -1, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (iv[op[x][y]][y] != x || op[iv[x][y]][y] != x)
                rep.add("Q2", x, y, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (op[op[x][y]][z] != op[op[x][z]][op[y][z]])
                    rep.add("Q3", x, y, z);
    return rep;
}

inline AxiomReport check_kei(const FiniteQuandle& q) {
    AxiomReport rep;
    const int n = q.order;
    if (!table_total(q.op, n)) {
        rep.add("table-shape", -1, -1, -1);
        return rep;
    }
    const Table& op = q.op;
    for (int x = 0; x < n; ++x)
        if (op[x][x] != x) rep.add("Q1", x, -1, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (op[op[x][y]][y] != x) rep.add("involutivity", x, y, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (op[op[x][y]][z] != op[op[x][z]][op[y][z]])
                    rep.add("Q3", x, y, z);
    return rep;
}

namespace detail {

// Evaluates one numbered relation at (x,y,z); true = satisfied.
inline bool relation_holds(int id, const FiniteQuandle& q, const BondMaps& m,
                           int x, int y, int z) {
    const Table& op = q.op;
    const Table& iv = q.inv_op;
    const Table& R1 = m.R1;
    const Table& R2 = m.R2;
    switch (id) {
        case 1: return x == R2[R2[x][y]][R1[x][y]];
        case 2: return y == R1[R2[x][y]][R1[x][y]];
        case 3: return x == R1[y][R2[x][y]];
        case 4: return R1[x][y] == R2[y][R2[x][y]];
        case 5: return y == R2[R1[x][y]][x];
        case 6: return R2[x][y] == R1[R1[x][y]][x];
        case 7: return op[op[y][z]][R2[x][z]] == op[op[y][x]][R1[x][z]];
        case 8: return R1[x][y] == R2[op[y][x]][x];
        case 9: return R2[x][y] == op[R1[op[y][x]][x]][R2[op[y][x]][x]];
        case 10: return op[R1[op[x][y]][z]][y] == R1[x][op[z][y]];
        case 11: return R2[op[x][y]][z] == op[R2[x][op[z][y]]][y];
        case 12: return op[R1[iv[x][y]][z]][y] == R1[x][op[z][y]];
        case 13: return R2[iv[x][y]][z] == iv[R2[x][op[z][y]]][y];
        case 14: return op[iv[y][R1[x][z]]][x] == iv[op[y][R2[x][z]]][z];
        case 15: return R2[x][y] == R1[y][op[x][y]];
        case 16: return op[R1[x][y]][R2[x][y]] == R2[y][op[x][y]];
        case 17: return m.R3[y][iv[x][z]] == iv[m.R3[op[y][z]][x]][z];
        case 18: return m.R3[x][op[y][z]] == op[m.R3[iv[x][z]][y]][z];
        case 19: return op[iv[z][m.R3[x][y]]][x] == op[iv[z][y]][m.R3[y][x]];
        case 20: return iv[m.R3[x][y]][y] == m.R3[iv[x][m.R3[y][x]]][y];
        default: throw std::logic_error("unknown relation id");
    }
}

// Relations that only read two of the three variables.
inline bool relation_is_binary(int id) {
    switch (id) {
        case 1: case 2: case 3: case 4: case 5: case 6:
        case 8: case 9: case 15: case 16: case 20:
            return true;
        default:
            return false;
    }
}

inline AxiomReport check_relations(const FiniteQuandle& q, const BondMaps& m,
                                   const std::vector<int>& ids,
                                   bool check_quandle_axioms = true) {
    AxiomReport rep = check_quandle_axioms ? check_quandle(q) : AxiomReport{};
    const int n = q.order;
    bool need_r3 = false;
    for (int id : ids)
        if (id >= 17) need_r3 = true;
    if (!table_total(m.R1, n) || !table_total(m.R2, n) ||
        (need_r3 && !table_total(m.R3, n))) {
        rep.add("table-shape", -1, -1, -1);
        return rep;
    }
    for (int id : ids) {
        const std::string name = "(" + std::to_string(id) + ")";
        if (relation_is_binary(id)) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (!relation_holds(id, q, m, x, y, 0))
                        rep.add(name, x, y, -1);
        } else {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (!relation_holds(id, q, m, x, y, z))
                            rep.add(name, x, y, z);
        }
    }
    return rep;
}

} // namespace detail

inline AxiomReport check_singquandle(const FiniteQuandle& q, const BondMaps& m) {
    AxiomReport rep = check_kei(q); // involutory quandle underneath
    AxiomReport rels =
        detail::check_relations(q, m, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                                /*check_quandle_axioms=*/false);
    for (auto& v : rels.violations) rep.violations.push_back(std::move(v));
    return rep;
}

inline AxiomReport check_involutory_bondle(const FiniteQuandle& q, const BondMaps& m) {
    AxiomReport rep = check_kei(q);
    AxiomReport rels = detail::check_relations(q, m, {1, 2, 7, 8, 9, 10, 11},
                                               /*check_quandle_axioms=*/false);
    for (auto& v : rels.violations) rep.violations.push_back(std::move(v));
    return rep;
}

inline AxiomReport check_oriented_singquandle(const FiniteQuandle& q, const BondMaps& m) {
    return detail::check_relations(q, m, {12, 13, 14, 15, 16});
}

inline AxiomReport check_oriented_bondle(const FiniteQuandle& q, const BondMaps& m) {
    return detail::check_relations(q, m, {12, 13, 14, 15, 16, 17, 18, 19, 20});
}

// ---------------------------------------------------------------------------
// Affine constructors over Z_n
// ---------------------------------------------------------------------------

namespace detail {

inline long mod(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

inline bool is_unit(long a, long n) { return std::gcd(mod(a, n), n) == 1; }

inline long mod_inverse(long a, long n) {
    // extended Euclid
    long t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
        long qd = r / new_r;
        std::tie(t, new_t) = std::make_tuple(new_t, t - qd * new_t);
        std::tie(r, new_r) = std::make_tuple(new_r, r - qd * new_r);
    }
    if (r != 1) throw NonUnit(a, n);
    return mod(t, n);
}

inline Table affine_table(long n, long cx, long cy) {
    Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            t[x][y] = static_cast<int>(mod(cx * x + cy * y, n));
    return t;
}

} // namespace detail

struct AffineParams {
    long n = 0, a = 1, b = 0, m = 0;
    bool has_m = false;
};

inline FiniteQuandle affine_quandle(long n, long a) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2");
    if (!detail::is_unit(a, n)) throw NonUnit(a, n);
    const long ai = detail::mod_inverse(a, n);
    FiniteQuandle q;
    q.order = static_cast<int>(n);
    q.op = detail::affine_table(n, a, 1 - a);
    q.inv_op = detail::affine_table(n, ai, 1 - ai);
    return q;
}

inline std::pair<FiniteQuandle, BondMaps> affine_singquandle(long n, long a, long b) {
    FiniteQuandle q = affine_quandle(n, a);
    BondMaps m;
    m.R1 = detail::affine_table(n, b, 1 - b);
    m.R2 = detail::affine_table(n, a * (1 - b), b + (1 - b) * (1 - a));
    return {std::move(q), std::move(m)};
}

inline std::pair<FiniteQuandle, BondMaps> affine_bondle(long n, long a, long b, long m) {
    if (detail::mod(m * (m - 1), n) != 0) throw LemmaViolation(m, n);
    auto [q, maps] = affine_singquandle(n, a, b);
    maps.R3 = detail::affine_table(n, m, 1 - m);
    return {std::move(q), std::move(maps)};
}

// All (a, b, m) with a a unit, b arbitrary, m(m-1) = 0 mod n and m not in
// {0, 1} (the projections are the trivial solutions).
inline std::vector<std::tuple<long, long, long>> search_affine_bondles(long n) {
    std::vector<long> units, ms;
    for (long a = 1; a < n; ++a)
        if (detail::is_unit(a, n)) units.push_back(a);
    for (long m = 2; m < n; ++m)
        if (detail::mod(m * (m - 1), n) == 0) ms.push_back(m);
    std::vector<std::tuple<long, long, long>> out;
    for (long a : units)
        for (long b = 0; b < n; ++b)
            for (long m : ms)
                out.emplace_back(a, b, m);
    return out;
}

inline std::vector<long> affine_m_set(long n) {
    std::vector<long> ms;
    for (long m = 2; m < n; ++m)
        if (detail::mod(m * (m - 1), n) == 0) ms.push_back(m);
    return ms;
}

// ---------------------------------------------------------------------------
// Finite groups and conjugation quandles
// ---------------------------------------------------------------------------

struct FiniteGroup {
    int order = 0;
    Table mul;
    std::vector<int> inverse;
    int identity = 0;

    int pow(int x, long e) const {
        if (e < 0) return pow(inverse[x], -e);
        int r = identity;
        for (long i = 0; i < e; ++i) r = mul[r][x];
        return r;
    }
};

// Dihedral group of order 2k; element (i, j) = s^j r^i is encoded as j*k + i.
inline FiniteGroup dihedral_group(int k) {
    if (k < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
    FiniteGroup g;
    g.order = 2 * k;
    g.mul.assign(g.order, std::vector<int>(g.order));
    auto enc = [k](int i, int j) { return j * k + i; };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < 2; ++j)
            for (int i2 = 0; i2 < k; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // s^j r^i * s^j2 r^i2 = s^(j xor j2) r^(i2 + i*(-1)^j2)
                    int ii = ((i2 + (j2 ? -i : i)) % k + k) % k;
                    g.mul[enc(i, j)][enc(i2, j2)] = enc(ii, j ^ j2);
                }
    g.identity = enc(0, 0);
    g.inverse.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mul[x][y] == g.identity) g.inverse[x] = y;
    return g;
}

// Symmetric group S_3 (as a second small non-abelian carrier).
inline FiniteGroup symmetric_group_3() { return dihedral_group(3); }

inline FiniteQuandle conjugation_quandle(const FiniteGroup& g) {
    FiniteQuandle q;
    q.order = g.order;
    q.op.assign(g.order, std::vector<int>(g.order));
    q.inv_op.assign(g.order, std::vector<int>(g.order));
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            q.op[x][y] = g.mul[g.mul[g.inverse[y]][x]][y];     // y^-1 x y
            q.inv_op[x][y] = g.mul[g.mul[y][x]][g.inverse[y]]; // y x y^-1
        }
    return q;
}

enum class R3Variant { XXYinv, XinvYY }; // x^2 y^-1  |  x^-1 y^2

// Group-conjugation bondle families on a non-abelian group.
//   family 1: R1 = x (x y^-1)^n,   R2 = y (x^-1 y)^n
//   family 2: R1 = (x y^-1)^n x,   R2 = (x^-1 y)^n y
//   family 3: R1 = x (y x^-1)^(n+1), R2 = x (y^-1 x)^n
inline std::pair<FiniteQuandle, BondMaps> group_bondle(const FiniteGroup& g, int family,
                                                       int n_param, R3Variant variant) {
    if (family < 1 || family > 3) throw std::invalid_argument("family must be 1..3");
    if (n_param < 1) throw std::invalid_argument("n_param must be >= 1");
    FiniteQuandle q = conjugation_quandle(g);
    BondMaps maps;
    const int n = g.order;
    maps.R1.assign(n, std::vector<int>(n));
    maps.R2.assign(n, std::vector<int>(n));
    maps.R3.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xi = g.inverse[x], yi = g.inverse[y];
            int r1 = 0, r2 = 0;
            switch (family) {
                case 1:
                    r1 = g.mul[x][g.pow(g.mul[x][yi], n_param)];
                    r2 = g.mul[y][g.pow(g.mul[xi][y], n_param)];
                    break;
                case 2:
                    r1 = g.mul[g.pow(g.mul[x][yi], n_param)][x];
                    r2 = g.mul[g.pow(g.mul[xi][y], n_param)][y];
                    break;
                case 3:
                    r1 = g.mul[x][g.pow(g.mul[y][xi], n_param + 1)];
                    r2 = g.mul[x][g.pow(g.mul[yi][x], n_param)];
                    break;
            }
            maps.R1[x][y] = r1;
            maps.R2[x][y] = r2;
            maps.R3[x][y] = variant == R3Variant::XXYinv
                                ? g.mul[g.mul[x][x]][yi]  // x^2 y^-1
                                : g.mul[xi][g.mul[y][y]]; // x^-1 y^2
        }
    return {std::move(q), std::move(maps)};
}

// A named (quandle, maps) pair; the unit the coloring battery traffics in.
struct Bondle {
    std::string name;
    FiniteQuandle q;
    BondMaps maps;
};

} // namespace bondle
