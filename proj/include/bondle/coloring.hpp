#pragma once
// Coloring constraint systems and exact coloring counters.
//
// Equations (roles fixed by traversal order, see diagram.hpp):
//   UnderPass: out = in > over   (crossing sign +)
//              out = in >' over  (crossing sign -)
//   ParallelBond:      first_out = R1(x, y), second_out = R2(x, y)
//   AntiparallelBond:  first_out = R3(x, y), second_out = R3(y, x)
//   with x = first-traversed input arc, y = second-traversed input arc.
//
// Counters:
//   * count_colorings        — depth-first assignment in traversal order with
//                              forward propagation; exact big-integer totals.
//   * count_colorings_affine — the affine closed forms make every equation
//                              linear over Z_n; solutions are counted exactly
//                              via Smith normal form.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "diagram.hpp"

namespace bondle {

using BigInt = boost::multiprecision::cpp_int;

struct UnnormalizedDiagram : std::runtime_error {
    explicit UnnormalizedDiagram(const std::string& what) : std::runtime_error(what) {}
};

struct Equation {
    enum class Type { UnderPass, ParallelBond, AntiparallelBond };
    Type type;
    // UnderPass: out, in, over, sign. Bonds: first_out, second_out, first_in, second_in.
    int a = -1, b = -1, c = -1, d = -1;
    int sign = +1;
};

struct ConstraintSystem {
    int variables = 0; // one per arc
    std::vector<Equation> equations;
};

inline ConstraintSystem extract_constraints(const Diagram& d) {
    if (!d.sheets.empty())
        throw UnnormalizedDiagram("diagram contains sheet sites; run normalize first");
    if (!d.helices.empty())
        throw UnnormalizedDiagram("diagram contains helix sites; run normalize first");
    ConstraintSystem cs;
    cs.variables = d.arc_count;
    for (const ClassicalSite& x : d.crossings) {
        Equation e;
        e.type = Equation::Type::UnderPass;
        e.a = x.under_out;
        e.b = x.under_in;
        e.c = x.over_arc;
        e.sign = x.sign;
        cs.equations.push_back(e);
    }
    for (const BondSite& bnd : d.bonds) {
        Equation e;
        e.type = bnd.parallel ? Equation::Type::ParallelBond
                              : Equation::Type::AntiparallelBond;
        e.a = bnd.first_out;
        e.b = bnd.second_out;
        e.c = bnd.first_in;
        e.d = bnd.second_in;
        cs.equations.push_back(e);
    }
    return cs;
}

struct ColoringCount {
    BigInt total = 0;
    BigInt trivial = 0;
};

namespace detail {

// Forward propagation: fills every output determined by current assignment.
// Returns false on contradiction. `assigned` uses -1 for "unset".
inline bool propagate(const ConstraintSystem& cs, const FiniteQuandle& q,
                      const BondMaps& m, std::vector<int>& val) {
    bool changed = true;
    auto set = [&](int var, int v) {
        if (val[var] == -1) {
            val[var] = v;
            return true;
        }
        return val[var] == v;
    };
    while (changed) {
        changed = false;
        for (const Equation& e : cs.equations) {
            switch (e.type) {
                case Equation::Type::UnderPass: {
                    if (val[e.b] == -1 || val[e.c] == -1) break;
                    bool was_unset = (val[e.a] == -1);
                    int out = e.sign > 0 ? q.op[val[e.b]][val[e.c]]
                                         : q.inv_op[val[e.b]][val[e.c]];
                    if (!set(e.a, out)) return false;
                    if (was_unset) changed = true;
                    break;
                }
                case Equation::Type::ParallelBond:
                case Equation::Type::AntiparallelBond: {
                    if (val[e.c] == -1 || val[e.d] == -1) break;
                    if (val[e.a] != -1 && val[e.b] != -1) break;
                    int x = val[e.c], y = val[e.d];
                    int fo, so;
                    if (e.type == Equation::Type::ParallelBond) {
                        fo = m.R1[x][y];
                        so = m.R2[x][y];
                    } else {
                        fo = m.R3[x][y];
                        so = m.R3[y][x];
                    }
                    bool was_unset = (val[e.a] == -1 || val[e.b] == -1);
                    if (!set(e.a, fo) || !set(e.b, so)) return false;
                    if (was_unset) changed = true;
                    break;
                }
            }
        }
    }
    return true;
}

inline bool consistent(const ConstraintSystem& cs, const FiniteQuandle& q,
                       const BondMaps& m, const std::vector<int>& val) {
    for (const Equation& e : cs.equations) {
        switch (e.type) {
            case Equation::Type::UnderPass: {
                int out = e.sign > 0 ? q.op[val[e.b]][val[e.c]]
                                     : q.inv_op[val[e.b]][val[e.c]];
                if (val[e.a] != out) return false;
                break;
            }
            case Equation::Type::ParallelBond: {
                if (val[e.a] != m.R1[val[e.c]][val[e.d]] ||
                    val[e.b] != m.R2[val[e.c]][val[e.d]])
                    return false;
                break;
            }
            case Equation::Type::AntiparallelBond: {
                if (val[e.a] != m.R3[val[e.c]][val[e.d]] ||
                    val[e.b] != m.R3[val[e.d]][val[e.c]])
                    return false;
                break;
            }
        }
    }
    return true;
}

inline void count_rec(const ConstraintSystem& cs, const FiniteQuandle& q,
                      const BondMaps& m, std::vector<int>& val, BigInt& total) {
    if (!propagate(cs, q, m, val)) return;
    int branch = -1;
    for (int i = 0; i < cs.variables; ++i)
        if (val[i] == -1) {
            branch = i;
            break;
        }
    if (branch == -1) {
        if (consistent(cs, q, m, val)) ++total;
        return;
    }
    for (int v = 0; v < q.order; ++v) {
        std::vector<int> saved = val;
        val[branch] = v;
        count_rec(cs, q, m, val, total);
        val = std::move(saved);
    }
}

} // namespace detail

inline ColoringCount count_colorings(const Diagram& d, const FiniteQuandle& q,
                                     const BondMaps& m) {
    ConstraintSystem cs = extract_constraints(d);
    ColoringCount result;
    std::vector<int> val(static_cast<std::size_t>(cs.variables), -1);
    detail::count_rec(cs, q, m, val, result.total);
    for (int v = 0; v < q.order; ++v) {
        std::vector<int> constant(static_cast<std::size_t>(cs.variables), v);
        if (detail::consistent(cs, q, m, constant)) ++result.trivial;
    }
    return result;
}

inline ColoringCount count_colorings(const Diagram& d, const Bondle& b) {
    return count_colorings(d, b.q, b.maps);
}

// ---------------------------------------------------------------------------
// Affine fast path
// ---------------------------------------------------------------------------

namespace detail {

// In-place Smith normal form over Z; returns the diagonal entries.
inline std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        // eliminate until row t and column t are clear apart from the pivot
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                if (a[i][t] % a[t][t] != 0) {
                    // keep the smaller remainder as the pivot candidate
                    BigInt qout = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= qout * a[t][j];
                    std::swap(a[t], a[i]);
                    dirty = true;
                } else {
                    BigInt qout = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= qout * a[t][j];
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                if (a[t][j] % a[t][t] != 0) {
                    BigInt qout = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= qout * a[i][t];
                    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    dirty = true;
                } else {
                    BigInt qout = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= qout * a[i][t];
                }
            }
        }
        diag.push_back(a[t][t] < 0 ? BigInt(-a[t][t]) : a[t][t]);
        ++t;
    }
    return diag;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline BigInt big_pow(BigInt base, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace detail

// Exact solution count of the homogeneous-affine system over Z_n.
// Every equation's right-hand coefficients sum to 1, so the constant terms
// cancel and the system is linear homogeneous in the arc colors.
inline ColoringCount count_colorings_affine(const Diagram& d, const AffineParams& p) {
    ConstraintSystem cs = extract_constraints(d);
    const long n = p.n;
    if (n < 2) throw std::invalid_argument("modulus must be >= 2");
    if (!detail::is_unit(p.a, n)) throw NonUnit(p.a, n);
    const long a = detail::mod(p.a, n);
    const long ai = detail::mod_inverse(a, n);
    const long b = detail::mod(p.b, n);
    const long m = p.has_m ? detail::mod(p.m, n) : 0;

    std::vector<std::vector<BigInt>> rows;
    auto new_row = [&]() { return std::vector<BigInt>(cs.variables, 0); };
    for (const Equation& e : cs.equations) {
        switch (e.type) {
            case Equation::Type::UnderPass: {
                auto r = new_row();
                const long ca = e.sign > 0 ? a : ai;
                r[e.a] += 1;
                r[e.b] -= ca;
                r[e.c] -= (1 - ca);
                rows.push_back(std::move(r));
                break;
            }
            case Equation::Type::ParallelBond: {
                auto r1 = new_row();
                r1[e.a] += 1;
                r1[e.c] -= b;
                r1[e.d] -= (1 - b);
                rows.push_back(std::move(r1));
                auto r2 = new_row();
                r2[e.b] += 1;
                r2[e.c] -= a * (1 - b);
                r2[e.d] -= (b + (1 - b) * (1 - a));
                rows.push_back(std::move(r2));
                break;
            }
            case Equation::Type::AntiparallelBond: {
                if (!p.has_m)
                    throw std::invalid_argument(
                        "antiparallel bond requires the affine R3 parameter m");
                auto r1 = new_row();
                r1[e.a] += 1;
                r1[e.c] -= m;
                r1[e.d] -= (1 - m);
                rows.push_back(std::move(r1));
                auto r2 = new_row();
                r2[e.b] += 1;
                r2[e.d] -= m;
                r2[e.c] -= (1 - m);
                rows.push_back(std::move(r2));
                break;
            }
        }
    }
    ColoringCount result;
    result.trivial = n; // constant colorings always solve the homogeneous system
    if (rows.empty()) {
        result.total = detail::big_pow(n, cs.variables);
        return result;
    }
    for (auto& r : rows)
        for (auto& v : r) v = ((v % n) + n) % n;
    std::vector<BigInt> diag = detail::smith_diagonal(std::move(rows));
    long rank = 0;
    BigInt total = 1;
    for (const BigInt& dv : diag) {
        if (dv == 0) continue;
        ++rank;
        total *= detail::big_gcd(dv, n);
    }
    total *= detail::big_pow(n, cs.variables - rank);
    result.total = total;
    return result;
}

// ---------------------------------------------------------------------------
// Distinguishing
// ---------------------------------------------------------------------------

struct Verdict {
    bool distinct = false;
    std::size_t bondle_index = 0; // first distinguishing bondle when distinct
    std::string bondle_name;
    std::vector<std::pair<BigInt, BigInt>> counts; // per consulted bondle
};

inline Verdict distinguish(const Diagram& d1, const Diagram& d2,
                           const std::vector<Bondle>& battery) {
    Verdict v;
    for (std::size_t i = 0; i < battery.size(); ++i) {
        BigInt c1 = count_colorings(d1, battery[i]).total;
        BigInt c2 = count_colorings(d2, battery[i]).total;
        v.counts.emplace_back(c1, c2);
        if (c1 != c2) {
            v.distinct = true;
            v.bondle_index = i;
            v.bondle_name = battery[i].name;
            return v;
        }
    }
    return v;
}

// Scans affine bondles in lexicographic (n, a, b, m) order.
inline Verdict search_distinguisher(const Diagram& d1, const Diagram& d2, long max_n) {
    Verdict v;
    for (long n = 2; n <= max_n; ++n) {
        for (const auto& [a, b, m] : search_affine_bondles(n)) {
            AffineParams p{n, a, b, m, true};
            BigInt c1 = count_colorings_affine(d1, p).total;
            BigInt c2 = count_colorings_affine(d2, p).total;
            if (c1 != c2) {
                v.distinct = true;
                v.bondle_name = "affine(" + std::to_string(n) + "," + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(m) + ")";
                v.counts.emplace_back(c1, c2);
                return v;
            }
        }
    }
    return v;
}

} // namespace bondle
