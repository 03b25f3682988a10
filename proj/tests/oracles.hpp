#pragma once
// Independent test oracles, deliberately implemented through different code
// paths than the library:
//   * a random well-formed Gauss-code generator;
//   * a plain n^arcs brute-force coloring enumerator (no propagation);
//   * a tiny term interpreter re-evaluating the numbered algebra relations
//     from their textual definitions.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <bondle/algebra.hpp>
#include <bondle/coloring.hpp>
#include <bondle/diagram.hpp>
#include <bondle/gauss_code.hpp>

namespace oracles {

// ---------------------------------------------------------------------------
// Random code generation
// ---------------------------------------------------------------------------

struct GenOptions {
    int max_crossings = 3;
    int max_bonds = 2;
    int max_sheets = 0;
    int max_helices = 0;
    bool at_least_one_site = false;
};

inline bondle::GaussCode random_code(std::mt19937& rng, const GenOptions& opt) {
    using bondle::Entry;
    using bondle::Kind;
    auto uni = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto coin_sign = [&]() { return uni(0, 1) ? +1 : -1; };

    for (;;) {
        const int nc = uni(0, opt.max_crossings);
        const int nb = uni(0, opt.max_bonds);
        const int ns = uni(0, opt.max_sheets);
        const int nh = uni(0, opt.max_helices);
        if (opt.at_least_one_site && nc + nb + ns + nh == 0) continue;

        // Each group is a list of occurrences in the order they must appear.
        std::vector<std::vector<Entry>> groups;
        int label = 0;
        for (int i = 0; i < nc; ++i) {
            ++label;
            const int s = coin_sign();
            Entry o{Kind::Over, label, s, 0};
            Entry u{Kind::Under, label, s, 0};
            if (uni(0, 1))
                groups.push_back({o, u});
            else
                groups.push_back({u, o});
        }
        for (int i = 0; i < nb; ++i) {
            ++label;
            groups.push_back({Entry{Kind::Bond, label, +1, 0},
                              Entry{Kind::Bond, label, coin_sign(), 0}});
        }
        for (int i = 0; i < ns; ++i) {
            ++label;
            // contiguous index range [lo, hi] containing 0 with hi >= 1
            const int hi = uni(1, 2);
            const int lo = uni(-1, 0);
            std::vector<int> rest;
            for (int idx = lo; idx <= hi; ++idx)
                if (idx != 0) rest.push_back(idx);
            std::shuffle(rest.begin(), rest.end(), rng);
            // second occurrence needs a positive index: move one to the front
            for (std::size_t j = 0; j < rest.size(); ++j)
                if (rest[j] > 0) {
                    std::swap(rest[0], rest[j]);
                    break;
                }
            std::vector<Entry> occ{Entry{Kind::Sheet, label, +1, 0}};
            for (int idx : rest) occ.push_back(Entry{Kind::Sheet, label, coin_sign(), idx});
            groups.push_back(std::move(occ));
        }
        for (int i = 0; i < nh; ++i) {
            ++label;
            groups.push_back({Entry{Kind::Helix, label, coin_sign(), 0}});
        }

        // Interleave: shuffle all slots, then refill each group's slots in
        // its required internal order.
        std::size_t total = 0;
        for (const auto& g : groups) total += g.size();
        std::vector<int> owner;
        owner.reserve(total);
        for (std::size_t g = 0; g < groups.size(); ++g)
            owner.insert(owner.end(), groups[g].size(), static_cast<int>(g));
        std::shuffle(owner.begin(), owner.end(), rng);
        std::vector<Entry> entries;
        entries.reserve(total);
        std::vector<std::size_t> next(groups.size(), 0);
        for (int g : owner) entries.push_back(groups[g][next[g]++]);

        bondle::GaussCode code = bondle::renumber(bondle::GaussCode{std::move(entries)});
        if (bondle::validate(code).ok()) return code;
        throw std::logic_error("generator produced an invalid code: " +
                               bondle::serialize(code));
    }
}

// ---------------------------------------------------------------------------
// Plain brute-force coloring enumeration (no propagation, no pruning)
// ---------------------------------------------------------------------------

inline long brute_force_count(const bondle::Diagram& d, const bondle::FiniteQuandle& q,
                              const bondle::BondMaps& m) {
    bondle::ConstraintSystem cs = bondle::extract_constraints(d);
    const int vars = cs.variables;
    const int n = q.order;
    std::vector<int> val(static_cast<std::size_t>(vars), 0);
    long count = 0;
    for (;;) {
        bool ok = true;
        for (const bondle::Equation& e : cs.equations) {
            switch (e.type) {
                case bondle::Equation::Type::UnderPass:
                    ok = val[e.a] == (e.sign > 0 ? q.op[val[e.b]][val[e.c]]
                                                 : q.inv_op[val[e.b]][val[e.c]]);
                    break;
                case bondle::Equation::Type::ParallelBond:
                    ok = val[e.a] == m.R1[val[e.c]][val[e.d]] &&
                         val[e.b] == m.R2[val[e.c]][val[e.d]];
                    break;
                case bondle::Equation::Type::AntiparallelBond:
                    ok = val[e.a] == m.R3[val[e.c]][val[e.d]] &&
                         val[e.b] == m.R3[val[e.d]][val[e.c]];
                    break;
            }
            if (!ok) break;
        }
        if (ok) ++count;
        int i = 0;
        while (i < vars && ++val[i] == n) val[i++] = 0;
        if (i == vars) break;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Term-interpreter relation oracle
// ---------------------------------------------------------------------------
//
// Terms: x | y | z | f(t1,t2) with f in {op, iv, R1, R2, R3}. A relation is
// "lhs == rhs". The catalogue below is transcribed independently from the
// relation definitions, giving a second evaluation path for every axiom.

namespace detail {

struct TermCtx {
    const bondle::FiniteQuandle& q;
    const bondle::BondMaps& m;
    int x, y, z;
};

inline int eval_term(const std::string& s, std::size_t& pos, const TermCtx& c) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    const std::string name = s.substr(start, pos - start);
    if (name == "x") return c.x;
    if (name == "y") return c.y;
    if (name == "z") return c.z;
    if (pos >= s.size() || s[pos] != '(')
        throw std::invalid_argument("bad term near '" + name + "' in: " + s);
    ++pos; // '('
    const int a = eval_term(s, pos, c);
    if (s[pos] != ',') throw std::invalid_argument("expected ',' in: " + s);
    ++pos;
    const int b = eval_term(s, pos, c);
    if (s[pos] != ')') throw std::invalid_argument("expected ')' in: " + s);
    ++pos;
    if (name == "op") return c.q.op[a][b];
    if (name == "iv") return c.q.inv_op[a][b];
    if (name == "R1") return c.m.R1[a][b];
    if (name == "R2") return c.m.R2[a][b];
    if (name == "R3") return c.m.R3[a][b];
    throw std::invalid_argument("unknown function '" + name + "' in: " + s);
}

} // namespace detail

// id -> {lhs, rhs}
inline std::pair<std::string, std::string> relation_text(int id) {
    switch (id) {
        case 1: return {"x", "R2(R2(x,y),R1(x,y))"};
        case 2: return {"y", "R1(R2(x,y),R1(x,y))"};
        case 3: return {"x", "R1(y,R2(x,y))"};
        case 4: return {"R1(x,y)", "R2(y,R2(x,y))"};
        case 5: return {"y", "R2(R1(x,y),x)"};
        case 6: return {"R2(x,y)", "R1(R1(x,y),x)"};
        case 7: return {"op(op(y,z),R2(x,z))", "op(op(y,x),R1(x,z))"};
        case 8: return {"R1(x,y)", "R2(op(y,x),x)"};
        case 9: return {"R2(x,y)", "op(R1(op(y,x),x),R2(op(y,x),x))"};
        case 10: return {"op(R1(op(x,y),z),y)", "R1(x,op(z,y))"};
        case 11: return {"R2(op(x,y),z)", "op(R2(x,op(z,y)),y)"};
        case 12: return {"op(R1(iv(x,y),z),y)", "R1(x,op(z,y))"};
        case 13: return {"R2(iv(x,y),z)", "iv(R2(x,op(z,y)),y)"};
        case 14: return {"op(iv(y,R1(x,z)),x)", "iv(op(y,R2(x,z)),z)"};
        case 15: return {"R2(x,y)", "R1(y,op(x,y))"};
        case 16: return {"op(R1(x,y),R2(x,y))", "R2(y,op(x,y))"};
        case 17: return {"R3(y,iv(x,z))", "iv(R3(op(y,z),x),z)"};
        case 18: return {"R3(x,op(y,z))", "op(R3(iv(x,z),y),z)"};
        case 19: return {"op(iv(z,R3(x,y)),x)", "op(iv(z,y),R3(y,x))"};
        case 20: return {"iv(R3(x,y),y)", "R3(iv(x,R3(y,x)),y)"};
        default: throw std::invalid_argument("unknown relation id");
    }
}

inline bool relation_holds_oracle(int id, const bondle::FiniteQuandle& q,
                                  const bondle::BondMaps& m, int x, int y, int z) {
    const auto [lhs, rhs] = relation_text(id);
    detail::TermCtx c{q, m, x, y, z};
    std::size_t p1 = 0, p2 = 0;
    return detail::eval_term(lhs, p1, c) == detail::eval_term(rhs, p2, c);
}

// Random operation tables with entries in [0, n).
inline bondle::Table random_table(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(0, n - 1);
    bondle::Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : t)
        for (int& v : row) v = d(rng);
    return t;
}

} // namespace oracles
