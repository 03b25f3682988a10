#pragma once
// Reidemeister-move rewrites on Gauss codes and the normalization pipeline
// (sheet segmentation, helix handling, end-arc reduction).
//
// Moves are syntactic code rewrites; apply_move guarantees well-formedness of
// the result, not geometric realizability. Applicability conditions are chosen
// so that every applicable move of types I, II, III, IV, VI preserves bondle
// coloring counts outright, and types VII and V preserve them after
// normalization (VII interacts with end-arc reduction; V is the identity on
// antiparallel bonds, whose site relation is symmetric under a half-turn, and
// is not applicable elsewhere — see README for the full rationale).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gauss_code.hpp"

namespace bondle {

struct NotApplicable : std::runtime_error {
    explicit NotApplicable(const std::string& reason)
        : std::runtime_error("move not applicable: " + reason) {}
};

struct MoveSpec {
    enum class Type { I_insert, I_remove, II_insert, II_remove, III, IV, V, VI, VII };
    Type type = Type::I_insert;
    // Entry positions (0-based, into the entry list without terminals).
    // Insertions interpret them as gaps (0..size); pair moves as pair starts.
    int at = -1, at2 = -1, at3 = -1;
    int label = -1;              // IV/V: bond label; VII remove: crossing label
    int sign = +1;               // inserted crossing sign
    bool under_first = false;    // I_insert / VII insert: U passage comes first
    bool over_pair_first = false; // II_insert: the O-pair goes at `at`
    bool swap_under = false;     // II_insert: reverse the U-pair internally
    bool insert = false;         // VII: insert (true) or remove (false)
    bool backward = false;       // IV: slide from output side back to input side
};

namespace detail {

inline int max_label(const std::vector<Entry>& es) {
    int m = 0;
    for (const Entry& e : es) m = std::max(m, e.label);
    return m;
}

inline bool is_crossing(const Entry& e) {
    return e.kind == Kind::Over || e.kind == Kind::Under;
}

inline bool is_break_site(const Entry& e) {
    return e.kind == Kind::Bond || e.kind == Kind::Sheet;
}

inline void require(bool cond, const std::string& reason) {
    if (!cond) throw NotApplicable(reason);
}

inline GaussCode finish(std::vector<Entry> entries) {
    GaussCode out{std::move(entries)};
    out = renumber(std::move(out));
    ValidationReport rep = validate(out);
    if (!rep.ok()) throw NotApplicable("resulting code ill-formed: " + rep.errors.front());
    return out;
}

// first/last Bond-or-Sheet entry positions, or nullopt when there are none
inline std::optional<std::pair<int, int>> bond_span(const std::vector<Entry>& es) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        if (is_break_site(es[i])) {
            if (lo < 0) lo = i;
            hi = i;
        }
    if (lo < 0) return std::nullopt;
    return std::make_pair(lo, hi);
}

} // namespace detail

inline GaussCode apply_move(const GaussCode& code, const MoveSpec& spec) {
    using detail::require;
    std::vector<Entry> es = code.entries;
    const int n = static_cast<int>(es.size());

    auto gap_ok = [&](int g) { return g >= 0 && g <= n; };
    auto pair_ok = [&](int p) { return p >= 0 && p + 1 < n; };

    switch (spec.type) {
        case MoveSpec::Type::I_insert: {
            require(gap_ok(spec.at), "insertion position out of bounds");
            const int l = detail::max_label(es) + 1;
            Entry o{Kind::Over, l, spec.sign, 0};
            Entry u{Kind::Under, l, spec.sign, 0};
            std::vector<Entry> pair = spec.under_first ? std::vector<Entry>{u, o}
                                                       : std::vector<Entry>{o, u};
            es.insert(es.begin() + spec.at, pair.begin(), pair.end());
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::I_remove: {
            require(pair_ok(spec.at), "pair position out of bounds");
            const Entry& a = es[spec.at];
            const Entry& b = es[spec.at + 1];
            require(detail::is_crossing(a) && detail::is_crossing(b),
                    "kink removal needs two crossing passages");
            require(a.label == b.label && a.kind != b.kind,
                    "kink removal needs both passages of one crossing");
            es.erase(es.begin() + spec.at, es.begin() + spec.at + 2);
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::II_insert: {
            require(gap_ok(spec.at) && gap_ok(spec.at2) && spec.at <= spec.at2,
                    "insertion positions out of bounds");
            const int l1 = detail::max_label(es) + 1;
            const int l2 = l1 + 1;
            const int s = spec.sign;
            std::vector<Entry> overs = {{Kind::Over, l1, s, 0}, {Kind::Over, l2, -s, 0}};
            std::vector<Entry> unders = {{Kind::Under, l1, s, 0}, {Kind::Under, l2, -s, 0}};
            if (spec.swap_under) std::swap(unders[0], unders[1]);
            const auto& first = spec.over_pair_first ? overs : unders;
            const auto& second = spec.over_pair_first ? unders : overs;
            es.insert(es.begin() + spec.at2, second.begin(), second.end());
            es.insert(es.begin() + spec.at, first.begin(), first.end());
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::II_remove: {
            require(pair_ok(spec.at) && pair_ok(spec.at2), "pair positions out of bounds");
            require(spec.at + 1 < spec.at2 || spec.at2 + 1 < spec.at,
                    "the two pairs must be disjoint");
            const Entry *o1, *o2, *u1, *u2;
            const Entry &a = es[spec.at], &b = es[spec.at + 1];
            const Entry &c = es[spec.at2], &d = es[spec.at2 + 1];
            require(detail::is_crossing(a) && detail::is_crossing(b) &&
                        detail::is_crossing(c) && detail::is_crossing(d),
                    "bigon removal needs four crossing passages");
            if (a.kind == Kind::Over && b.kind == Kind::Over && c.kind == Kind::Under &&
                d.kind == Kind::Under) {
                o1 = &a; o2 = &b; u1 = &c; u2 = &d;
            } else if (a.kind == Kind::Under && b.kind == Kind::Under &&
                       c.kind == Kind::Over && d.kind == Kind::Over) {
                u1 = &a; u2 = &b; o1 = &c; o2 = &d;
            } else {
                throw NotApplicable("need one all-Over pair and one all-Under pair");
            }
            require(o1->label != o2->label, "the two crossings must be distinct");
            require((o1->label == u1->label && o2->label == u2->label) ||
                        (o1->label == u2->label && o2->label == u1->label),
                    "pairs must involve the same two crossings");
            require(o1->sign == -o2->sign,
                    "bigon removal needs opposite crossing signs");
            const int hi = std::max(spec.at, spec.at2);
            const int lo = std::min(spec.at, spec.at2);
            es.erase(es.begin() + hi, es.begin() + hi + 2);
            es.erase(es.begin() + lo, es.begin() + lo + 2);
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::III: {
            require(pair_ok(spec.at) && pair_ok(spec.at2) && pair_ok(spec.at3),
                    "pair positions out of bounds");
            int ps[3] = {spec.at, spec.at2, spec.at3};
            std::sort(ps, ps + 3);
            require(ps[0] + 1 < ps[1] && ps[1] + 1 < ps[2],
                    "the three pairs must be disjoint");
            // classify pairs by passage kinds
            int t = -1, m = -1, bo = -1;
            for (int p : ps) {
                const Entry &x = es[p], &y = es[p + 1];
                require(detail::is_crossing(x) && detail::is_crossing(y),
                        "triangle move needs crossing passages");
                if (x.kind == Kind::Over && y.kind == Kind::Over) t = p;
                else if (x.kind == Kind::Under && y.kind == Kind::Under) bo = p;
                else m = p;
            }
            require(t >= 0 && m >= 0 && bo >= 0,
                    "need one Over/Over, one Under/Under, and one mixed pair");
            const Entry& m_u = es[m].kind == Kind::Under ? es[m] : es[m + 1];
            const Entry& m_o = es[m].kind == Kind::Over ? es[m] : es[m + 1];
            const int i = m_u.label; // crossing shared by T and M
            const int k = m_o.label; // crossing shared by M and B
            require(es[t].label == i || es[t + 1].label == i,
                    "mixed pair's under-crossing must recur in the Over/Over pair");
            const int j = es[t].label == i ? es[t + 1].label : es[t].label;
            require(i != j && j != k && i != k, "three distinct crossings required");
            require((es[bo].label == j && es[bo + 1].label == k) ||
                        (es[bo].label == k && es[bo + 1].label == j),
                    "Under/Under pair must involve the other two crossings");
            // sign rule: equal k-position in the mixed and Under/Under pairs
            // forces equal signs for crossings i and j; unequal forces opposite.
            const int si = m_u.sign;
            const int sj = (es[t].label == j ? es[t] : es[t + 1]).sign;
            const bool k_first_in_m = (es[m].label == k);
            const bool k_first_in_b = (es[bo].label == k);
            if (k_first_in_m == k_first_in_b)
                require(si == sj, "triangle move needs equal signs here");
            else
                require(si == -sj, "triangle move needs opposite signs here");
            for (int p : ps) std::swap(es[p], es[p + 1]);
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::IV: {
            int p = -1, q = -1;
            for (int idx = 0; idx < n; ++idx)
                if (es[idx].kind == Kind::Bond && es[idx].label == spec.label)
                    (p < 0 ? p : q) = idx;
            require(p >= 0 && q >= 0, "bond label not found");
            const bool parallel = es[q].sign > 0;
            const int pa = spec.backward ? p + 1 : p - 1; // moving passage, first side
            const int pb = spec.backward ? q + 1 : q - 1; // moving passage, second side
            require(pa >= 0 && pb >= 0 && pa < n && pb < n && pa != q && pb != p,
                    "no crossing passages adjacent to both bond passages");
            const Entry ea = es[pa], eb = es[pb];
            require(detail::is_crossing(ea) && detail::is_crossing(eb),
                    "entries adjacent to the bond must be crossing passages");
            require(ea.kind == eb.kind, "both passages must have the same role");
            require(ea.label != eb.label, "two distinct crossings required");
            // locate the partner passages on the sliding strand
            int ra = -1, rb = -1;
            for (int idx = 0; idx < n; ++idx) {
                if (idx == pa || idx == pb) continue;
                if (detail::is_crossing(es[idx]) && es[idx].label == ea.label) ra = idx;
                if (detail::is_crossing(es[idx]) && es[idx].label == eb.label) rb = idx;
            }
            require(ra >= 0 && rb >= 0 && std::abs(ra - rb) == 1,
                    "partner passages must be adjacent on the sliding strand");
            if (ea.kind == Kind::Under) {
                // sliding strand passes over both bond strands
                require(ea.sign == eb.sign, "slide needs equal crossing signs");
            } else {
                // sliding strand passes under both bond strands
                require(parallel, "under-slide applies to parallel bonds only");
                require(ea.sign == eb.sign, "slide needs equal crossing signs");
                const bool meets_first_first = ra < rb;
                if (ea.sign > 0)
                    require(meets_first_first,
                            "positive under-slide needs the strand to meet the "
                            "first bond passage's crossing first");
                else
                    require(!meets_first_first,
                            "negative under-slide needs the strand to meet the "
                            "second bond passage's crossing first");
            }
            std::vector<Entry> out;
            out.reserve(es.size());
            for (int idx = 0; idx < n; ++idx) {
                if (idx == pa || idx == pb) continue;
                if (spec.backward && idx == p) out.push_back(ea);
                if (spec.backward && idx == q) out.push_back(eb);
                out.push_back(es[idx]);
                if (!spec.backward && idx == p) out.push_back(ea);
                if (!spec.backward && idx == q) out.push_back(eb);
            }
            return detail::finish(std::move(out));
        }
        case MoveSpec::Type::V: {
            int p = -1, q = -1;
            Kind fam = Kind::Bond;
            for (int idx = 0; idx < n; ++idx)
                if ((es[idx].kind == Kind::Bond || es[idx].kind == Kind::Sheet) &&
                    es[idx].label == spec.label) {
                    fam = es[idx].kind;
                    (p < 0 ? p : q) = idx;
                }
            require(p >= 0, "bond/sheet label not found");
            require(fam == Kind::Bond,
                    "sheet flip is not expressible (index chirality); segment first");
            require(q >= 0, "bond must have two passages");
            require(es[q].sign < 0,
                    "flip of a parallel bond is not expressible in traversal-role "
                    "Gauss-code semantics (see README); only antiparallel bonds flip");
            // An antiparallel bond site relation is symmetric under the half
            // turn (the second output is the role-swapped first map), so the
            // flipped diagram has the identical code.
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::VI: {
            require(pair_ok(spec.at), "pair position out of bounds");
            Entry& a = es[spec.at];
            Entry& b = es[spec.at + 1];
            const bool ok = (a.kind == Kind::Helix && detail::is_crossing(b)) ||
                            (b.kind == Kind::Helix && detail::is_crossing(a));
            require(ok, "helix transposition needs a helix next to a crossing passage");
            std::swap(a, b);
            return detail::finish(std::move(es));
        }
        case MoveSpec::Type::VII: {
            const auto span = detail::bond_span(es);
            if (!spec.insert) {
                int c1 = -1, c2 = -1;
                for (int idx = 0; idx < n; ++idx)
                    if (detail::is_crossing(es[idx]) && es[idx].label == spec.label)
                        (c1 < 0 ? c1 : c2) = idx;
                require(c1 >= 0 && c2 >= 0, "crossing label not found");
                const bool terminal =
                    !span || c1 < span->first || c2 > span->second;
                require(terminal,
                        "crossing has no passage on a terminal segment");
                es.erase(es.begin() + c2);
                es.erase(es.begin() + c1);
                return detail::finish(std::move(es));
            }
            require(gap_ok(spec.at) && gap_ok(spec.at2) && spec.at <= spec.at2,
                    "insertion positions out of bounds");
            const bool terminal = !span || spec.at <= span->first ||
                                  spec.at2 > span->second;
            require(terminal, "one inserted passage must land on a terminal segment");
            const int l = detail::max_label(es) + 1;
            Entry first{spec.under_first ? Kind::Under : Kind::Over, l, spec.sign, 0};
            Entry second{spec.under_first ? Kind::Over : Kind::Under, l, spec.sign, 0};
            es.insert(es.begin() + spec.at2, second);
            es.insert(es.begin() + spec.at, first);
            return detail::finish(std::move(es));
        }
    }
    throw NotApplicable("unknown move type");
}

// ---------------------------------------------------------------------------
// Normalization passes
// ---------------------------------------------------------------------------

// Replaces every k-strand sheet by k-1 bonds between index-adjacent strands,
// ordered along each strand by the staircase: the bond joining strands
// (i, i+1) sits at height i; a + strand meets its bonds in decreasing height
// order, a - strand in increasing order. A bond is parallel (class +) iff the
// two joined strands have equal sheet signs.
inline GaussCode segment_sheets(const GaussCode& code) {
    {
        ValidationReport rep = validate(code);
        if (!rep.ok()) throw MalformedCode(rep);
    }
    std::map<int, std::map<int, int>> sheet_signs; // label -> index -> sign
    int next_label = 0;
    for (const Entry& e : code.entries) {
        if (e.kind == Kind::Sheet)
            sheet_signs[e.label][e.strand_index] = e.sign;
        else
            next_label = std::max(next_label, e.label);
    }
    std::map<std::pair<int, int>, int> bond_label;  // (sheet, low index) -> label
    std::map<std::pair<int, int>, int> bond_class;  // parallel: +1 / -1
    std::vector<Entry> out;
    for (const Entry& e : code.entries) {
        if (e.kind != Kind::Sheet) {
            out.push_back(e);
            continue;
        }
        const auto& signs = sheet_signs[e.label];
        const int i = e.strand_index;
        std::vector<std::pair<int, std::pair<int, int>>> bonds; // (height, key)
        if (signs.count(i - 1)) bonds.push_back({i - 1, {e.label, i - 1}});
        if (signs.count(i + 1)) bonds.push_back({i, {e.label, i}});
        if (e.sign > 0)
            std::sort(bonds.begin(), bonds.end(),
                      [](auto& x, auto& y) { return x.first > y.first; });
        else
            std::sort(bonds.begin(), bonds.end(),
                      [](auto& x, auto& y) { return x.first < y.first; });
        for (const auto& [height, key] : bonds) {
            auto it = bond_label.find(key);
            if (it == bond_label.end()) {
                bond_label[key] = ++next_label;
                const int lo = key.second;
                bond_class[key] = (signs.at(lo) == signs.at(lo + 1)) ? +1 : -1;
                out.push_back({Kind::Bond, next_label, +1, 0});
            } else {
                out.push_back({Kind::Bond, it->second, bond_class[key], 0});
            }
        }
    }
    return renumber(GaussCode{std::move(out)});
}

enum class HelixMode { Drop, Kinks };

inline GaussCode normalize_helices(const GaussCode& code, HelixMode mode,
                                   int kinks = 1) {
    std::vector<Entry> out;
    int next_label = detail::max_label(code.entries);
    for (const Entry& e : code.entries) {
        if (e.kind != Kind::Helix) {
            out.push_back(e);
            continue;
        }
        if (mode == HelixMode::Drop) continue;
        for (int i = 0; i < kinks; ++i) {
            ++next_label;
            out.push_back({Kind::Over, next_label, e.sign, 0});
            out.push_back({Kind::Under, next_label, e.sign, 0});
        }
    }
    return renumber(GaussCode{std::move(out)});
}

// Deletes, to a fixed point, every crossing with a passage strictly before the
// first Bond/Sheet entry or strictly after the last one (all crossings when
// there are no bonds or sheets): end strands slide free of them.
inline GaussCode reduce_ends(const GaussCode& code) {
    std::vector<Entry> es = code.entries;
    for (;;) {
        const auto span = detail::bond_span(es);
        std::set<int> kill;
        for (int i = 0; i < static_cast<int>(es.size()); ++i)
            if (detail::is_crossing(es[i]) &&
                (!span || i < span->first || i > span->second))
                kill.insert(es[i].label);
        if (kill.empty()) break;
        std::vector<Entry> next;
        for (const Entry& e : es)
            if (!(detail::is_crossing(e) && kill.count(e.label))) next.push_back(e);
        es = std::move(next);
    }
    return renumber(GaussCode{std::move(es)});
}

inline GaussCode normalize(const GaussCode& code) {
    return renumber(
        reduce_ends(normalize_helices(segment_sheets(code), HelixMode::Drop)));
}

// ---------------------------------------------------------------------------
// Traces
// ---------------------------------------------------------------------------

struct TraceStep {
    MoveSpec spec;
    std::uint64_t code_hash; // hash of the code after this step
};

struct RewriteTrace {
    std::uint64_t initial_hash = 0;
    std::vector<TraceStep> steps;
};

inline GaussCode apply_moves(const GaussCode& code, const std::vector<MoveSpec>& specs,
                             RewriteTrace* trace = nullptr) {
    GaussCode current = code;
    if (trace) trace->initial_hash = code_hash(current);
    for (const MoveSpec& s : specs) {
        current = apply_move(current, s);
        if (trace) trace->steps.push_back({s, code_hash(current)});
    }
    return current;
}

} // namespace bondle
