#pragma once
// Extended Gauss codes for open-chain (protein backbone) diagrams.
//
// Textual grammar:
//   code  := "N" entry* "C"
//   entry := ("O"|"U") INT SIGN        classical crossing passage (over / under)
//          | "B" INT SIGN              bond passage
//          | "S" INT SIGN "_" SINT     beta-sheet strand occurrence
//          | "A" INT SIGN              alpha-helix marker
//   SIGN  := "+" | "-"
//
// Well-formedness (checked by validate):
//   * labels are positive and sequential in order of first appearance;
//   * each label is used by exactly one entry family;
//   * a crossing label occurs exactly twice, once Over and once Under,
//     with equal signs;
//   * a bond label occurs exactly twice and its first occurrence has sign +;
//   * a sheet label occurs at least twice; its first occurrence has sign +
//     and strand index 0; indices are distinct and contiguous and contain 0;
//     the second occurrence has a strictly positive index;
//   * a helix label occurs exactly once.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bondle {

enum class Kind : std::uint8_t { Over, Under, Bond, Sheet, Helix };

struct Entry {
    Kind kind;
    int label = 0;
    int sign = +1;        // +1 or -1
    int strand_index = 0; // sheets only

    friend bool operator==(const Entry& a, const Entry& b) {
        return a.kind == b.kind && a.label == b.label && a.sign == b.sign &&
               (a.kind != Kind::Sheet || a.strand_index == b.strand_index);
    }
    friend bool operator!=(const Entry& a, const Entry& b) { return !(a == b); }
};

struct GaussCode {
    std::vector<Entry> entries; // terminals N/C are implicit

    friend bool operator==(const GaussCode& a, const GaussCode& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const GaussCode& a, const GaussCode& b) { return !(a == b); }
};

struct ParseError : std::runtime_error {
    int token_index;
    ParseError(const std::string& msg, int tok)
        : std::runtime_error(msg + " (token " + std::to_string(tok) + ")"),
          token_index(tok) {}
};

struct ValidationReport {
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

struct MalformedCode : std::runtime_error {
    explicit MalformedCode(const ValidationReport& r)
        : std::runtime_error(r.errors.empty() ? "malformed code"
                                              : "malformed code: " + r.errors.front()) {}
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// Parses a decimal integer starting at `pos`; advances `pos`.
inline std::optional<long> take_int(const std::string& s, std::size_t& pos,
                                    bool allow_negative) {
    std::size_t start = pos;
    if (allow_negative && pos < s.size() && s[pos] == '-') ++pos;
    std::size_t digits_from = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_from) {
        pos = start;
        return std::nullopt;
    }
    return std::stol(s.substr(start, pos - start));
}

inline std::optional<int> take_sign(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) return std::nullopt;
    if (s[pos] == '+') { ++pos; return +1; }
    if (s[pos] == '-') { ++pos; return -1; }
    return std::nullopt;
}

} // namespace detail

inline GaussCode parse(const std::string& text) {
    const auto toks = detail::tokenize(text);
    if (toks.empty()) throw ParseError("empty input, expected 'N ... C'", 0);
    if (toks.front() != "N") throw ParseError("expected leading 'N'", 0);
    if (toks.back() != "C") throw ParseError("expected trailing 'C'", static_cast<int>(toks.size()) - 1);

    GaussCode code;
    for (std::size_t i = 1; i + 1 < toks.size(); ++i) {
        const std::string& t = toks[i];
        const int ti = static_cast<int>(i);
        Entry e;
        switch (t[0]) {
            case 'O': e.kind = Kind::Over; break;
            case 'U': e.kind = Kind::Under; break;
            case 'B': e.kind = Kind::Bond; break;
            case 'S': e.kind = Kind::Sheet; break;
            case 'A': e.kind = Kind::Helix; break;
            case 'N': throw ParseError("'N' may only appear first", ti);
            case 'C': throw ParseError("'C' may only appear last", ti);
            default: throw ParseError("unknown entry tag '" + t + "'", ti);
        }
        std::size_t pos = 1;
        auto label = detail::take_int(t, pos, /*allow_negative=*/false);
        if (!label || *label <= 0)
            throw ParseError("expected positive label in '" + t + "'", ti);
        e.label = static_cast<int>(*label);
        auto sign = detail::take_sign(t, pos);
        if (!sign) throw ParseError("expected sign in '" + t + "'", ti);
        e.sign = *sign;
        if (e.kind == Kind::Sheet) {
            if (pos >= t.size() || t[pos] != '_')
                throw ParseError("expected '_<index>' in sheet entry '" + t + "'", ti);
            ++pos;
            auto idx = detail::take_int(t, pos, /*allow_negative=*/true);
            if (!idx) throw ParseError("expected strand index in '" + t + "'", ti);
            e.strand_index = static_cast<int>(*idx);
        }
        if (pos != t.size())
            throw ParseError("trailing characters in '" + t + "'", ti);
        code.entries.push_back(e);
    }
    return code;
}

inline std::string serialize(const GaussCode& code) {
    std::ostringstream out;
    out << 'N';
    for (const Entry& e : code.entries) {
        out << ' ';
        switch (e.kind) {
            case Kind::Over: out << 'O'; break;
            case Kind::Under: out << 'U'; break;
            case Kind::Bond: out << 'B'; break;
            case Kind::Sheet: out << 'S'; break;
            case Kind::Helix: out << 'A'; break;
        }
        out << e.label << (e.sign > 0 ? '+' : '-');
        if (e.kind == Kind::Sheet) out << '_' << e.strand_index;
    }
    out << " C";
    return out.str();
}

// Relabels so that labels are 1,2,3,... in order of first appearance.
inline GaussCode renumber(GaussCode code) {
    std::unordered_map<int, int> map;
    for (Entry& e : code.entries) {
        auto it = map.find(e.label);
        if (it == map.end())
            it = map.emplace(e.label, static_cast<int>(map.size()) + 1).first;
        e.label = it->second;
    }
    return code;
}

inline ValidationReport validate(const GaussCode& code) {
    ValidationReport rep;
    auto fail = [&](const std::string& m) { rep.errors.push_back(m); };

    struct LabelInfo {
        Kind family;
        std::vector<const Entry*> occurrences;
    };
    std::unordered_map<int, LabelInfo> labels;
    std::vector<int> first_order;

    auto family_of = [](Kind k) {
        return (k == Kind::Over || k == Kind::Under) ? Kind::Over : k;
    };

    for (const Entry& e : code.entries) {
        if (e.label <= 0) fail("label must be positive");
        auto it = labels.find(e.label);
        if (it == labels.end()) {
            labels[e.label] = LabelInfo{family_of(e.kind), {&e}};
            first_order.push_back(e.label);
        } else {
            if (it->second.family != family_of(e.kind))
                fail("label " + std::to_string(e.label) + " used by multiple entry families");
            it->second.occurrences.push_back(&e);
        }
    }

    for (std::size_t i = 0; i < first_order.size(); ++i)
        if (first_order[i] != static_cast<int>(i) + 1) {
            fail("labels are not sequential by first appearance (saw " +
                 std::to_string(first_order[i]) + " at rank " + std::to_string(i + 1) + ")");
            break;
        }

    for (int lbl : first_order) {
        const LabelInfo& info = labels[lbl];
        const auto& occ = info.occurrences;
        const std::string L = std::to_string(lbl);
        switch (info.family) {
            case Kind::Over: { // crossing family (Over/Under)
                if (occ.size() != 2) {
                    fail("crossing " + L + " appears " + std::to_string(occ.size()) +
                         " times, expected 2");
                    break;
                }
                if (occ[0]->kind == occ[1]->kind)
                    fail("crossing " + L + " needs one Over and one Under passage");
                if (occ[0]->sign != occ[1]->sign)
                    fail("crossing " + L + " has mismatched signs");
                break;
            }
            case Kind::Bond: {
                if (occ.size() != 2) {
                    fail("bond " + L + " appears " + std::to_string(occ.size()) +
                         " times, expected 2");
                    break;
                }
                if (occ[0]->sign != +1)
                    fail("bond " + L + " first occurrence must have sign +");
                break;
            }
            case Kind::Sheet: {
                if (occ.size() < 2) {
                    fail("sheet " + L + " appears " + std::to_string(occ.size()) +
                         " times, expected at least 2");
                    break;
                }
                if (occ[0]->sign != +1 || occ[0]->strand_index != 0)
                    fail("sheet " + L + " first occurrence must be +, index 0");
                if (occ[1]->strand_index <= 0)
                    fail("sheet " + L + " second occurrence must have positive index");
                std::vector<int> idx;
                for (const Entry* e : occ) idx.push_back(e->strand_index);
                std::sort(idx.begin(), idx.end());
                bool distinct = std::adjacent_find(idx.begin(), idx.end()) == idx.end();
                if (!distinct) fail("sheet " + L + " has repeated strand indices");
                bool contiguous = distinct;
                for (std::size_t i = 0; contiguous && i + 1 < idx.size(); ++i)
                    contiguous = (idx[i + 1] == idx[i] + 1);
                if (distinct && !contiguous)
                    fail("sheet " + L + " strand indices are not contiguous");
                if (distinct && contiguous &&
                    !(idx.front() <= 0 && 0 <= idx.back()))
                    fail("sheet " + L + " strand indices must contain 0");
                break;
            }
            case Kind::Helix: {
                if (occ.size() != 1)
                    fail("helix " + L + " appears " + std::to_string(occ.size()) +
                         " times, expected 1");
                break;
            }
            default: break;
        }
    }
    return rep;
}

inline GaussCode parse_valid(const std::string& text) {
    GaussCode code = parse(text);
    ValidationReport rep = validate(code);
    if (!rep.ok()) throw MalformedCode(rep);
    return code;
}

// FNV-1a over the serialized form; used for rewrite traces.
inline std::uint64_t code_hash(const GaussCode& code) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : serialize(code)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace bondle
