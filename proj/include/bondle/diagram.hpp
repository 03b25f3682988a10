#pragma once
// Diagram semantics of a Gauss code: arcs and sites.
//
// Arcs are maximal strand segments; walking the chain from N to C, the arc
// index starts at 0 and increments after every Under passage and every
// Bond/Sheet occurrence (Over passages and Helix markers do not break arcs).
// Hence arc_count = #Under + #Bond occurrences + #Sheet occurrences + 1.

#include <stdexcept>
#include <vector>

#include "gauss_code.hpp"

namespace bondle {

struct ClassicalSite {
    int label = 0;
    int sign = +1;
    int over_arc = -1;
    int under_in = -1;
    int under_out = -1;
};

struct BondSite {
    int label = 0;
    bool parallel = true; // second occurrence sign + => parallel
    int first_in = -1, first_out = -1;   // first-traversed passage
    int second_in = -1, second_out = -1; // second-traversed passage
};

struct SheetOccurrence {
    int arc_in = -1, arc_out = -1;
    int sign = +1;
    int strand_index = 0;
};

struct SheetSite {
    int label = 0;
    std::vector<SheetOccurrence> occurrences; // traversal order
};

struct HelixSite {
    int label = 0;
    int sign = +1;
    int arc = -1;
};

struct Diagram {
    int arc_count = 1;
    std::vector<ClassicalSite> crossings;
    std::vector<BondSite> bonds;
    std::vector<SheetSite> sheets;
    std::vector<HelixSite> helices;

    std::size_t site_count() const {
        return crossings.size() + bonds.size() + sheets.size() + helices.size();
    }
};

inline Diagram build_diagram(const GaussCode& code) {
    {
        ValidationReport rep = validate(code);
        if (!rep.ok()) throw MalformedCode(rep);
    }
    Diagram d;
    // label -> index into the per-family site vector
    std::unordered_map<int, std::size_t> site_of;
    int arc = 0;
    for (const Entry& e : code.entries) {
        switch (e.kind) {
            case Kind::Over: {
                auto it = site_of.find(e.label);
                if (it == site_of.end()) {
                    site_of[e.label] = d.crossings.size();
                    d.crossings.push_back({e.label, e.sign, arc, -1, -1});
                } else {
                    d.crossings[it->second].over_arc = arc;
                }
                break;
            }
            case Kind::Under: {
                auto it = site_of.find(e.label);
                if (it == site_of.end()) {
                    site_of[e.label] = d.crossings.size();
                    d.crossings.push_back({e.label, e.sign, -1, arc, arc + 1});
                } else {
                    d.crossings[it->second].under_in = arc;
                    d.crossings[it->second].under_out = arc + 1;
                }
                ++arc;
                break;
            }
            case Kind::Bond: {
                auto it = site_of.find(e.label);
                if (it == site_of.end()) {
                    site_of[e.label] = d.bonds.size();
                    d.bonds.push_back({e.label, true, arc, arc + 1, -1, -1});
                } else {
                    BondSite& b = d.bonds[it->second];
                    b.second_in = arc;
                    b.second_out = arc + 1;
                    b.parallel = (e.sign > 0);
                }
                ++arc;
                break;
            }
            case Kind::Sheet: {
                auto it = site_of.find(e.label);
                if (it == site_of.end()) {
                    site_of[e.label] = d.sheets.size();
                    d.sheets.push_back({e.label, {}});
                    it = site_of.find(e.label);
                }
                d.sheets[it->second].occurrences.push_back(
                    {arc, arc + 1, e.sign, e.strand_index});
                ++arc;
                break;
            }
            case Kind::Helix: {
                d.helices.push_back({e.label, e.sign, arc});
                break;
            }
        }
    }
    d.arc_count = arc + 1;
    return d;
}

} // namespace bondle
