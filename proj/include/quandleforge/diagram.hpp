#pragma once

// Classical link diagrams as combinatorial semi-arc structures.
//
// Semi-arcs are the pieces obtained by dividing the diagram's over-arcs at
// every crossing, so each crossing consumes exactly two transitions of the
// component cyclic orders: the over pair (over_in -> over_out) and the under
// pair (under_in -> under_out). Components with no crossings own no semi-arcs
// and are tracked by count only.
//
// Colorings are stored as one canonical representative per basic-inversion
// class: every semi-arc carries the reference normal orientation (component
// tangent rotated +90 degrees). Under that convention the crossing
// conditions become
//   color(over_in) = color(over_out)                                   and
//   color(under_out) = color(under_in)^y        at a positive crossing,
//   color(under_out) = color(under_in)^rho(y)   at a negative crossing,
// where y is the over color. Each crossingless component contributes the
// choice of a rho-orbit.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quandleforge/errors.hpp"
#include "quandleforge/quandle.hpp"

namespace qf {

struct Crossing {
    int over_in = 0;
    int over_out = 0;
    int under_in = 0;
    int under_out = 0;
    int sign = 1;  // +1 or -1

    bool operator==(const Crossing&) const = default;
};

class LinkDiagram {
public:
    int semi_arc_count() const { return semi_arcs_; }
    const std::vector<std::vector<int>>& components() const { return components_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossingless_components() const { return crossingless_; }

    // successor in the owning component's cyclic order
    int succ(int s) const { return succ_[static_cast<std::size_t>(s)]; }

    bool operator==(const LinkDiagram& o) const {
        return semi_arcs_ == o.semi_arcs_ && components_ == o.components_ &&
               crossings_ == o.crossings_ && crossingless_ == o.crossingless_;
    }

    friend LinkDiagram make_link_diagram(int, std::vector<std::vector<int>>, std::vector<Crossing>,
                                         int);

private:
    LinkDiagram() = default;

    int semi_arcs_ = 0;
    std::vector<std::vector<int>> components_;
    std::vector<Crossing> crossings_;
    int crossingless_ = 0;
    std::vector<int> succ_;
};

// Validates the combinatorial consistency of the data: components partition
// the semi-arcs, every crossing pair is adjacent in its component, and every
// transition is consumed by exactly one crossing passage. Planarity is not
// checked.
inline LinkDiagram make_link_diagram(int semi_arcs, std::vector<std::vector<int>> components,
                                     std::vector<Crossing> crossings, int crossingless) {
    if (semi_arcs < 0) throw input_error("diagram: semi_arcs must be >= 0");
    if (crossingless < 0) throw input_error("diagram: crossingless must be >= 0");

    std::vector<int> owner(static_cast<std::size_t>(semi_arcs), -1);
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        if (components[ci].empty()) {
            std::ostringstream os;
            os << "diagram: component " << ci << " is empty";
            throw input_error(os.str());
        }
        for (int s : components[ci]) {
            if (s < 0 || s >= semi_arcs) {
                std::ostringstream os;
                os << "diagram: component " << ci << " references semi-arc " << s
                   << " outside 0.." << semi_arcs - 1;
                throw input_error(os.str());
            }
            if (owner[static_cast<std::size_t>(s)] >= 0) {
                std::ostringstream os;
                os << "diagram: duplicate semi-arc id " << s << " in components";
                throw input_error(os.str());
            }
            owner[static_cast<std::size_t>(s)] = static_cast<int>(ci);
        }
    }
    for (int s = 0; s < semi_arcs; ++s)
        if (owner[static_cast<std::size_t>(s)] < 0) {
            std::ostringstream os;
            os << "diagram: dangling semi-arc " << s << " (not in any component)";
            throw input_error(os.str());
        }

    std::vector<int> succ(static_cast<std::size_t>(semi_arcs), -1);
    for (const auto& comp : components)
        for (std::size_t i = 0; i < comp.size(); ++i)
            succ[static_cast<std::size_t>(comp[i])] = comp[(i + 1) % comp.size()];

    // each semi-arc's outgoing transition must be consumed by exactly one
    // crossing passage
    std::vector<int> consumed_by(static_cast<std::size_t>(semi_arcs), -1);
    auto consume = [&](int s, int next, std::size_t ci, const char* kind) {
        if (s < 0 || s >= semi_arcs || next < 0 || next >= semi_arcs) {
            std::ostringstream os;
            os << "diagram: crossing " << ci << " references undefined semi-arc id";
            throw input_error(os.str());
        }
        if (succ[static_cast<std::size_t>(s)] != next) {
            std::ostringstream os;
            os << "diagram: crossing " << ci << ": " << kind << " pair (" << s << "," << next
               << ") is not adjacent in its component";
            throw input_error(os.str());
        }
        if (consumed_by[static_cast<std::size_t>(s)] >= 0) {
            std::ostringstream os;
            os << "diagram: transition out of semi-arc " << s << " used by crossings "
               << consumed_by[static_cast<std::size_t>(s)] << " and " << ci;
            throw input_error(os.str());
        }
        consumed_by[static_cast<std::size_t>(s)] = static_cast<int>(ci);
    };
    for (std::size_t ci = 0; ci < crossings.size(); ++ci) {
        const Crossing& c = crossings[ci];
        if (c.sign != 1 && c.sign != -1) {
            std::ostringstream os;
            os << "diagram: crossing " << ci << " has sign " << c.sign << ", expected +1 or -1";
            throw input_error(os.str());
        }
        consume(c.over_in, c.over_out, ci, "over");
        consume(c.under_in, c.under_out, ci, "under");
    }
    for (int s = 0; s < semi_arcs; ++s)
        if (consumed_by[static_cast<std::size_t>(s)] < 0) {
            std::ostringstream os;
            os << "diagram: transition out of semi-arc " << s
               << " is not consumed by any crossing";
            throw input_error(os.str());
        }

    LinkDiagram d;
    d.semi_arcs_ = semi_arcs;
    d.components_ = std::move(components);
    d.crossings_ = std::move(crossings);
    d.crossingless_ = crossingless;
    d.succ_ = std::move(succ);
    return d;
}

// One canonical representative of a basic-inversion class: semi-arc colors
// under reference normals plus a rho-orbit representative per crossingless
// component.
struct Coloring {
    std::vector<Element> colors;
    std::vector<Element> crossingless_colors;

    bool operator==(const Coloring&) const = default;
    bool operator<(const Coloring& o) const {
        if (colors != o.colors) return colors < o.colors;
        return crossingless_colors < o.crossingless_colors;
    }
};

// Sorted minimal representatives of the rho-orbits of X.
inline std::vector<Element> rho_orbit_representatives(const GoodInvolution& rho) {
    std::vector<Element> reps;
    for (Element x = 0; x < rho.size(); ++x)
        if (x <= rho(x)) reps.push_back(x);
    return reps;
}

struct ColoringCheck {
    bool ok = true;
    std::string witness;  // first failing crossing condition, if any
};

inline ColoringCheck verify_coloring(const LinkDiagram& d, const SymmetricQuandle& sq,
                                     const std::vector<Element>& colors) {
    const Quandle& q = sq.quandle;
    if (static_cast<int>(colors.size()) != d.semi_arc_count())
        throw input_error("coloring: colors array length does not match semi-arc count");
    for (Element c : colors)
        if (c < 0 || c >= q.size()) throw input_error("coloring: color out of range");

    for (std::size_t ci = 0; ci < d.crossings().size(); ++ci) {
        const Crossing& c = d.crossings()[ci];
        const Element y = colors[static_cast<std::size_t>(c.over_in)];
        if (colors[static_cast<std::size_t>(c.over_out)] != y) {
            std::ostringstream os;
            os << "crossing " << ci << ": over colors differ ("
               << colors[static_cast<std::size_t>(c.over_in)] << " vs "
               << colors[static_cast<std::size_t>(c.over_out)] << ")";
            return {false, os.str()};
        }
        const Element yy = c.sign > 0 ? y : sq.rho(y);
        const Element expect = q.op(colors[static_cast<std::size_t>(c.under_in)], yy);
        if (colors[static_cast<std::size_t>(c.under_out)] != expect) {
            std::ostringstream os;
            os << "crossing " << ci << ": under condition fails ("
               << colors[static_cast<std::size_t>(c.under_in)] << "^" << yy << " = " << expect
               << " != " << colors[static_cast<std::size_t>(c.under_out)] << ")";
            return {false, os.str()};
        }
    }
    return {};
}

namespace detail {

// Constraint propagation plus branching over the semi-arc colors. Seeding
// one semi-arc per component and propagating covers the common case;
// branching on stalled semi-arcs keeps the search complete on inputs whose
// dependency structure is circular.
class ColoringSearch {
public:
    ColoringSearch(const LinkDiagram& d, const SymmetricQuandle& sq) : d_(d), sq_(sq) {}

    template <typename Emit>
    void run(Emit&& emit) {
        std::vector<Element> colors(static_cast<std::size_t>(d_.semi_arc_count()), -1);
        dfs(colors, emit);
    }

private:
    template <typename Emit>
    void dfs(std::vector<Element>& colors, Emit& emit) {
        int s = -1;
        for (std::size_t i = 0; i < colors.size(); ++i)
            if (colors[i] < 0) {
                s = static_cast<int>(i);
                break;
            }
        if (s < 0) {
            if (verify_coloring(d_, sq_, colors).ok) emit(colors);
            return;
        }
        for (Element v = 0; v < sq_.quandle.size(); ++v) {
            std::vector<Element> branch = colors;
            if (propagate(branch, s, v)) dfs(branch, emit);
        }
    }

    // assigns colors[s] = v and floods all forced consequences; false on conflict
    bool propagate(std::vector<Element>& colors, int s0, Element v0) {
        std::vector<int> work;
        if (!assign(colors, s0, v0, work)) return false;
        const Quandle& q = sq_.quandle;
        while (!work.empty()) {
            int s = work.back();
            work.pop_back();
            for (const Crossing& c : d_.crossings()) {
                if (c.over_in == s || c.over_out == s) {
                    const Element y = colors[static_cast<std::size_t>(
                        colors[static_cast<std::size_t>(c.over_in)] >= 0 ? c.over_in : c.over_out)];
                    if (!assign(colors, c.over_in, y, work)) return false;
                    if (!assign(colors, c.over_out, y, work)) return false;
                }
                // under colors propagate both ways once the over color is known
                if (c.over_in == s || c.over_out == s || c.under_in == s || c.under_out == s) {
                    const Element y = colors[static_cast<std::size_t>(c.over_in)];
                    if (y < 0) continue;
                    const Element yy = c.sign > 0 ? y : sq_.rho(y);
                    const Element in = colors[static_cast<std::size_t>(c.under_in)];
                    const Element out = colors[static_cast<std::size_t>(c.under_out)];
                    if (in >= 0 && !assign(colors, c.under_out, q.op(in, yy), work)) return false;
                    if (out >= 0 && !assign(colors, c.under_in, q.inverse_op(out, yy), work))
                        return false;
                }
            }
        }
        return true;
    }

    static bool assign(std::vector<Element>& colors, int s, Element v, std::vector<int>& work) {
        Element& slot = colors[static_cast<std::size_t>(s)];
        if (slot == v) return true;
        if (slot >= 0) return false;
        slot = v;
        work.push_back(s);
        return true;
    }

    const LinkDiagram& d_;
    const SymmetricQuandle& sq_;
};

}  // namespace detail

// All colorings, one canonical representative per basic-inversion class,
// ordered lexicographically by the colors array (then by the crossingless
// orbit choices).
inline std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const SymmetricQuandle& sq) {
    std::vector<std::vector<Element>> constrained;
    detail::ColoringSearch(d, sq).run(
        [&](const std::vector<Element>& colors) { constrained.push_back(colors); });
    std::sort(constrained.begin(), constrained.end());

    const std::vector<Element> reps = rho_orbit_representatives(sq.rho);
    std::vector<std::vector<Element>> orbit_choices{{}};
    for (int i = 0; i < d.crossingless_components(); ++i) {
        std::vector<std::vector<Element>> next;
        for (const auto& prefix : orbit_choices)
            for (Element r : reps) {
                auto ext = prefix;
                ext.push_back(r);
                next.push_back(std::move(ext));
            }
        orbit_choices = std::move(next);
    }

    std::vector<Coloring> out;
    out.reserve(constrained.size() * orbit_choices.size());
    for (const auto& colors : constrained)
        for (const auto& cl : orbit_choices) out.push_back({colors, cl});
    return out;
}

// Number of colorings without materializing the list.
inline std::uint64_t count_colorings(const LinkDiagram& d, const SymmetricQuandle& sq) {
    std::uint64_t constrained = 0;
    detail::ColoringSearch(d, sq).run([&](const std::vector<Element>&) { ++constrained; });
    const std::uint64_t orbits = rho_orbit_representatives(sq.rho).size();
    for (int i = 0; i < d.crossingless_components(); ++i) constrained *= orbits;
    return constrained;
}

}  // namespace qf
