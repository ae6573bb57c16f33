#pragma once

// Motion-picture event model for surface-links: Morse counts per component
// plus an ordered list of signed, colored triple-point events. The weight of
// a movie under a symmetric 3-cocycle is the signed sum of the cocycle over
// the triple-point colors; with an admissible cocycle the norm of the weight
// bounds the triple point number from below.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quandleforge/abelian.hpp"
#include "quandleforge/cocycle.hpp"
#include "quandleforge/errors.hpp"
#include "quandleforge/quandle.hpp"

namespace qf {

struct TriplePointEvent {
    int epsilon = 1;      // +1 or -1
    Element bottom = 0;   // x
    Element middle = 0;   // y
    Element top = 0;      // z

    bool operator==(const TriplePointEvent&) const = default;
};

// A Reidemeister III move between stills, with the strand labels it derives.
struct R3Record {
    Element x = 0, y = 0, z = 0;
    Element xy = 0;   // x^y
    Element xz = 0;   // x^z
    Element yz = 0;   // y^z
    Element xyz = 0;  // (x^y)^z
    int epsilon = 1;

    bool operator==(const R3Record&) const = default;
};

struct R3Check {
    bool ok = true;
    std::string witness;
};

inline R3Check verify_r3(const R3Record& rec, const Quandle& q) {
    auto expect = [&](const char* name, Element got, Element want) -> std::optional<std::string> {
        if (got == want) return std::nullopt;
        std::ostringstream os;
        os << name << " recorded as " << got << " but table gives " << want;
        return os.str();
    };
    for (auto&& w : {expect("x^y", rec.xy, q.op(rec.x, rec.y)),
                     expect("x^z", rec.xz, q.op(rec.x, rec.z)),
                     expect("y^z", rec.yz, q.op(rec.y, rec.z)),
                     expect("(x^y)^z", rec.xyz, q.op(q.op(rec.x, rec.y), rec.z))})
        if (w) return {false, *w};
    return {};
}

struct ComponentSummary {
    std::string name;
    bool orientable = true;
    int births = 0;   // minima
    int deaths = 0;   // maxima
    int saddles = 0;

    bool operator==(const ComponentSummary&) const = default;
};

struct EulerGenus {
    int euler = 0;
    int genus = 0;
};

// euler = births + deaths - saddles; orientable genus = (2 - euler)/2,
// non-orientable genus = 2 - euler.
inline EulerGenus euler_and_genus(const ComponentSummary& c) {
    if (c.births < 1 || c.deaths < 1)
        throw constraint_error("component '" + c.name +
                               "': a closed surface needs births >= 1 and deaths >= 1");
    const int euler = c.births + c.deaths - c.saddles;
    if (euler > 2) {
        std::ostringstream os;
        os << "component '" << c.name << "': euler characteristic " << euler << " exceeds 2";
        throw constraint_error(os.str());
    }
    if (c.orientable) {
        if ((2 - euler) % 2 != 0) {
            std::ostringstream os;
            os << "component '" << c.name << "': orientable surface with odd euler "
               << "characteristic " << euler;
            throw constraint_error(os.str());
        }
        return {euler, (2 - euler) / 2};
    }
    return {euler, 2 - euler};
}

struct Movie {
    SymmetricQuandle sq;
    std::vector<ComponentSummary> components;
    std::vector<TriplePointEvent> triples;
    std::optional<std::vector<R3Record>> r3_details;  // aligned with triples when present
};

// Checks the Movie invariants: component summaries admit an euler/genus
// reading, and r3_details (when present) align with the triple events and
// verify against the quandle table.
inline void validate_movie(const Movie& m) {
    for (const TriplePointEvent& t : m.triples) {
        if (t.epsilon != 1 && t.epsilon != -1)
            throw input_error("movie: triple point sign must be +1 or -1");
        for (Element e : {t.bottom, t.middle, t.top})
            if (e < 0 || e >= m.sq.quandle.size())
                throw input_error("movie: triple point color out of range");
    }
    for (const ComponentSummary& c : m.components) euler_and_genus(c);
    if (m.r3_details) {
        if (m.r3_details->size() != m.triples.size())
            throw constraint_error("movie: r3_details length does not match triple events");
        for (std::size_t i = 0; i < m.triples.size(); ++i) {
            const R3Record& r = (*m.r3_details)[i];
            const TriplePointEvent& t = m.triples[i];
            if (r.x != t.bottom || r.y != t.middle || r.z != t.top || r.epsilon != t.epsilon) {
                std::ostringstream os;
                os << "movie: r3_details[" << i << "] does not match its triple point event";
                throw constraint_error(os.str());
            }
            R3Check c = verify_r3(r, m.sq.quandle);
            if (!c.ok) {
                std::ostringstream os;
                os << "movie: r3_details[" << i << "]: " << c.witness;
                throw constraint_error(os.str());
            }
        }
    }
}

// Signed weight sum over all triple points, in A_{s,t}.
inline AbelianElement weight(const Movie& m, const Cocycle3& phi) {
    if (!(m.sq == phi.sq()))
        throw input_error("weight: movie and cocycle use different symmetric quandles");
    AbelianElement w = AbelianElement::zero(phi.signature());
    for (const TriplePointEvent& t : m.triples) {
        AbelianElement v = phi.at(t.bottom, t.middle, t.top);
        w += t.epsilon > 0 ? v : -v;
    }
    return w;
}

// Lemma lower bound on the triple point number: the norm of the weight,
// applicable only when the cocycle takes values in {0, p_i, +-q_j}.
inline std::optional<std::int64_t> lower_bound(const AbelianElement& w, const Cocycle3& phi) {
    if (w.signature() != phi.signature())
        throw input_error("lower_bound: weight and cocycle signatures differ");
    if (!check_lemma_admissible(phi).admissible) return std::nullopt;
    return bound_norm(w);
}

struct FamilyParams {
    int k = 0;                // orientable companion components F_i
    int m = 0;                // non-orientable components F'_i
    std::vector<int> g;       // genus of F_i, length k
    std::vector<int> gprime;  // genus of F'_i, length m; each even and >= 2
};

inline void validate_family_params(const FamilyParams& p) {
    if (p.k < 0 || p.m < 0) throw constraint_error("family: k and m must be >= 0");
    if (static_cast<int>(p.g.size()) != p.k)
        throw constraint_error("family: g must list exactly k genera");
    if (static_cast<int>(p.gprime.size()) != p.m)
        throw constraint_error("family: g' must list exactly m genera");
    for (int gi : p.g)
        if (gi < 0) throw constraint_error("family: g entries must be >= 0");
    for (int gp : p.gprime)
        if (gp < 2 || gp % 2 != 0) throw constraint_error("family: g' must be even and >= 2");
}

// The k+m+1 component family over (P_3, rho): G with 2(k+m) saddles, F_i with
// 2 g_i saddles, F'_i with g'_i/2 deaths and 3 g'_i/2 - 1 saddles. The triple
// points come in sum(g'_i)/2 negative events colored (2,0,2) followed by
// sum(g'_i)/2 positive events colored (1,0,2).
inline Movie generate_family(const FamilyParams& p) {
    validate_family_params(p);
    Movie m;
    m.sq = make_p3_symmetric();

    m.components.push_back({"G", true, 1, 1, 2 * (p.k + p.m)});
    for (int i = 0; i < p.k; ++i) {
        std::ostringstream name;
        name << "F" << i + 1;
        m.components.push_back({name.str(), true, 1, 1, 2 * p.g[static_cast<std::size_t>(i)]});
    }
    for (int i = 0; i < p.m; ++i) {
        std::ostringstream name;
        name << "F'" << i + 1;
        const int gp = p.gprime[static_cast<std::size_t>(i)];
        m.components.push_back({name.str(), false, 1, gp / 2, 3 * gp / 2 - 1});
    }

    int half_total = 0;
    for (int gp : p.gprime) half_total += gp / 2;

    const Quandle& q = m.sq.quandle;
    std::vector<R3Record> records;
    auto add_triples = [&](int count, int eps, Element x, Element y, Element z) {
        for (int i = 0; i < count; ++i) {
            m.triples.push_back({eps, x, y, z});
            records.push_back({x, y, z, q.op(x, y), q.op(x, z), q.op(y, z),
                               q.op(q.op(x, y), z), eps});
        }
    };
    add_triples(half_total, -1, 2, 0, 2);
    add_triples(half_total, +1, 1, 0, 2);
    m.r3_details = std::move(records);

    validate_movie(m);
    return m;
}

struct FamilyReport {
    FamilyParams params;
    struct Row {
        ComponentSummary component;
        int euler = 0;
        int genus = 0;
    };
    std::vector<Row> rows;
    std::int64_t triple_count = 0;
    AbelianElement theta_weight;
    std::int64_t bound = 0;
    std::int64_t t = 0;  // triple point number of the family member
};

// Generates the family, evaluates the theta-weight and the lemma bound, and
// checks that the bound meets the diagram's triple count, pinning t(F).
inline FamilyReport family_report(const FamilyParams& p) {
    Movie movie = generate_family(p);
    Cocycle3 theta = make_theta();

    FamilyReport report;
    report.params = p;
    for (const ComponentSummary& c : movie.components) {
        EulerGenus eg = euler_and_genus(c);
        report.rows.push_back({c, eg.euler, eg.genus});
    }
    report.triple_count = static_cast<std::int64_t>(movie.triples.size());
    report.theta_weight = weight(movie, theta);
    std::optional<std::int64_t> bound = lower_bound(report.theta_weight, theta);
    if (!bound)
        throw constraint_error("family report: theta unexpectedly fails lemma admissibility");
    report.bound = *bound;
    if (report.bound != report.triple_count) {
        std::ostringstream os;
        os << "family report: lower bound " << report.bound << " does not meet triple count "
           << report.triple_count;
        throw constraint_error(os.str());
    }
    report.t = report.bound;
    return report;
}

}  // namespace qf
