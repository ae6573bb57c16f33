#pragma once

// JSON file formats:
//   quandle  {"n": 3, "table": [[...],...], "rho": [0,2,1]}          (rho optional)
//   cocycle  {"signature": {"s":1,"t":1},
//             "entries": [{"triple":[a,b,c], "alphas":[...], "betas":[...]}, ...]}
//   diagram  {"semi_arcs": 6, "components": [[...]],
//             "crossings": [{"over":[in,out], "under_in":..,
//                            "under_out":.., "sign":+-1}, ...], "crossingless": 0}
//   movie    {"quandle": <path or inline object>,
//             "components": [{"name":..,"orientable":..,"births":..,
//                             "deaths":..,"saddles":..}, ...],
//             "triples": [{"epsilon":+-1, "color":[x,y,z]}, ...]}
// Absent cocycle triples are zero.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quandleforge/abelian.hpp"
#include "quandleforge/cocycle.hpp"
#include "quandleforge/diagram.hpp"
#include "quandleforge/errors.hpp"
#include "quandleforge/movie.hpp"
#include "quandleforge/quandle.hpp"

namespace qf {

using json = nlohmann::json;

inline json parse_json_text(std::string_view text, const std::string& context) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(context + ": " + e.what());
    }
}

inline json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path.string());
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path.string());
    out << text;
}

// --- quandle ----------------------------------------------------------------

struct QuandleFile {
    Table table;
    std::optional<std::vector<Element>> rho;
};

inline QuandleFile parse_quandle_json(const json& j) {
    try {
        QuandleFile f;
        const int n = j.at("n").get<int>();
        f.table = j.at("table").get<Table>();
        if (static_cast<int>(f.table.size()) != n)
            throw input_error("quandle file: table size does not match n");
        if (j.contains("rho")) f.rho = j.at("rho").get<std::vector<Element>>();
        return f;
    } catch (const json::exception& e) {
        throw input_error(std::string("quandle file: ") + e.what());
    }
}

inline json quandle_to_json(const Quandle& q, const std::optional<std::vector<Element>>& rho) {
    json j;
    j["n"] = q.size();
    j["table"] = q.table();
    if (rho) j["rho"] = *rho;
    return j;
}

// Quandle plus mandatory rho, validated. Used wherever a symmetric quandle
// context is required.
inline SymmetricQuandle symmetric_quandle_from_json(const json& j, const std::string& context) {
    QuandleFile f = parse_quandle_json(j);
    if (!f.rho) throw input_error(context + ": quandle file must include \"rho\"");
    QuandleCheck qc = verify_quandle(f.table);
    if (!qc.ok())
        throw constraint_error(context + ": " + qc.violations.front().detail);
    InvolutionCheck ic = verify_good_involution(*qc.quandle, *f.rho);
    if (!ic.ok())
        throw constraint_error(context + ": " + ic.violations.front().detail);
    return SymmetricQuandle{*std::move(qc.quandle), *std::move(ic.involution)};
}

// --- cocycle ----------------------------------------------------------------

struct CocycleFile {
    AbelianSignature signature;
    std::map<Triple, AbelianElement> values;
};

inline CocycleFile parse_cocycle_json(const json& j) {
    try {
        CocycleFile f;
        f.signature.s = j.at("signature").at("s").get<int>();
        f.signature.t = j.at("signature").at("t").get<int>();
        for (const json& e : j.at("entries")) {
            const auto triple = e.at("triple").get<std::vector<Element>>();
            if (triple.size() != 3) throw input_error("cocycle file: triple must have 3 entries");
            AbelianElement v(f.signature, e.at("alphas").get<std::vector<int>>(),
                             e.at("betas").get<std::vector<std::int64_t>>());
            f.values[Triple{triple[0], triple[1], triple[2]}] = std::move(v);
        }
        return f;
    } catch (const json::exception& e) {
        throw input_error(std::string("cocycle file: ") + e.what());
    }
}

inline json abelian_to_json(const AbelianElement& v) {
    return json{{"alphas", v.alphas()}, {"betas", v.betas()}};
}

inline json cocycle_to_json(const Cocycle3& phi) {
    json entries = json::array();
    for (const auto& [t, v] : phi.values()) {
        json e;
        e["triple"] = t;
        e["alphas"] = v.alphas();
        e["betas"] = v.betas();
        entries.push_back(e);
    }
    return json{{"signature", {{"s", phi.signature().s}, {"t", phi.signature().t}}},
                {"entries", entries}};
}

// --- link diagram -------------------------------------------------------------

inline LinkDiagram diagram_from_json(const json& j) {
    try {
        const int semi_arcs = j.at("semi_arcs").get<int>();
        auto components = j.at("components").get<std::vector<std::vector<int>>>();
        std::vector<Crossing> crossings;
        for (const json& c : j.at("crossings")) {
            const auto over = c.at("over").get<std::vector<int>>();
            if (over.size() != 2)
                throw input_error("diagram file: \"over\" must list [over_in, over_out]");
            crossings.push_back({over[0], over[1], c.at("under_in").get<int>(),
                                 c.at("under_out").get<int>(), c.at("sign").get<int>()});
        }
        const int crossingless = j.value("crossingless", 0);
        return make_link_diagram(semi_arcs, std::move(components), std::move(crossings),
                                 crossingless);
    } catch (const json::exception& e) {
        throw input_error(std::string("diagram file: ") + e.what());
    }
}

inline LinkDiagram parse_diagram(std::string_view text) {
    return diagram_from_json(parse_json_text(text, "diagram"));
}

inline json diagram_to_json(const LinkDiagram& d) {
    json crossings = json::array();
    for (const Crossing& c : d.crossings())
        crossings.push_back({{"over", {c.over_in, c.over_out}},
                             {"under_in", c.under_in},
                             {"under_out", c.under_out},
                             {"sign", c.sign}});
    return json{{"semi_arcs", d.semi_arc_count()},
                {"components", d.components()},
                {"crossings", crossings},
                {"crossingless", d.crossingless_components()}};
}

// --- movie --------------------------------------------------------------------

// `load_ref` resolves a quandle path reference to its parsed JSON; inline
// quandle objects are used as-is.
inline Movie movie_from_json(const json& j,
                             const std::function<json(const std::string&)>& load_ref) {
    try {
        Movie m;
        const json& qj = j.at("quandle");
        m.sq = symmetric_quandle_from_json(qj.is_string() ? load_ref(qj.get<std::string>()) : qj,
                                           "movie quandle");
        for (const json& c : j.at("components"))
            m.components.push_back({c.at("name").get<std::string>(),
                                    c.at("orientable").get<bool>(), c.at("births").get<int>(),
                                    c.at("deaths").get<int>(), c.at("saddles").get<int>()});
        for (const json& t : j.at("triples")) {
            const auto color = t.at("color").get<std::vector<Element>>();
            if (color.size() != 3)
                throw input_error("movie file: triple color must have 3 entries");
            m.triples.push_back({t.at("epsilon").get<int>(), color[0], color[1], color[2]});
        }
        validate_movie(m);
        return m;
    } catch (const json::exception& e) {
        throw input_error(std::string("movie file: ") + e.what());
    }
}

inline Movie movie_from_json(const json& j, const std::filesystem::path& base_dir) {
    return movie_from_json(j, [&](const std::string& ref) {
        std::filesystem::path p(ref);
        if (p.is_relative()) p = base_dir / p;
        return load_json_file(p);
    });
}

inline json movie_to_json(const Movie& m, const std::optional<std::vector<Element>>& rho) {
    json components = json::array();
    for (const ComponentSummary& c : m.components)
        components.push_back({{"name", c.name},
                              {"orientable", c.orientable},
                              {"births", c.births},
                              {"deaths", c.deaths},
                              {"saddles", c.saddles}});
    json triples = json::array();
    for (const TriplePointEvent& t : m.triples)
        triples.push_back({{"epsilon", t.epsilon}, {"color", {t.bottom, t.middle, t.top}}});
    return json{{"quandle", quandle_to_json(m.sq.quandle, rho)},
                {"components", components},
                {"triples", triples}};
}

inline json movie_to_json(const Movie& m) {
    return movie_to_json(m, m.sq.rho.perm());
}

}  // namespace qf
