// qf: quandle / cocycle / coloring / movie-weight command line front end.
//
// Exit status: 0 success, 1 domain violation (axiom, cocycle, coloring or
// family constraint failure), 2 input or parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quandleforge/cocycle.hpp"
#include "quandleforge/cocycle_space.hpp"
#include "quandleforge/diagram.hpp"
#include "quandleforge/io.hpp"
#include "quandleforge/movie.hpp"
#include "quandleforge/quandle.hpp"

namespace fs = std::filesystem;

#ifndef QF_DEFAULT_ASSETS
#define QF_DEFAULT_ASSETS ""
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct RunConfig {
    bool machine_json = false;
    std::string output_path;  // empty = stdout
    int verbosity = 0;
};

// Literal path first, then $QF_ASSETS, then the compiled-in asset directory.
fs::path resolve_input(const std::string& arg) {
    fs::path p(arg);
    if (fs::exists(p)) return p;
    if (const char* env = std::getenv("QF_ASSETS")) {
        fs::path q = fs::path(env) / p;
        if (fs::exists(q)) return q;
    }
    fs::path d = fs::path(QF_DEFAULT_ASSETS) / p;
    if (!std::string(QF_DEFAULT_ASSETS).empty() && fs::exists(d)) return d;
    throw qf::input_error("file not found: " + arg);
}

void emit(const RunConfig& cfg, const std::string& human, const qf::json& machine) {
    std::string text = cfg.machine_json ? machine.dump(2) + "\n" : human;
    if (cfg.output_path.empty())
        std::cout << text;
    else
        qf::write_text_file(cfg.output_path, text);
}

qf::SymmetricQuandle load_symmetric_quandle(const std::string& arg) {
    return qf::symmetric_quandle_from_json(qf::load_json_file(resolve_input(arg)),
                                           "quandle " + arg);
}

// --- quandle ----------------------------------------------------------------

int cmd_quandle_verify(const RunConfig& cfg, const std::string& file) {
    qf::QuandleFile qfile = qf::parse_quandle_json(qf::load_json_file(resolve_input(file)));
    qf::QuandleCheck qc = qf::verify_quandle(qfile.table);

    qf::json out;
    out["command"] = "quandle verify";
    out["n"] = static_cast<int>(qfile.table.size());
    out["valid"] = qc.ok();
    out["violations"] = qf::json::array();
    for (const auto& v : qc.violations)
        out["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});

    std::ostringstream human;
    bool ok = qc.ok();
    human << (ok ? "valid quandle" : "INVALID quandle");
    if (!ok)
        for (const auto& v : qc.violations) human << "\n  " << v.detail;

    out["involution"] = {{"present", qfile.rho.has_value()}};
    if (qfile.rho && qc.ok()) {
        qf::InvolutionCheck ic = qf::verify_good_involution(*qc.quandle, *qfile.rho);
        out["involution"]["valid"] = ic.ok();
        out["involution"]["rho"] = *qfile.rho;
        out["involution"]["violations"] = qf::json::array();
        for (const auto& v : ic.violations)
            out["involution"]["violations"].push_back(
                {{"condition", v.condition}, {"witness", v.witness}, {"detail", v.detail}});
        human << (ic.ok() ? "; good involution valid" : "; involution NOT good");
        if (!ic.ok())
            for (const auto& v : ic.violations) human << "\n  " << v.detail;
        ok = ok && ic.ok();
    }
    human << "\n";
    if (cfg.verbosity > 0 && qc.ok()) {
        int n = static_cast<int>(qfile.table.size());
        human << "checks: axiom (i) " << n << ", axiom (ii) " << n * n << ", axiom (iii) "
              << n * n * n << "\n";
    }
    emit(cfg, human.str(), out);
    return ok ? kExitOk : kExitDomain;
}

int cmd_quandle_involutions(const RunConfig& cfg, const std::string& file) {
    qf::QuandleFile qfile = qf::parse_quandle_json(qf::load_json_file(resolve_input(file)));
    qf::QuandleCheck qc = qf::verify_quandle(qfile.table);
    if (!qc.ok()) {
        std::ostringstream human;
        human << "INVALID quandle\n";
        for (const auto& v : qc.violations) human << "  " << v.detail << "\n";
        qf::json out{{"command", "quandle involutions"}, {"valid", false}};
        emit(cfg, human.str(), out);
        return kExitDomain;
    }
    auto involutions = qf::enumerate_good_involutions(*qc.quandle);

    qf::json out;
    out["command"] = "quandle involutions";
    out["n"] = qc.quandle->size();
    out["count"] = static_cast<int>(involutions.size());
    out["involutions"] = qf::json::array();
    std::ostringstream human;
    human << involutions.size() << " good involution" << (involutions.size() == 1 ? "" : "s")
          << "\n";
    for (const auto& inv : involutions) {
        out["involutions"].push_back(inv.perm());
        human << "  [";
        for (std::size_t i = 0; i < inv.perm().size(); ++i)
            human << (i ? "," : "") << inv.perm()[i];
        human << "]\n";
    }
    emit(cfg, human.str(), out);
    return kExitOk;
}

// --- cocycle ----------------------------------------------------------------

int cmd_cocycle_verify(const RunConfig& cfg, const std::string& file,
                       const std::string& quandle_file) {
    qf::SymmetricQuandle sq = load_symmetric_quandle(quandle_file);
    qf::CocycleFile cf = qf::parse_cocycle_json(qf::load_json_file(resolve_input(file)));
    qf::CocycleCheck cc = qf::verify_cocycle3(sq, cf.signature, cf.values);

    qf::json out;
    out["command"] = "cocycle verify";
    out["valid"] = cc.ok();
    out["signature"] = {{"s", cf.signature.s}, {"t", cf.signature.t}};
    out["violations"] = qf::json::array();
    for (const auto& v : cc.violations)
        out["violations"].push_back(
            {{"condition", v.condition}, {"variant", v.variant}, {"witness", v.witness}, {"detail", v.detail}});
    out["truncated"] = cc.truncated;

    std::ostringstream human;
    if (cc.ok()) {
        qf::LemmaAdmissibility adm = qf::check_lemma_admissible(*cc.cocycle);
        out["lemma_admissible"] = adm.admissible;
        out["offenders"] = adm.offenders;
        human << "valid symmetric 3-cocycle; Lemma-admissible: " << (adm.admissible ? "yes" : "no")
              << "\n";
        if (!adm.admissible)
            for (const auto& t : adm.offenders)
                human << "  value outside {0, p_i, +-q_j} at (" << t[0] << "," << t[1] << ","
                      << t[2] << ")\n";
    } else {
        human << "NOT a symmetric 3-cocycle (" << cc.violations.size()
              << (cc.truncated ? "+" : "") << " violations)\n";
        for (const auto& v : cc.violations) human << "  " << v.detail << "\n";
    }
    emit(cfg, human.str(), out);
    return cc.ok() ? kExitOk : kExitDomain;
}

int cmd_cocycle_solve(const RunConfig& cfg, const std::string& quandle_file, int p) {
    qf::SymmetricQuandle sq = load_symmetric_quandle(quandle_file);
    qf::FieldCocycleSpace space = qf::cocycle_kernel_basis(sq, p);
    const int n = sq.quandle.size();

    qf::json out;
    out["command"] = "cocycle solve";
    out["p"] = p;
    out["n"] = n;
    out["dimension"] = space.dimension();
    out["basis"] = qf::json::array();
    std::ostringstream human;
    human << "kernel dimension over Z_" << p << ": " << space.dimension() << "\n";
    for (std::size_t bi = 0; bi < space.basis.size(); ++bi) {
        qf::json entries = qf::json::array();
        human << "basis[" << bi << "]:";
        for (int v = 0; v < n * n * n; ++v) {
            int coef = space.basis[bi][static_cast<std::size_t>(v)];
            if (coef == 0) continue;
            int a = v / (n * n), b = (v / n) % n, c = v % n;
            entries.push_back({{"triple", {a, b, c}}, {"value", coef}});
            human << " (" << a << "," << b << "," << c << ")->" << coef;
        }
        human << "\n";
        out["basis"].push_back({{"entries", entries}});
    }
    emit(cfg, human.str(), out);
    return kExitOk;
}

// --- colorings ----------------------------------------------------------------

int cmd_color(const RunConfig& cfg, bool enumerate, const std::string& diagram_file,
              const std::string& quandle_file) {
    qf::SymmetricQuandle sq = load_symmetric_quandle(quandle_file);
    qf::LinkDiagram d = qf::diagram_from_json(qf::load_json_file(resolve_input(diagram_file)));

    qf::json out;
    out["command"] = enumerate ? "color enum" : "color count";
    std::ostringstream human;
    if (enumerate) {
        auto colorings = qf::enumerate_colorings(d, sq);
        out["count"] = colorings.size();
        out["colorings"] = qf::json::array();
        human << colorings.size() << " coloring" << (colorings.size() == 1 ? "" : "s") << "\n";
        for (const auto& c : colorings) {
            out["colorings"].push_back(
                {{"colors", c.colors}, {"crossingless", c.crossingless_colors}});
            human << "  colors=[";
            for (std::size_t i = 0; i < c.colors.size(); ++i)
                human << (i ? "," : "") << c.colors[i];
            human << "] crossingless=[";
            for (std::size_t i = 0; i < c.crossingless_colors.size(); ++i)
                human << (i ? "," : "") << c.crossingless_colors[i];
            human << "]\n";
        }
    } else {
        std::uint64_t count = qf::count_colorings(d, sq);
        out["count"] = count;
        human << count << "\n";
    }
    emit(cfg, human.str(), out);
    return kExitOk;
}

// --- weight / family ----------------------------------------------------------

int cmd_weight(const RunConfig& cfg, const std::string& movie_file,
               const std::string& cocycle_file) {
    fs::path movie_path = resolve_input(movie_file);
    qf::Movie movie = qf::movie_from_json(
        qf::load_json_file(movie_path), [&](const std::string& ref) {
            fs::path p(ref);
            if (!p.is_relative()) return qf::load_json_file(p);
            fs::path sibling = movie_path.parent_path() / p;
            return qf::load_json_file(fs::exists(sibling) ? sibling : resolve_input(ref));
        });
    qf::CocycleFile cf = qf::parse_cocycle_json(qf::load_json_file(resolve_input(cocycle_file)));
    qf::CocycleCheck cc = qf::verify_cocycle3(movie.sq, cf.signature, cf.values);
    if (!cc.ok()) {
        std::ostringstream human;
        human << "cocycle is NOT a symmetric 3-cocycle of the movie's quandle\n";
        for (const auto& v : cc.violations) human << "  " << v.detail << "\n";
        emit(cfg, human.str(), qf::json{{"command", "weight"}, {"cocycle_valid", false}});
        return kExitDomain;
    }

    qf::AbelianElement w = qf::weight(movie, *cc.cocycle);
    std::optional<std::int64_t> bound = qf::lower_bound(w, *cc.cocycle);

    qf::json out;
    out["command"] = "weight";
    out["triple_count"] = movie.triples.size();
    out["weight"] = qf::abelian_to_json(w);
    out["display"] = qf::to_display_string(w);
    out["lemma_admissible"] = bound.has_value();
    if (bound)
        out["lower_bound"] = *bound;
    else
        out["lower_bound"] = nullptr;

    std::ostringstream human;
    human << "weight = " << qf::to_display_string(w) << "\n";
    if (bound)
        human << "lower bound on triple point number = " << *bound << "\n";
    else
        human << "lower bound: inapplicable (cocycle values outside {0, p_i, +-q_j})\n";
    emit(cfg, human.str(), out);
    return kExitOk;
}

int cmd_family(const RunConfig& cfg, const qf::FamilyParams& params) {
    qf::FamilyReport report = qf::family_report(params);

    qf::json out;
    out["command"] = "family";
    out["k"] = params.k;
    out["m"] = params.m;
    out["g"] = params.g;
    out["gprime"] = params.gprime;
    out["components"] = qf::json::array();
    for (const auto& row : report.rows)
        out["components"].push_back({{"name", row.component.name},
                                     {"orientable", row.component.orientable},
                                     {"births", row.component.births},
                                     {"deaths", row.component.deaths},
                                     {"saddles", row.component.saddles},
                                     {"euler", row.euler},
                                     {"genus", row.genus}});
    out["triple_count"] = report.triple_count;
    out["weight"] = qf::abelian_to_json(report.theta_weight);
    out["display"] = qf::to_display_string(report.theta_weight);
    out["lower_bound"] = report.bound;
    out["t"] = report.t;

    std::ostringstream human;
    human << "surface-link family: k=" << params.k << ", m=" << params.m << ", g=[";
    for (std::size_t i = 0; i < params.g.size(); ++i) human << (i ? "," : "") << params.g[i];
    human << "], g'=[";
    for (std::size_t i = 0; i < params.gprime.size(); ++i)
        human << (i ? "," : "") << params.gprime[i];
    human << "]\n";
    human << std::left << std::setw(11) << "component" << std::setw(11) << "orientable"
          << std::right << std::setw(7) << "births" << std::setw(8) << "deaths" << std::setw(9)
          << "saddles" << std::setw(7) << "euler" << std::setw(7) << "genus" << "\n";
    for (const auto& row : report.rows) {
        human << std::left << std::setw(11) << row.component.name << std::setw(11)
              << (row.component.orientable ? "yes" : "no") << std::right << std::setw(7)
              << row.component.births << std::setw(8) << row.component.deaths << std::setw(9)
              << row.component.saddles << std::setw(7) << row.euler << std::setw(7) << row.genus
              << "\n";
    }
    int half = static_cast<int>(report.triple_count / 2);
    human << "triple points: " << report.triple_count << " (" << half
          << " negative (2,0,2), " << half << " positive (1,0,2))\n";
    human << "weight = " << qf::to_display_string(report.theta_weight) << "\n";
    human << "lemma lower bound = " << report.bound << "\n";
    human << "t(F) = " << report.t << "\n";
    emit(cfg, human.str(), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-quandle coloring and surface-link weight tool"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    app.add_flag("--json", cfg.machine_json, "machine-readable JSON output");
    app.add_option("-o,--output", cfg.output_path, "write output to a file instead of stdout");
    app.add_flag("-v,--verbose", [&cfg](std::int64_t n) { cfg.verbosity = static_cast<int>(n); },
                 "more diagnostics");

    std::string file, quandle_file, cocycle_file, diagram_file, movie_file;
    int prime = 2;
    qf::FamilyParams params;

    CLI::App* quandle = app.add_subcommand("quandle", "verify quandle files, list good involutions");
    quandle->require_subcommand(1);
    CLI::App* q_verify = quandle->add_subcommand("verify", "check the quandle axioms (and rho)");
    q_verify->add_option("file", file, "quandle JSON file")->required();
    CLI::App* q_inv = quandle->add_subcommand("involutions", "enumerate all good involutions");
    q_inv->add_option("file", file, "quandle JSON file")->required();

    CLI::App* cocycle = app.add_subcommand("cocycle", "verify cocycles, solve kernels mod p");
    cocycle->require_subcommand(1);
    CLI::App* c_verify = cocycle->add_subcommand("verify", "check the symmetric 3-cocycle conditions");
    c_verify->add_option("file", file, "cocycle JSON file")->required();
    c_verify->add_option("--quandle", quandle_file, "symmetric quandle JSON file")->required();
    CLI::App* c_solve = cocycle->add_subcommand("solve", "kernel basis of the cocycle conditions mod p");
    c_solve->add_option("--quandle", quandle_file, "symmetric quandle JSON file")->required();
    c_solve->add_option("-p,--prime", prime, "prime modulus")->required();

    CLI::App* color = app.add_subcommand("color", "count or enumerate diagram colorings");
    color->require_subcommand(1);
    CLI::App* col_count = color->add_subcommand("count", "number of colorings");
    col_count->add_option("diagram", diagram_file, "diagram JSON file")->required();
    col_count->add_option("--quandle", quandle_file, "symmetric quandle JSON file")->required();
    CLI::App* col_enum = color->add_subcommand("enum", "list canonical colorings");
    col_enum->add_option("diagram", diagram_file, "diagram JSON file")->required();
    col_enum->add_option("--quandle", quandle_file, "symmetric quandle JSON file")->required();

    CLI::App* weight_cmd = app.add_subcommand("weight", "cocycle weight of a movie");
    weight_cmd->add_option("movie", movie_file, "movie JSON file")->required();
    weight_cmd->add_option("--cocycle", cocycle_file, "cocycle JSON file")->required();

    CLI::App* family = app.add_subcommand("family", "triple-point-number family report");
    family->add_option("-k", params.k, "number of orientable companion components")->required();
    family->add_option("-m", params.m, "number of non-orientable components")->required();
    family->add_option("--g", params.g, "genera of the k orientable components")->delimiter(',');
    family->add_option("--gprime", params.gprime, "even genera of the m non-orientable components")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (q_verify->parsed()) return cmd_quandle_verify(cfg, file);
        if (q_inv->parsed()) return cmd_quandle_involutions(cfg, file);
        if (c_verify->parsed()) return cmd_cocycle_verify(cfg, file, quandle_file);
        if (c_solve->parsed()) return cmd_cocycle_solve(cfg, quandle_file, prime);
        if (col_count->parsed()) return cmd_color(cfg, false, diagram_file, quandle_file);
        if (col_enum->parsed()) return cmd_color(cfg, true, diagram_file, quandle_file);
        if (weight_cmd->parsed()) return cmd_weight(cfg, movie_file, cocycle_file);
        if (family->parsed()) return cmd_family(cfg, params);
    } catch (const qf::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qf::constraint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitInput;
}
