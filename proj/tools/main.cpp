// gibs — command-line front end for the geometric-involutive-bases library.
//
// Subcommands:
//   table    dimension table dim pi^l D^k with involutivity flags
//   gif      geometric involutive form (generators + accepted cell + table)
//   realrad  GIF / moment-matrix alternation toward real-radical generators
//   moment   truncated moment problem + generic (maximum-rank) PSD point
//
// Exit codes: 0 success, 2 parse error (input text or command line),
// 3 infeasible moment constraints, 4 resource limit (kmax or round budget),
// 1 any other error.

#include "gibs/gibs.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string input;   // file path, or "-" for stdin
    double tol = 1e-8;
    int kmax = 10;
    std::uint64_t seed = 0;
    int max_iter = 0;    // realrad: round budget; moment: Newton iteration cap
    std::string format = "text";
    std::string output;  // empty = stdout
    bool simplify = false;
    bool verbose = false;

    bool has_kmax() const { return command != "moment"; }
    bool has_max_iter() const {
        return command == "realrad" || command == "moment";
    }
};

std::string fmt_g(double v, int digits = 7) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string mono_str(const gibs::Monomial& m,
                     const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (m[i] > 1) {
            s += '^';
            s += std::to_string(m[i]);
        }
    }
    return s.empty() ? std::string("1") : s;
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw gibs::error("cannot open input file '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

gibs::PolySystem load_system(const RunConfig& cfg) {
    std::vector<std::string> warnings;
    gibs::PolySystem P = gibs::parse_system(read_input(cfg.input), &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return P;
}

// Every run starts with its effective configuration so results can be
// replayed exactly.
std::string config_header(const RunConfig& cfg) {
    std::ostringstream ss;
    ss << "# gibs " << gibs::version << ' ' << cfg.command
       << " input=" << cfg.input << " tol=" << fmt_g(cfg.tol);
    if (cfg.has_kmax()) ss << " kmax=" << cfg.kmax;
    ss << " seed=" << cfg.seed;
    if (cfg.has_max_iter()) ss << " max-iter=" << cfg.max_iter;
    ss << " format=" << cfg.format << "\n";
    return ss.str();
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["version"] = gibs::version;
    j["command"] = cfg.command;
    j["input"] = cfg.input;
    j["tol"] = cfg.tol;
    if (cfg.has_kmax()) j["kmax"] = cfg.kmax;
    j["seed"] = cfg.seed;
    if (cfg.has_max_iter()) j["max_iter"] = cfg.max_iter;
    j["format"] = cfg.format;
    return j;
}

ordered_json table_json(const gibs::DimensionTable& t) {
    ordered_json cells = ordered_json::array();
    for (int k = 0; k <= t.kmax; ++k) {
        for (int l = 0; l <= t.degree + k; ++l) {
            const int v = t.entry_or(k, l, -1);
            if (v < 0) continue;
            gibs::CellFlags f;
            if (auto it = t.flags.find({k, l}); it != t.flags.end())
                f = it->second;
            cells.push_back({{"k", k},
                             {"l", l},
                             {"dim", v},
                             {"elimination", f.elimination},
                             {"symbol", f.symbol},
                             {"involutive", f.involutive}});
        }
    }
    return ordered_json{{"nvars", t.nvars},       {"degree", t.degree},
                        {"kmax", t.kmax},         {"tol", t.eps},
                        {"gap_warning", t.gap_warning}, {"cells", cells}};
}

ordered_json polys_json(const gibs::PolySystem& P) {
    const auto names = gibs::display_names(P.nvars, P.varnames);
    ordered_json arr = ordered_json::array();
    for (const auto& p : P.polys) arr.push_back(gibs::format_poly(p, names));
    return arr;
}

ordered_json names_json(const gibs::PolySystem& P) {
    return ordered_json(gibs::display_names(P.nvars, P.varnames));
}

void emit(const RunConfig& cfg, const std::string& text,
          const ordered_json& doc) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file)
            throw gibs::error("cannot open output file '" + cfg.output + "'");
        out = &file;
    }
    if (cfg.format == "json")
        *out << doc.dump(2) << "\n";
    else
        *out << text;
    out->flush();
    if (!*out) throw gibs::error("failed writing output");
}

// ---- subcommands ----------------------------------------------------------

int run_table(const RunConfig& cfg) {
    const gibs::PolySystem P = load_system(cfg);
    const gibs::DimensionTable table =
        gibs::dimension_table(P, cfg.kmax, cfg.tol, cfg.seed);

    std::ostringstream text;
    text << config_header(cfg) << table.to_text();

    ordered_json doc;
    doc["command"] = "table";
    doc["config"] = config_json(cfg);
    doc["table"] = table_json(table);
    emit(cfg, text.str(), doc);
    return 0;
}

int run_gif(const RunConfig& cfg) {
    const gibs::PolySystem P = load_system(cfg);
    const gibs::GifResult res = gibs::gif(P, cfg.tol, cfg.kmax, cfg.seed);

    std::ostringstream text;
    text << config_header(cfg);
    text << "accepted cell (k,l) = (" << res.k << "," << res.l << "): dim "
         << res.dim << ", generators at degree " << res.dbar << "\n";
    text << "generators (" << res.generators.size() << "):\n"
         << gibs::format_system(res.generators);
    text << "dimension table:\n" << res.table.to_text();

    ordered_json doc;
    doc["command"] = "gif";
    doc["config"] = config_json(cfg);
    doc["cell"] = ordered_json{
        {"k", res.k}, {"l", res.l}, {"dim", res.dim}, {"degree", res.dbar}};
    doc["vars"] = names_json(res.generators);
    doc["generators"] = polys_json(res.generators);
    doc["table"] = table_json(res.table);
    emit(cfg, text.str(), doc);
    return 0;
}

int run_realrad(const RunConfig& cfg) {
    const gibs::PolySystem P = load_system(cfg);
    const gibs::RealRadicalResult res = gibs::gif_mmtx(
        P, cfg.tol, cfg.seed, cfg.max_iter, cfg.kmax, cfg.verbose);

    std::ostringstream text;
    text << config_header(cfg);
    for (const gibs::IterationRecord& r : res.trace) {
        text << "round " << r.round << ": cell (k,l) = (" << r.k << "," << r.l
             << "), dim " << r.dim << ", " << r.ngens
             << " generator(s) at degree " << r.generators.degree()
             << "; moment rank " << r.rank << ", kernel " << r.kernel_dim
             << ", lmin=" << fmt_g(r.lmin) << ", noise=" << fmt_g(r.noise)
             << " (tol " << fmt_g(r.eps_used) << ")\n";
    }
    const gibs::IterationRecord& last = res.trace.back();
    text << "stop: moment rank == dim == " << last.rank << " after "
         << res.trace.size() << " round(s)\n";
    text << "final generators (" << res.generators.size() << "):\n"
         << gibs::format_system(res.generators);
    text << "dimension table of the final generators:\n"
         << res.gif.table.to_text();

    std::vector<gibs::SimplifyEntry> simp;
    if (cfg.simplify) {
        simp = gibs::simplify_report(res.generators, cfg.tol);
        text << gibs::format_simplify_report(simp, res.generators);
    }

    ordered_json doc;
    doc["command"] = "realrad";
    doc["config"] = config_json(cfg);
    doc["rounds"] = res.trace.size();
    ordered_json trace = ordered_json::array();
    for (const gibs::IterationRecord& r : res.trace) {
        trace.push_back({{"round", r.round},
                         {"k", r.k},
                         {"l", r.l},
                         {"dim", r.dim},
                         {"rank", r.rank},
                         {"ngens", r.ngens},
                         {"kernel_dim", r.kernel_dim},
                         {"lmin", r.lmin},
                         {"noise", r.noise},
                         {"tol", r.eps_used},
                         {"generators", polys_json(r.generators)}});
    }
    doc["trace"] = trace;
    doc["vars"] = names_json(res.generators);
    doc["generators"] = polys_json(res.generators);
    doc["table"] = table_json(res.gif.table);
    if (cfg.simplify) {
        ordered_json entries = ordered_json::array();
        for (const gibs::SimplifyEntry& e : simp) {
            entries.push_back({{"depth", e.depth},
                               {"degree", e.degree},
                               {"raw", polys_json(e.raw)},
                               {"normalized", polys_json(e.normalized)}});
        }
        doc["simplify"] = entries;
    }
    emit(cfg, text.str(), doc);
    return 0;
}

int run_moment(const RunConfig& cfg) {
    const gibs::PolySystem Q = load_system(cfg);
    const gibs::MomentProblem mp = gibs::build_moment_problem(Q, cfg.tol);

    gibs::SdpOptions opts;
    opts.seed = cfg.seed;
    if (cfg.max_iter > 0) opts.max_iterations = cfg.max_iter;
    opts.verbose = cfg.verbose;
    const gibs::MomentSolution sol = gibs::generic_point(mp, opts);

    const auto names = gibs::display_names(Q.nvars, Q.varnames);
    // Display the kernel as its orthonormal basis rows (cleaned): monic
    // normalization would divide by a possibly tiny leading coefficient and
    // blow the display up.
    std::vector<gibs::Polynomial> kp;
    for (gibs::Polynomial& p :
         gibs::polys_from_rows(sol.kernel.basis, mp.index))
        kp.push_back(gibs::clean(p));
    const gibs::PolySystem kernel_polys(Q.nvars, std::move(kp), Q.varnames);

    std::ostringstream text;
    text << config_header(cfg);
    text << "moment matrix side " << mp.side() << ", moment variables "
         << mp.ubasis.size() << ", free parameters " << mp.nfree() << "\n";
    text << "generic point: rank " << sol.rank << ", kernel dimension "
         << sol.kernel.dim() << ", lmin=" << fmt_g(sol.lmin)
         << ", noise=" << fmt_g(sol.noise) << ", iterations "
         << sol.iterations << "\n";
    text << "moments:\n";
    for (int i = 0; i < mp.ubasis.size(); ++i)
        text << "  " << mono_str(mp.ubasis.at(i), names) << " = "
             << fmt_g(sol.u(i)) << "\n";
    text << "kernel basis (" << kernel_polys.size()
         << " orthonormal rows as polynomials):\n"
         << gibs::format_system(kernel_polys);

    ordered_json doc;
    doc["command"] = "moment";
    doc["config"] = config_json(cfg);
    doc["side"] = mp.side();
    doc["variables"] = mp.ubasis.size();
    doc["free"] = mp.nfree();
    doc["rank"] = sol.rank;
    doc["kernel_dim"] = sol.kernel.dim();
    doc["lmin"] = sol.lmin;
    doc["noise"] = sol.noise;
    doc["iterations"] = sol.iterations;
    doc["seed"] = sol.seed;
    ordered_json ms = ordered_json::array();
    for (int i = 0; i < mp.ubasis.size(); ++i)
        ms.push_back({{"monomial", mono_str(mp.ubasis.at(i), names)},
                      {"value", sol.u(i)}});
    doc["moments"] = ms;
    doc["vars"] = names_json(Q);
    doc["kernel"] = polys_json(kernel_polys);
    emit(cfg, text.str(), doc);
    return 0;
}

int dispatch(const RunConfig& cfg) {
    if (cfg.command == "table") return run_table(cfg);
    if (cfg.command == "gif") return run_gif(cfg);
    if (cfg.command == "realrad") return run_realrad(cfg);
    if (cfg.command == "moment") return run_moment(cfg);
    throw gibs::error("unknown command '" + cfg.command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric involutive bases and real-radical generators "
                 "for approximate polynomial systems"};
    app.set_version_flag("--version", std::string(gibs::version));
    app.require_subcommand(1);

    // One config per subcommand: default_val writes through the bound
    // reference at registration time, so sharing one struct would let a
    // later subcommand's defaults clobber an earlier one's.
    RunConfig cfg_t, cfg_g, cfg_r, cfg_m;

    const CLI::Validator tol_range(
        [](std::string& s) -> std::string {
            const double v = std::strtod(s.c_str(), nullptr);
            if (!(v > 0.0) || v > 1e-2)
                return "tolerance must lie in (0, 1e-2]";
            return {};
        },
        "FLOAT in (0, 1e-2]");
    const CLI::Validator input_ok(
        [](std::string& s) -> std::string {
            if (s == "-") return {};
            return CLI::ExistingFile(s);
        },
        "FILE or '-'");

    auto add_common = [&](CLI::App* sub, RunConfig& cfg,
                          std::uint64_t default_seed) {
        sub->add_option("input", cfg.input,
                        "input system file, or '-' for stdin")
            ->required()
            ->check(input_ok);
        sub->add_option("--tol", cfg.tol, "relative SVD rank tolerance")
            ->default_val(1e-8)
            ->check(tol_range);
        sub->add_option("--seed", cfg.seed, "seed for all randomized steps")
            ->default_val(default_seed);
        sub->add_option("--format", cfg.format, "output format")
            ->default_val("text")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", cfg.output,
                        "write the result to a file instead of stdout");
    };
    auto add_kmax = [&](CLI::App* sub, RunConfig& cfg, int default_kmax) {
        sub->add_option("--kmax", cfg.kmax, "largest prolongation order")
            ->default_val(default_kmax)
            ->check(CLI::Range(0, 100));
    };

    CLI::App* t = app.add_subcommand(
        "table", "print the dimension table dim pi^l D^k of the input system "
                 "with involutivity flags");
    add_common(t, cfg_t, 12345);
    add_kmax(t, cfg_t, 3);

    CLI::App* g = app.add_subcommand(
        "gif", "complete the input system to a geometric involutive form");
    add_common(g, cfg_g, 12345);
    add_kmax(g, cfg_g, 10);

    CLI::App* r = app.add_subcommand(
        "realrad", "alternate involutive completion with moment-matrix "
                   "solves to approximate real-radical generators");
    add_common(r, cfg_r, 0);
    add_kmax(r, cfg_r, 10);
    r->add_option("--max-iter", cfg_r.max_iter,
                  "round budget for the GIF / moment alternation")
        ->default_val(10)
        ->check(CLI::PositiveNumber);
    r->add_flag("--simplify", cfg_r.simplify,
                "append the lower-degree generator report");
    r->add_flag("--verbose", cfg_r.verbose, "round diagnostics on stderr");

    CLI::App* m = app.add_subcommand(
        "moment", "build the truncated moment problem of the input system "
                  "and solve for a generic maximum-rank PSD point");
    add_common(m, cfg_m, 0);
    m->add_option("--max-iter", cfg_m.max_iter,
                  "iteration cap per interior-point Newton solve")
        ->default_val(200)
        ->check(CLI::PositiveNumber);
    m->add_flag("--verbose", cfg_m.verbose, "solver diagnostics on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig* cfg = nullptr;
    for (auto [sub, c] : {std::pair{t, &cfg_t}, {g, &cfg_g}, {r, &cfg_r},
                          {m, &cfg_m}}) {
        if (app.got_subcommand(sub)) {
            cfg = c;
            cfg->command = sub->get_name();
        }
    }

    try {
        return dispatch(*cfg);
    } catch (const gibs::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gibs::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gibs::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.partial_table())
            std::cerr << "partial dimension table:\n"
                      << e.partial_table()->to_text();
        return 4;
    } catch (const gibs::unstable_rank_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
