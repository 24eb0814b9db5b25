#include "promdig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "promdig/enumerate.hpp"
#include "promdig/harness.hpp"
#include "promdig/json_io.hpp"
#include "promdig/promotion.hpp"

namespace promdig {

namespace {

using nlohmann::json;

json read_one_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    auto values = parse_json_stream(in);
    if (values.size() != 1) throw ParseError(path + " must contain exactly one JSON value");
    return values.front();
}

std::vector<json> read_json_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_json_stream(in);
}

struct Output {
    std::ostream& fallback;
    std::string path;
    std::ofstream file;
    std::ostream& stream() {
        if (path.empty()) return fallback;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw ParseError("cannot write " + path);
        }
        return file;
    }
};

json promote_any(const AnyTableau& t, int steps, bool gromote) {
    if (std::holds_alternative<StandardTableau>(t)) {
        StandardTableau cur = std::get<StandardTableau>(t);
        for (int s = 0; s < steps; ++s) {
            cur = gromote ? gromote_standard(cur).tableau : promote_standard(cur);
        }
        return tableau_to_json(cur);
    }
    IncreasingTableau cur = std::get<IncreasingTableau>(t);
    for (int s = 0; s < steps; ++s) {
        cur = gromote ? k_gromote(cur).tableau : k_promote(cur);
    }
    return tableau_to_json(cur);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"promotion dynamics on Young tableaux, promotion digraphs, noncrossing "
                 "partitions, and plabic-graph trip digraphs"};
    app.require_subcommand(1);

    std::string input_path;
    std::string output_path;

    // promote
    auto* promote_cmd = app.add_subcommand("promote", "apply (K-)promotion or gromotion");
    int promote_steps = 1;
    bool promote_gro = false;
    promote_cmd->add_option("--input", input_path, "tableau JSON file")->required();
    promote_cmd->add_option("--steps", promote_steps, "number of steps")->check(CLI::NonNegativeNumber);
    promote_cmd->add_flag("--gromotion", promote_gro, "use gromotion (rotating alphabet)");
    promote_cmd->add_option("--output", output_path, "output file (default stdout)");

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "print the promotion orbit and its period");
    int orbit_max = -1;
    orbit_cmd->add_option("--input", input_path, "tableau JSON file")->required();
    orbit_cmd->add_option("--max-iterations", orbit_max, "bound on the period search");
    orbit_cmd->add_option("--output", output_path, "output file (default stdout)");

    // digraph
    auto* digraph_cmd = app.add_subcommand("digraph", "promotion digraph prom_i of a tableau");
    int digraph_i = 1;
    std::string digraph_format = "json";
    digraph_cmd->add_option("--input", input_path, "tableau JSON file")->required();
    digraph_cmd->add_option("--i", digraph_i, "digraph index")->check(CLI::PositiveNumber);
    digraph_cmd->add_option("--format", digraph_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    digraph_cmd->add_option("--output", output_path, "output file (default stdout)");

    // reconstruct
    auto* rec_cmd = app.add_subcommand("reconstruct", "rebuild a tableau from its digraphs");
    std::string rec_kind;
    std::vector<int> rec_shape;
    rec_cmd->add_option("--kind", rec_kind, "standard or rect-increasing")
        ->required()
        ->check(CLI::IsMember({"standard", "rect-increasing"}));
    rec_cmd->add_option("--input", input_path, "digraph JSON or JSON-lines file")->required();
    rec_cmd->add_option("--shape", rec_shape, "partition (standard) or r c (rect-increasing)")
        ->required();
    rec_cmd->add_option("--output", output_path, "output file (default stdout)");

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "tableau <-> lattice word");
    bool lattice_from_word = false;
    lattice_cmd->add_option("--input", input_path, "tableau or word JSON file")->required();
    lattice_cmd->add_flag("--from-word", lattice_from_word, "input is a lattice word");
    lattice_cmd->add_option("--output", output_path, "output file (default stdout)");

    // nc
    auto* nc_cmd = app.add_subcommand("nc", "noncrossing structures");
    std::string nc_op;
    int nc_c = -1;
    nc_cmd->add_option("--op", nc_op, "tograph | pi | pi-inverse | rotate | first-block | complete")
        ->required()
        ->check(CLI::IsMember({"tograph", "pi", "pi-inverse", "rotate", "first-block", "complete"}));
    nc_cmd->add_option("--input", input_path, "tableau or partition JSON file")->required();
    nc_cmd->add_option("--c", nc_c, "columns for pi-inverse");
    nc_cmd->add_option("--output", output_path, "output file (default stdout)");

    // plabic
    auto* plabic_cmd = app.add_subcommand("plabic", "plabic graphs and trip digraphs");
    std::string plabic_op;
    int trip_i = 1;
    int trip_r = 3;
    std::string plabic_format = "json";
    plabic_cmd->add_option("--op", plabic_op, "validate | faces | classify | trip | from-partition | rotate")
        ->required()
        ->check(CLI::IsMember({"validate", "faces", "classify", "trip", "from-partition", "rotate"}));
    plabic_cmd->add_option("--input", input_path, "plabic or partition JSON file")->required();
    plabic_cmd->add_option("--i", trip_i, "trip index i");
    plabic_cmd->add_option("--r", trip_r, "degree threshold r");
    plabic_cmd->add_option("--format", plabic_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    plabic_cmd->add_option("--output", output_path, "output file (default stdout)");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "stream a structure family as JSON lines");
    std::string family;
    std::vector<int> enum_shape;
    int enum_q = 0;
    int enum_n = 0;
    int enum_k = 0;
    int enum_interior = kDefaultFlamingoInterior;
    long long enum_limit = -1;
    enum_cmd->add_option("--family", family,
                         "syt | increasing | packed-increasing | nc-partition | nc-matching | flamingo")
        ->required()
        ->check(CLI::IsMember({"syt", "increasing", "packed-increasing", "nc-partition",
                               "nc-matching", "flamingo"}));
    enum_cmd->add_option("--shape", enum_shape, "partition shape (syt, increasing)");
    enum_cmd->add_option("--q", enum_q, "alphabet / ground-set size");
    enum_cmd->add_option("--n", enum_n, "boundary vertex count (flamingo)");
    enum_cmd->add_option("--k", enum_k, "white excess (flamingo)");
    enum_cmd->add_option("--max-interior", enum_interior, "interior vertex bound (flamingo)");
    enum_cmd->add_option("--limit", enum_limit, "stop after this many items");
    enum_cmd->add_option("--output", output_path, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run harness checks");
    std::vector<std::string> verify_ids;
    bool verify_all = false;
    std::string report_path;
    HarnessCaps caps = HarnessCaps::from_environment();
    verify_cmd->add_option("--check", verify_ids, "check ids to run");
    verify_cmd->add_flag("--all", verify_all, "run every check");
    verify_cmd->add_option("--report", report_path, "JSON-lines report file");
    verify_cmd->add_option("--cap-syt-cells", caps.syt_cells, "standard reconstruction cap");
    verify_cmd->add_option("--cap-rect-cells", caps.rect_cells, "rectangular sweep cap");
    verify_cmd->add_option("--cap-inc-q", caps.inc_q, "rectangular increasing cap");
    verify_cmd->add_option("--cap-two-row-q", caps.two_row_q, "two-row q cap");
    verify_cmd->add_option("--cap-two-row-c", caps.two_row_c, "two-row c cap");
    verify_cmd->add_option("--cap-conj3-c", caps.conj3_c, "Conjecture 1.1 c cap");
    verify_cmd->add_option("--cap-conj3-q", caps.conj3_q, "Conjecture 1.1 q cap");
    verify_cmd->add_option("--cap-flamingo-n", caps.flamingo_n, "flamingo boundary cap");
    verify_cmd->add_option("--cap-flamingo-interior", caps.flamingo_interior,
                           "flamingo interior cap");
    verify_cmd->add_option("--cap-indegree-r", caps.indegree_r, "indegree suite row cap");
    verify_cmd->add_option("--cap-indegree-c", caps.indegree_c, "indegree suite column cap");
    verify_cmd->add_option("--cap-indegree-q", caps.indegree_q, "indegree suite q cap");

    std::vector<std::string> argv_like = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("promdig");
        for (const auto& a : argv_like) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    Output output{out, output_path, {}};
    try {
        if (*promote_cmd) {
            AnyTableau t = tableau_from_json(read_one_json(input_path));
            output.stream() << promote_any(t, promote_steps, promote_gro).dump() << "\n";
        } else if (*orbit_cmd) {
            AnyTableau t = tableau_from_json(read_one_json(input_path));
            std::ostream& os = output.stream();
            int period = 0;
            if (std::holds_alternative<StandardTableau>(t)) {
                const auto& start = std::get<StandardTableau>(t);
                StandardTableau cur = start;
                int bound = orbit_max > 0 ? orbit_max : default_order_bound(start.size());
                os << tableau_to_json(cur).dump() << "\n";
                for (int m = 1; m <= bound; ++m) {
                    cur = promote_standard(cur);
                    if (cur == start) {
                        period = m;
                        break;
                    }
                    os << tableau_to_json(cur).dump() << "\n";
                }
            } else {
                const auto& start = std::get<IncreasingTableau>(t);
                IncreasingTableau cur = start;
                int bound = orbit_max > 0 ? orbit_max : default_order_bound(start.q());
                os << tableau_to_json(cur).dump() << "\n";
                for (int m = 1; m <= bound; ++m) {
                    cur = k_promote(cur);
                    if (cur == start) {
                        period = m;
                        break;
                    }
                    os << tableau_to_json(cur).dump() << "\n";
                }
            }
            if (period == 0) throw OrderExceedsBound("period not found within the bound");
            os << json{{"period", period}}.dump() << "\n";
        } else if (*digraph_cmd) {
            AnyTableau t = tableau_from_json(read_one_json(input_path));
            PromotionDigraph d = std::holds_alternative<StandardTableau>(t)
                                     ? promotion_digraph(std::get<StandardTableau>(t), digraph_i)
                                     : promotion_digraph(std::get<IncreasingTableau>(t), digraph_i);
            if (digraph_format == "dot") {
                output.stream() << digraph_to_dot(d);
            } else {
                output.stream() << digraph_to_json(d).dump() << "\n";
            }
        } else if (*rec_cmd) {
            std::vector<PromotionDigraph> digs;
            for (const json& j : read_json_stream_file(input_path)) {
                digs.push_back(digraph_from_json(j));
            }
            std::sort(digs.begin(), digs.end(),
                      [](const PromotionDigraph& a, const PromotionDigraph& b) {
                          return a.index() < b.index();
                      });
            if (rec_kind == "standard") {
                StandardTableau t = reconstruct_standard(digs, Partition(rec_shape));
                output.stream() << tableau_to_json(t).dump() << "\n";
            } else {
                if (rec_shape.size() != 2) {
                    throw ParseError("rect-increasing needs --shape r c");
                }
                IncreasingTableau t = reconstruct_rect_increasing(digs, rec_shape[0], rec_shape[1]);
                output.stream() << tableau_to_json(t).dump() << "\n";
            }
        } else if (*lattice_cmd) {
            json j = read_one_json(input_path);
            if (lattice_from_word) {
                LatticeWord w = lattice_word_from_json(j);
                if (w.all_singletons()) {
                    output.stream() << tableau_to_json(standard_from_lattice_word(w)).dump() << "\n";
                } else {
                    output.stream() << tableau_to_json(increasing_from_lattice_word(w)).dump() << "\n";
                }
            } else {
                AnyTableau t = tableau_from_json(j);
                LatticeWord w = std::holds_alternative<StandardTableau>(t)
                                    ? lattice_word(std::get<StandardTableau>(t))
                                    : lattice_word(std::get<IncreasingTableau>(t));
                output.stream() << lattice_word_to_json(w).dump() << "\n";
            }
        } else if (*nc_cmd) {
            std::ostream& os = output.stream();
            if (nc_op == "tograph") {
                AnyTableau t = tableau_from_json(read_one_json(input_path));
                if (!std::holds_alternative<StandardTableau>(t)) {
                    throw WrongShape("tograph needs a standard tableau");
                }
                os << nc_partition_to_json(tograph(std::get<StandardTableau>(t)).partition()).dump()
                   << "\n";
            } else if (nc_op == "pi") {
                AnyTableau t = tableau_from_json(read_one_json(input_path));
                if (!std::holds_alternative<IncreasingTableau>(t)) {
                    throw WrongShape("pi needs an increasing tableau");
                }
                os << nc_partition_to_json(pi_bijection(std::get<IncreasingTableau>(t))).dump()
                   << "\n";
            } else if (nc_op == "pi-inverse") {
                if (nc_c < 0) throw ParseError("pi-inverse needs --c");
                NoncrossingSetPartition p = nc_partition_from_json(read_one_json(input_path));
                os << tableau_to_json(pi_inverse(p, nc_c)).dump() << "\n";
            } else if (nc_op == "rotate") {
                NoncrossingSetPartition p = nc_partition_from_json(read_one_json(input_path));
                os << nc_partition_to_json(rotate_partition(p)).dump() << "\n";
            } else if (nc_op == "first-block") {
                NoncrossingSetPartition p = nc_partition_from_json(read_one_json(input_path));
                FirstBlockAnalysis fb = first_block_analysis(p);
                os << json{{"balance", fb.balance}, {"teetering", fb.teetering}}.dump() << "\n";
            } else {
                NoncrossingSetPartition p = nc_partition_from_json(read_one_json(input_path));
                os << digraph_to_json(blocks_to_complete_digraphs(p)).dump() << "\n";
            }
        } else if (*plabic_cmd) {
            std::ostream& os = output.stream();
            if (plabic_op == "from-partition") {
                NoncrossingSetPartition p = nc_partition_from_json(read_one_json(input_path));
                PlabicGraph g = partition_to_plabic(p);
                os << (plabic_format == "dot" ? plabic_to_dot(g) : plabic_to_json(g).dump() + "\n");
            } else {
                PlabicGraph g = plabic_from_json(read_one_json(input_path));
                if (plabic_op == "validate") {
                    os << json{{"valid", true}, {"n", g.n()}}.dump() << "\n";
                } else if (plabic_op == "faces") {
                    json faces_json = json::array();
                    for (const Face& f : faces(g)) {
                        json steps = json::array();
                        for (const auto& [e, at] : f.steps) steps.push_back(json::array({e, at}));
                        faces_json.push_back(json{{"outer", f.outer}, {"size", f.size()},
                                                  {"steps", steps}});
                    }
                    os << faces_json.dump() << "\n";
                } else if (plabic_op == "classify") {
                    FlamingoResult fr = is_flamingo(g);
                    os << json{{"normal", is_normal(g)},
                               {"flamingo", fr.flamingo},
                               {"k", fr.k}}.dump()
                       << "\n";
                } else if (plabic_op == "trip") {
                    TripDigraph d = trip_digraph(g, trip_i, trip_r);
                    os << (plabic_format == "dot" ? digraph_to_dot(d)
                                                  : digraph_to_json(d).dump() + "\n");
                } else {
                    os << plabic_to_json(rotate_web(g)).dump() << "\n";
                }
            }
        } else if (*enum_cmd) {
            std::ostream& os = output.stream();
            long long emitted = 0;
            auto more = [&] { return enum_limit < 0 || emitted < enum_limit; };
            if (family == "syt") {
                if (enum_shape.empty()) throw ParseError("syt needs --shape");
                enumerate_syt(Partition(enum_shape), [&](const StandardTableau& t) {
                    os << tableau_to_json(t).dump() << "\n";
                    ++emitted;
                    return more();
                });
            } else if (family == "increasing" || family == "packed-increasing") {
                if (enum_shape.empty() || enum_q <= 0) {
                    throw ParseError("increasing needs --shape and --q");
                }
                enumerate_increasing(Partition(enum_shape), enum_q, family == "packed-increasing",
                                     [&](const IncreasingTableau& t) {
                    os << tableau_to_json(t).dump() << "\n";
                    ++emitted;
                    return more();
                });
            } else if (family == "nc-partition") {
                if (enum_q <= 0) throw ParseError("nc-partition needs --q");
                enumerate_nc_partitions(enum_q, [&](const NoncrossingSetPartition& p) {
                    os << nc_partition_to_json(p).dump() << "\n";
                    ++emitted;
                    return more();
                });
            } else if (family == "nc-matching") {
                if (enum_q <= 0) throw ParseError("nc-matching needs --q (ground-set size)");
                enumerate_nc_matchings(enum_q, [&](const NoncrossingMatching& m) {
                    os << nc_partition_to_json(m.partition()).dump() << "\n";
                    ++emitted;
                    return more();
                });
            } else {
                if (enum_n <= 0) throw ParseError("flamingo needs --n");
                enumerate_flamingo(enum_n, enum_k, enum_interior, [&](const PlabicGraph& g) {
                    os << plabic_to_json(g).dump() << "\n";
                    ++emitted;
                    return more();
                });
            }
        } else if (*verify_cmd) {
            std::vector<std::string> ids = verify_all ? all_check_ids() : verify_ids;
            if (ids.empty()) throw ParseError("verify needs --all or --check");
            std::vector<CheckReport> reports = run_checks(ids, caps);
            std::unique_ptr<std::ofstream> report_file;
            if (!report_path.empty()) {
                report_file = std::make_unique<std::ofstream>(report_path);
                if (!*report_file) throw ParseError("cannot write " + report_path);
            }
            bool theorem_failure = false;
            bool conjecture_violation = false;
            for (const CheckReport& report : reports) {
                json line = report.to_json();
                out << line.dump() << "\n";
                if (report_file) (*report_file) << line.dump() << "\n";
                theorem_failure = theorem_failure || report.is_theorem_failure();
                conjecture_violation = conjecture_violation || report.is_conjecture_violation();
            }
            if (theorem_failure) return kExitTheoremFailure;
            if (conjecture_violation) return kExitConjectureViolation;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace promdig
