#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "promdig/cli.hpp"
#include "promdig/harness.hpp"
#include "promdig/json_io.hpp"

using namespace promdig;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("promdig_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("JSON round trips") {
    StandardTableau t = make_standard({{1, 3, 4, 6}, {2, 5, 9}, {7, 8}});
    auto back = tableau_from_json(tableau_to_json(t));
    CHECK(std::get<StandardTableau>(back) == t);

    IncreasingTableau u = make_increasing({{1, 2}, {2, 3}}, 3);
    CHECK(std::get<IncreasingTableau>(tableau_from_json(tableau_to_json(u))) == u);

    PromotionDigraph d(5, 1, {{1, 2}, {5, 1}});
    CHECK(digraph_from_json(digraph_to_json(d)) == d);

    NoncrossingSetPartition p = NoncrossingSetPartition::validate(4, {{1, 4}, {2, 3}});
    CHECK(nc_partition_from_json(nc_partition_to_json(p)) == p);

    PlabicGraph g = hexagon_core_web();
    CHECK(plabic_from_json(plabic_to_json(g)) == g);

    LatticeWord w = LatticeWord::from_sets(2, {{1}, {1, 2}, {}, {2}});
    CHECK(lattice_word_from_json(lattice_word_to_json(w)) == w);
}

TEST_CASE("JSON schema fields are normative") {
    json j = tableau_to_json(make_increasing({{1, 2}, {2, 3}}, 3));
    CHECK(j["kind"] == "increasing");
    CHECK(j["shape"] == json::array({2, 2}));
    CHECK(j["rows"] == json::array({{1, 2}, {2, 3}}));
    CHECK(j["q"] == 3);
    CHECK(j["offset"] == 0);

    json dj = digraph_to_json(PromotionDigraph(3, 2, {{2, 3}, {1, 2}}));
    CHECK(dj["n"] == 3);
    CHECK(dj["i"] == 2);
    CHECK(dj["edges"] == json::array({{1, 2}, {2, 3}}));  // sorted

    json pj = nc_partition_to_json(NoncrossingSetPartition::validate(3, {{3}, {1, 2}}));
    CHECK(pj["blocks"] == json::array({{1, 2}, {3}}));  // sorted by min
}

TEST_CASE("tableau parse errors") {
    CHECK_THROWS_AS(tableau_from_json(json{{"kind", "weird"}}), ParseError);
    CHECK_THROWS_AS(tableau_from_json(json{{"kind", "standard"}, {"shape", {2}}}), ParseError);
}

TEST_CASE("promote subcommand reproduces the paper example") {
    TempFile input("t1.json",
                   tableau_to_json(make_increasing({{1, 2, 3, 5, 7}, {2, 3, 6, 9}, {4, 6, 8}}, 9))
                       .dump());
    RunResult r = run({"promote", "--input", input.path, "--steps", "1"});
    CHECK(r.code == kExitOk);
    auto t = tableau_from_json(json::parse(r.out));
    CHECK(std::get<IncreasingTableau>(t) ==
          make_increasing({{1, 2, 4, 6, 9}, {2, 5, 7, 8}, {3, 7, 9}}, 9));
}

TEST_CASE("digraph subcommand emits DOT with bidirected pairs") {
    TempFile input("t2.json",
                   tableau_to_json(make_standard({{1, 2, 6}, {3, 5, 8}, {4, 7, 9}})).dump());
    RunResult r = run({"digraph", "--input", input.path, "--i", "1", "--format", "dot"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("1 -> 5") != std::string::npos);

    RunResult rj = run({"digraph", "--input", input.path, "--i", "1"});
    PromotionDigraph d = digraph_from_json(json::parse(rj.out));
    CHECK(d.has_edge(1, 5));
    CHECK(d.has_edge(7, 1));
}

TEST_CASE("orbit subcommand reports the period") {
    TempFile input("t3.json", tableau_to_json(make_standard({{1, 2, 6}, {3, 5, 8}, {4, 7, 9}})).dump());
    RunResult r = run({"orbit", "--input", input.path});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::string last;
    int count = 0;
    while (std::getline(lines, line)) {
        last = line;
        ++count;
    }
    json period = json::parse(last);
    CHECK(period["period"] == 9);
    CHECK(count == 10);  // 9 orbit entries plus the period line
}

TEST_CASE("reconstruct subcommand round trips through files") {
    StandardTableau t = make_standard({{1, 3, 4, 6}, {2, 5, 9}, {7, 8}});
    std::string digraph_lines;
    for (int i = 1; i <= 2; ++i) {
        digraph_lines += digraph_to_json(promotion_digraph(t, i)).dump() + "\n";
    }
    TempFile input("digs.jsonl", digraph_lines);
    RunResult r = run({"reconstruct", "--kind", "standard", "--input", input.path, "--shape", "4",
                       "3", "2"});
    CHECK(r.code == kExitOk);
    CHECK(std::get<StandardTableau>(tableau_from_json(json::parse(r.out))) == t);
}

TEST_CASE("lattice subcommand converts both ways") {
    TempFile tab("t4.json", tableau_to_json(make_standard({{1, 3, 4, 6}, {2, 5, 9}, {7, 8}})).dump());
    RunResult to_word = run({"lattice", "--input", tab.path});
    CHECK(to_word.code == kExitOk);
    json w = json::parse(to_word.out);
    CHECK(w["row_count"] == 3);

    TempFile word("w.json", to_word.out);
    RunResult back = run({"lattice", "--input", word.path, "--from-word"});
    CHECK(back.code == kExitOk);
    CHECK(std::get<StandardTableau>(tableau_from_json(json::parse(back.out))) ==
          make_standard({{1, 3, 4, 6}, {2, 5, 9}, {7, 8}}));
}

TEST_CASE("nc and plabic subcommands chain together") {
    TempFile tab("t5.json",
                 tableau_to_json(make_increasing(
                                     {{1, 2, 3, 5, 6, 8, 9, 12}, {3, 4, 5, 7, 8, 10, 11, 13}}, 13))
                     .dump());
    RunResult pi = run({"nc", "--op", "pi", "--input", tab.path});
    CHECK(pi.code == kExitOk);
    json p = json::parse(pi.out);
    CHECK(p["blocks"][0] == json::array({1, 5, 8, 11}));

    TempFile part("p.json", pi.out);
    RunResult web = run({"plabic", "--op", "from-partition", "--input", part.path});
    CHECK(web.code == kExitOk);

    TempFile webfile("web.json", web.out);
    RunResult trip = run({"plabic", "--op", "trip", "--input", webfile.path, "--i", "1", "--r", "2"});
    CHECK(trip.code == kExitOk);
    PromotionDigraph d = digraph_from_json(json::parse(trip.out));
    CHECK(d.has_edge(1, 5));
    CHECK(d.has_edge(11, 1));

    RunResult inv = run({"nc", "--op", "pi-inverse", "--input", part.path, "--c", "8"});
    CHECK(inv.code == kExitOk);
}

TEST_CASE("enumerate subcommand emits parseable JSON lines") {
    RunResult r = run({"enumerate", "--family", "syt", "--shape", "2", "2"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        tableau_from_json(json::parse(line));
        ++count;
    }
    CHECK(count == 2);

    RunResult limited = run({"enumerate", "--family", "nc-partition", "--q", "4", "--limit", "3"});
    CHECK(limited.code == kExitOk);
}

TEST_CASE("verify subcommand runs selected checks") {
    RunResult r = run({"verify", "--check", "order_rect_standard", "--cap-rect-cells", "4"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        json report = json::parse(line);
        CHECK(report["status"] == "pass");
    }
}

TEST_CASE("exit codes") {
    RunResult usage = run({"promote"});
    CHECK(usage.code == kExitUsage);

    TempFile bad("bad.json", "{not json");
    RunResult parse = run({"promote", "--input", bad.path});
    CHECK(parse.code == kExitParse);

    RunResult missing = run({"promote", "--input", "promdig_no_such_file.json"});
    CHECK(missing.code == kExitParse);

    RunResult help = run({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("promote") != std::string::npos);
}
