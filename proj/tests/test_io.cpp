#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "chibound/io.hpp"

using namespace chibound;

namespace {

Graph parse_str(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in, "mem");
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("DIMACS parses the documented shape") {
    Graph g = parse_str("c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 3));
}

TEST_CASE("DIMACS round-trips through emit and parse") {
    for (const Graph& g : {Graph::cycle(5), Graph::complete_graph(4), Graph(3),
                           Graph(6, {{0, 5}, {1, 4}, {2, 3}, {0, 1}})}) {
        Graph back = parse_str(emit_dimacs(g));
        CHECK(back.n() == g.n());
        CHECK(back.edge_list() == g.edge_list());
    }
}

TEST_CASE("DIMACS diagnostics carry the line number") {
    auto line_of = [](const std::string& text) {
        try {
            parse_str(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("e 1 2\n") == 1);
    CHECK(line_of("p edge 3 1\nx 1 2\n") == 2);
    CHECK(line_of("p edge 3 2\ne 1 2\ne 1 4\n") == 3);
    CHECK(line_of("p edge 3 1\ne 2 2\n") == 2);
    CHECK(line_of("p edge 3 1\np edge 3 1\n") == 2);
    CHECK(line_of("p edge 3 2\ne 1 2\n") == 2); // count mismatch, reported at EOF
    CHECK(line_of("c only a comment\n") == 1);

    try {
        parse_str("p edge 2 1\ne 1 3\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).rfind("mem:2:", 0) == 0);
    }
}

TEST_CASE("graph JSON round-trips and validates") {
    Graph g = Graph::cycle(5);
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.edge_list() == g.edge_list());

    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2})")), parse_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[1,3]]})")),
                    parse_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[1,1]]})")),
                    parse_error);
}

TEST_CASE("loading dispatches on the file extension") {
    auto col = temp_file("chibound_io_test.col");
    auto js = temp_file("chibound_io_test.json");
    write_text_atomic(col.string(), emit_dimacs(Graph::cycle(6)));
    write_text_atomic(js.string(), graph_to_json(Graph::cycle(6)).dump());
    CHECK(load_graph(col.string()).edge_list() == Graph::cycle(6).edge_list());
    CHECK(load_graph(js.string()).edge_list() == Graph::cycle(6).edge_list());
    CHECK_THROWS(load_graph(temp_file("chibound_io_missing.col").string()));
    std::filesystem::remove(col);
    std::filesystem::remove(js);
}

TEST_CASE("a class report serializes with 1-indexed witnesses") {
    json j = class_report_to_json(is_in_class(Graph::cycle(4)));
    CHECK(j["in_class"] == false);
    CHECK(j["even_hole_free"] == false);
    std::vector<int> w = j["even_hole_witness"].get<std::vector<int>>();
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(j.contains("p7_witness"));

    json ok = class_report_to_json(is_in_class(Graph::cycle(5)));
    CHECK(ok["in_class"] == true);
    CHECK(ok["in_narrow_class"] == true);
}

TEST_CASE("a certificate serializes with 1-indexed keys and colors") {
    Graph g = Graph::cycle(5);
    BoundCertificate cert = color_in_class(g);
    json j = certificate_to_json(cert);
    CHECK(j["bound"] == 3);
    CHECK(j["bound_established"] == true);
    CHECK(j["coloring"].size() == 5);
    for (int v = 1; v <= 5; ++v) {
        int c = j["coloring"][std::to_string(v)].get<int>();
        CHECK(c >= 1);
        CHECK(c <= j["bound"].get<int>());
    }
    CHECK(j["omega_witness"].size() == 2);
    CHECK(j["class"]["in_class"] == true);
    CHECK(j["trace"].is_array());
}

TEST_CASE("a lemma report serializes both branches") {
    LemmaReport held;
    held.lemma = "support-consecutive";
    held.instance = "x";
    held.hypothesis_held = true;
    held.conclusion = LemmaStatus::Verified;
    json jh = lemma_report_to_json(held);
    CHECK(jh["conclusion"] == "VERIFIED");
    CHECK(jh["hypothesis"]["held"] == true);
    CHECK_FALSE(jh.contains("witness"));

    LemmaReport bad = held;
    bad.conclusion = LemmaStatus::Violated;
    bad.witness = "vertex 5";
    json jb = lemma_report_to_json(bad);
    CHECK(jb["conclusion"] == "VIOLATED");
    CHECK(jb["witness"] == "vertex 5");
}

TEST_CASE("atomic writes land whole and overwrite cleanly") {
    auto dir = temp_file("chibound_io_dir");
    auto path = dir / "nested" / "out.txt";
    write_text_atomic(path.string(), "first");
    write_text_atomic(path.string(), "second");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "second");
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove_all(dir);
}
