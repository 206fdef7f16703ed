#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nilcone/commands.hpp"
#include "nilcone/enhanced.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/exotic.hpp"
#include "nilcone/hasse.hpp"
#include "nilcone/io.hpp"
#include "nilcone/jordan_classes.hpp"
#include "nilcone/linalg.hpp"
#include "nilcone/verify.hpp"

using namespace nilcone;
using nlohmann::json;

namespace {

const Field Q = Field::rationals();

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

std::string temp_path(const std::string& name) { return "/tmp/nilcone_test_" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

std::size_t count_substr(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

const Bipartition kThirteen{{2, 2, 2, 1}, {2, 2, 1, 1}};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("orbits table") {
    const auto rows = lines(cli::cmd_orbits(2, cli::TableFormat::table));
    REQUIRE(rows.size() == 6);
    bool found = false;
    for (const auto& r : rows) {
        std::istringstream is(r);
        std::string label, enh, exo, rigid;
        is >> label >> enh >> exo >> rigid;
        if (label == "(;2)") {
            found = true;
            CHECK(enh == "2");
            CHECK(exo == "4");
            CHECK(rigid == "false");
        }
    }
    CHECK(found);
    CHECK(lines(cli::cmd_orbits(1, cli::TableFormat::csv)).size() == 3);
    const json j = json::parse(cli::cmd_orbits(4, cli::TableFormat::json));
    CHECK(j.size() == 20);
    CHECK(j[0].contains("enh_dim"));
    CHECK_THROWS_AS(cli::cmd_orbits(31, cli::TableFormat::table), BudgetExceeded);
}

TEST_CASE("classes and sheets tables") {
    CHECK(lines(cli::cmd_classes(2, cli::TableFormat::csv)).size() == 9);
    CHECK(json::parse(cli::cmd_classes(3, cli::TableFormat::json)).size() == 24);
    const auto sheets = lines(cli::cmd_sheets(2, cli::TableFormat::csv));
    REQUIRE(sheets.size() == 6);
    CHECK(sheets[0] == "lambda,choice,enh_dim,exo_dim,nilpotent_orbit");
    CHECK(sheets[3] == "\"1,1\",\"VEC,VEC\",6,10,(2;)");
    CHECK_THROWS(cli::parse_table_format("xml"));
}

TEST_CASE("induce") {
    cli::InduceRequest req;
    req.levi = "3,4,4,2";
    req.bipartitions = "1^3;|1^4;|;1^4|;1^2";
    CHECK(lines(cli::cmd_induce(req)).front() == "(2^3,1;2^2,1^2)");

    req.levi = "13";
    req.bipartitions = "2^3,1;2^2,1^2";
    CHECK(lines(cli::cmd_induce(req)).front() == "(2^3,1;2^2,1^2)");

    req = {};
    req.levi = "4,2,3,5";
    req.rigid_prefix = 2;
    CHECK(lines(cli::cmd_induce(req)).front() == "(2^2,1^2;2^3,1^2)");
    req.style = TextStyle::expanded;
    CHECK(lines(cli::cmd_induce(req)).front() == "(2,2,1,1;2,2,2,1,1)");

    req = {};
    req.levi = "3,1";
    req.bipartitions = "1^3;|;1^2";
    CHECK_THROWS_AS(cli::cmd_induce(req), SizeMismatch);
    req.bipartitions = "1^3;|x";
    CHECK_THROWS_AS(cli::cmd_induce(req), ParseError);
}

TEST_CASE("induce with representative dump") {
    cli::InduceRequest req;
    req.levi = "3,4,4,2";
    req.bipartitions = "1^3;|1^4;|;1^4|;1^2";
    req.representative = true;
    const std::string out = cli::cmd_induce(req);
    const auto first_newline = out.find('\n');
    const AnyElement e = element_from_json(out.substr(first_newline + 1));
    REQUIRE(std::holds_alternative<EnhancedElement>(e));
    CHECK(identify_orbit(std::get<EnhancedElement>(e)) == kThirteen);
}

TEST_CASE("identify") {
    const std::string thirteen = element_to_json(AnyElement(build_representative(kThirteen, Q, RepresentativeConvention::summed)));
    CHECK(lines(cli::cmd_identify_text(thirteen, cli::IdentifyLevel::orbit)).front() == "(2^3,1;2^2,1^2)");
    CHECK(lines(cli::cmd_identify_text(element_to_json(AnyElement(EnhancedElement::zero(Q, 3))), cli::IdentifyLevel::orbit))
              .front() == "(;1^3)");
    const std::string reg = R"({"n":2,"module":"enhanced","field":{"type":"Q"},"v":["1","1"],"x":[["1","0"],["0","2"]]})";
    CHECK(lines(cli::cmd_identify_text(reg, cli::IdentifyLevel::klass)).front() == "λ=[1,1] ; blocks=[(1;),(1;)]");
    CHECK_THROWS_AS(cli::cmd_identify_text(reg, cli::IdentifyLevel::orbit), NotNilpotent);
    const std::string rot = R"({"n":2,"module":"enhanced","field":{"type":"Q"},"v":["0","0"],"x":[["0","-1"],["1","0"]]})";
    CHECK_THROWS_AS(cli::cmd_identify_text(rot, cli::IdentifyLevel::klass), NonSplitSpectrum);
    const std::string exotic = element_to_json(AnyElement(embed_phi(build_representative({{}, {2}}))));
    CHECK(lines(cli::cmd_identify_text(exotic, cli::IdentifyLevel::orbit)).front() == "(;2)");
}

TEST_CASE("element documents round-trip") {
    std::vector<AnyElement> elems{
        AnyElement(build_representative(kThirteen, Q)),
        AnyElement(build_representative({{1}, {2}}, Field::prime(5))),
        AnyElement(embed_phi(build_representative({{1}, {1}}))),
        AnyElement(EnhancedElement(Vector({Q, {Scalar::parse(Q, "-1/2"), Scalar(Q, 3)}}),
                                   Matrix::from_ints(Q, {{1, -7}, {0, 2}}))),
    };
    for (const auto& e : elems) {
        const std::string text = element_to_json(e);
        const AnyElement back = element_from_json(text);
        CHECK(back == e);
        CHECK(element_to_json(back) == text);
    }
    const json doc = json::parse(element_to_json(elems[2]));
    CHECK(doc["n"] == 2);
    CHECK(doc["module"] == "exotic");
    CHECK(doc["v"].size() == 4);

    const AnyElement ints = element_from_json(R"({"n":1,"module":"enhanced","field":{"type":"Fp","p":3},"v":[1],"x":[[5]]})");
    CHECK(std::get<EnhancedElement>(ints).x(0, 0).residue() == 2);
}

TEST_CASE("element document errors") {
    CHECK_THROWS_AS(element_from_json("not json"), ParseError);
    CHECK_THROWS_AS(element_from_json(R"({"n":1,"module":"enhanced","field":{"type":"Q"},"v":["1"]})"), ParseError);
    CHECK_THROWS_AS(element_from_json(R"({"n":1,"module":"other","field":{"type":"Q"},"v":["1"],"x":[["0"]]})"), ParseError);
    CHECK_THROWS_AS(element_from_json(R"({"n":2,"module":"enhanced","field":{"type":"Q"},"v":["1"],"x":[["0"]]})"), ParseError);
    CHECK_THROWS_AS(element_from_json(R"({"n":1,"module":"enhanced","field":{"type":"Fp","p":4},"v":["1"],"x":[["0"]]})"), ParseError);
    CHECK_THROWS(element_from_json(R"({"n":1,"module":"exotic","field":{"type":"Fp","p":2},"v":["1","0"],"x":[["0","0"],["0","0"]]})"));
    CHECK_THROWS_AS(read_element_file("/nonexistent/element.json"), IOError);
}

TEST_CASE("hasse diagrams") {
    const auto h = orbit_hasse(2);
    CHECK(h.labels.size() == 5);
    // The zero orbit is the unique minimum.
    std::size_t bottom = h.labels.size();
    for (std::size_t i = 0; i < h.labels.size(); ++i) {
        bool has_lower = false;
        for (const auto& [lo, hi] : h.edges) has_lower |= hi == i;
        if (!has_lower) {
            CHECK(bottom == h.labels.size());
            bottom = i;
        }
    }
    REQUIRE(bottom < h.labels.size());
    CHECK(h.labels[bottom] == "(;1^2)");
    CHECK(orbit_hasse(2, TextStyle::expanded).labels[bottom] == "(;1,1)");
    CHECK(class_hasse(2).labels.size() == 8);
    const auto s = sheet_hasse(2);
    CHECK(s.labels.size() == 5);
    CHECK(s.edges.empty());
    CHECK_THROWS_AS(orbit_hasse(11), BudgetExceeded);
    CHECK_THROWS_AS(class_hasse(7), BudgetExceeded);
}

TEST_CASE("hasse reduction reproduces the order") {
    for (int n = 1; n <= 6; ++n) {
        const auto orbits = enumerate_bipartitions(n);
        const auto h = orbit_hasse(n);
        REQUIRE(h.labels.size() == orbits.size());
        const auto reach = reachability(h);
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            REQUIRE(h.labels[i] == orbits[i].to_string());
            for (std::size_t j = 0; j < orbits.size(); ++j) CHECK(reach[i][j] == closure_leq(orbits[i], orbits[j]));
        }
        // Covering edges are not implied by other edges.
        for (const auto& [lo, hi] : h.edges)
            for (std::size_t k = 0; k < orbits.size(); ++k)
                if (k != lo && k != hi) CHECK_FALSE((reach[lo][k] && reach[k][hi]));
    }
    for (int n = 1; n <= 4; ++n) {
        const auto classes = enumerate_classes(n);
        const auto h = class_hasse(n);
        const auto reach = reachability(h);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = 0; j < classes.size(); ++j) CHECK(reach[i][j] == class_closure_leq(classes[i], classes[j]));
    }
    CHECK_THROWS_AS(hasse_from_order({"a", "b"}, {0, 0}, [](std::size_t, std::size_t) { return true; }), std::logic_error);
}

TEST_CASE("dot output") {
    const std::string dot = cli::cmd_hasse(2, cli::HasseKind::orbits);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count_substr(dot, "[label=") == 5);
    CHECK(count_substr(dot, " -> ") == 5);
    CHECK(count_substr(cli::cmd_hasse(2, cli::HasseKind::classes), "[label=") == 8);
    const std::string sheets = cli::cmd_hasse(2, cli::HasseKind::sheets);
    CHECK(count_substr(sheets, "[label=") == 5);
    CHECK(count_substr(sheets, " -> ") == 0);
}

TEST_CASE("verify suites") {
    cli::VerifyRequest req;
    req.suite = "closure";
    req.n = 2;
    req.p = 2;
    auto [text, ok] = cli::cmd_verify(req);
    CHECK(ok);
    json j = json::parse(text);
    CHECK(j["status"] == "pass");
    CHECK(j["checks"] == 25);

    req = {};
    req.suite = "jkv";
    std::tie(text, ok) = cli::cmd_verify(req);
    CHECK(ok);
    j = json::parse(text);
    CHECK(j["groups"].size() == 2);

    for (const char* suite : {"induction", "classes", "quotient"}) {
        req = {};
        req.suite = suite;
        req.n = 3;
        std::tie(text, ok) = cli::cmd_verify(req);
        CAPTURE(suite);
        CHECK(ok);
    }
    req = {};
    req.suite = "closure";
    req.n = 5;
    CHECK_THROWS_AS(cli::cmd_verify(req), BudgetExceeded);
}

TEST_CASE("doubling suite at n = 3") {
    cli::VerifyRequest req;
    req.suite = "doubling";
    req.n = 3;
    const auto [text, ok] = cli::cmd_verify(req);
    const json j = json::parse(text);
    for (const auto& g : j["groups"]) {
        CAPTURE(g["name"].get<std::string>());
        CHECK(g["checks"] == 10);
        CHECK(g["status"] == "pass");
    }
    CHECK(ok);
}

TEST_CASE("parallel verify matches serial") {
    cli::VerifyRequest req;
    req.suite = "closure";
    req.n = 3;
    req.p = 3;
    const auto serial = json::parse(cli::cmd_verify(req).first);
    req.parallel = true;
    const auto parallel = json::parse(cli::cmd_verify(req).first);
    CHECK(serial["checks"] == parallel["checks"]);
    CHECK(serial["failures"] == parallel["failures"]);
}

TEST_CASE("commands are deterministic") {
    CHECK(cli::cmd_orbits(4, cli::TableFormat::csv) == cli::cmd_orbits(4, cli::TableFormat::csv));
    CHECK(cli::cmd_hasse(3, cli::HasseKind::classes) == cli::cmd_hasse(3, cli::HasseKind::classes));
    cli::VerifyRequest req;
    req.suite = "quotient";
    req.n = 2;
    req.seed = 99;
    auto a = json::parse(cli::cmd_verify(req).first);
    auto b = json::parse(cli::cmd_verify(req).first);
    CHECK(a["checks"] == b["checks"]);
    CHECK(a["seed"] == 99);
}

TEST_CASE("jkv axioms") {
    for (auto [a, b] : {std::pair{1L, 3L}, std::pair{-2L, 5L}, std::pair{0L, 4L}}) {
        const auto e = jkv_example_element(a, b);
        const auto [ss, nil] = jkv_decompose(e);
        CHECK(check_jkv_axioms(e, ss.x, {1, 1}).all());
        CHECK(check_jkv_axioms(e, Matrix::diagonal({Scalar(Q, a), Scalar(Q, b)}), {2, 1}).all());
        CHECK(stabilizer_dim_gl(e.v, e.x) == 0);
    }
    // With b = a + 1 the vector (1,1) is an eigenvector of x.
    const auto e = jkv_example_element(1, 2);
    CHECK(stabilizer_dim_gl(e.v, e.x) == 1);
    const auto ax = check_jkv_axioms(e, Matrix::diagonal({Scalar(Q, 1), Scalar(Q, 2)}), {2, 1});
    CHECK(ax.semisimple);
    CHECK(ax.nilpotent);
    CHECK_FALSE(ax.stabilizer);
    // A weight vector outside G^s never certifies nilpotency.
    CHECK_FALSE(check_jkv_axioms(jkv_example_element(1, 3), Matrix::from_ints(Q, {{1, 1}, {0, 3}}), {2, 1}).nilpotent);
}

TEST_CASE("command line exit codes") {
    Run r = run_cli({"orbits", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 6);

    r = run_cli({"induce", "--levi", "4,2,3,5", "--rigid-prefix", "2", "--expanded"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).front() == "(2,2,1,1;2,2,2,1,1)");

    r = run_cli({"orbits", "--n", "31"});
    CHECK(r.code == 3);
    r = run_cli({"verify", "--suite", "closure", "--n", "5"});
    CHECK(r.code == 3);
    r = run_cli({"verify", "--suite", "jkv"});
    CHECK(r.code == 0);
    r = run_cli({"verify", "--suite", "nope"});
    CHECK(r.code == 2);
    r = run_cli({"frobnicate"});
    CHECK(r.code == 2);
    r = run_cli({"induce", "--levi", "3,1", "--bipartitions", "1^3;|;1^2"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    const std::string bad = write_temp("bad.json", "{");
    r = run_cli({"identify", bad});
    CHECK(r.code == 2);
    r = run_cli({"identify", "/nonexistent/file.json"});
    CHECK(r.code == 2);
    const std::string reg = write_temp("reg.json", R"({"n":2,"module":"enhanced","field":{"type":"Q"},"v":["1","1"],"x":[["1","0"],["0","2"]]})");
    r = run_cli({"identify", reg});
    CHECK(r.code == 2);
    r = run_cli({"identify", reg, "--level", "class"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).front() == "λ=[1,1] ; blocks=[(1;),(1;)]");
}

TEST_CASE("hasse output files") {
    const std::string path = temp_path("orbits.dot");
    std::remove(path.c_str());
    Run r = run_cli({"hasse", "--n", "2", "--kind", "orbits", "--out", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == cli::cmd_hasse(2, cli::HasseKind::orbits));
    r = run_cli({"hasse", "--n", "2", "--out", "/nonexistent/dir/x.dot"});
    CHECK(r.code == 2);
    r = run_cli({"hasse", "--n", "11"});
    CHECK(r.code == 3);
}

}  // TEST_SUITE
