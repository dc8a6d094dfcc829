#include "mccgs/report.hpp"

#include <doctest.h>

using namespace mccgs;

namespace {

const char* kEx1 =
    "params: a, b, c, d\n"
    "vars: x\n"
    "order_vars: lex\n"
    "order_params: lex\n"
    "system:\n"
    "a*x + b\n"
    "c*x + d\n";

const char* kEx2 =
    "params: u\n"
    "vars: x\n"
    "order_vars: lex\n"
    "order_params: lex\n"
    "system:\n"
    "u*(u*x + 1)\n"
    "(u*x + 1)*x\n";

} // namespace

TEST_CASE("problem files parse") {
    ProblemFile pf = parse_problem(kEx1);
    CHECK(pf.ring.params == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(pf.ring.vars == std::vector<std::string>{"x"});
    CHECK(pf.system.size() == 2);
    CHECK(pf.system[0] == parse_poly("a*x + b", pf.ring));
}

TEST_CASE("problem file errors carry line positions") {
    CHECK_THROWS_AS(parse_problem("vars: x\nsystem:\n"), parse_error);
    CHECK_THROWS_AS(parse_problem("params: a\nsystem:\nx + a\n"), parse_error); // no vars
    CHECK_THROWS_AS(parse_problem("vars: x\nbogus: 1\nsystem:\nx\n"), parse_error);
    CHECK_THROWS_AS(parse_problem("vars: x\norder_vars: fancy\nsystem:\nx\n"), parse_error);
    try {
        parse_problem("vars: x\nsystem:\nx + y\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 3); // the offending system line
    }
}

TEST_CASE("buildtree run and table") {
    ProblemFile pf = parse_problem(kEx1);
    ReportBundle b = run_problem(pf, RunOptions{});
    CHECK(b.cgs.cases.size() == 10);
    std::string table = emit_table(b);
    CHECK(table.find("lpp | basis | null cond. | non-null cond") == 0);
    CHECK(table.find("[x] | [x*c + d] | [a*d - b*c] | {c, a}") != std::string::npos);
}

TEST_CASE("mccgs run and table") {
    ProblemFile pf = parse_problem(kEx1);
    RunOptions opt;
    opt.mode = "mccgs";
    ReportBundle b = run_problem(pf, opt);
    CHECK(b.segments.size() == 3);
    std::string table = emit_table(b);
    CHECK(table.find("lpp | basis | sets of pairs (N,W)") == 0);
    CHECK(table.find("{x*c + d, x*a + b}") != std::string::npos);
    CHECK_THROWS_AS(run_problem(pf, RunOptions{"bogus"}), error);
}

TEST_CASE("JSON is deterministic and round-trips") {
    ProblemFile pf = parse_problem(kEx2);
    RunOptions opt;
    opt.mode = "mccgs";
    ReportBundle b1 = run_problem(pf, opt);
    ReportBundle b2 = run_problem(pf, opt);
    std::string j1 = emit_json(b1);
    CHECK(j1 == emit_json(b2));

    auto parsed = nlohmann::ordered_json::parse(j1);
    CHECK(parsed.dump(2) + "\n" == j1);
    CHECK(parsed["mode"] == "mccgs");
    CHECK(parsed["segments"].size() == 2);
    CHECK(parsed["diagnostics"]["warnings"][0] == "no common reduced basis for lpp [x]");
    CHECK(parsed["seed"] == 1);
}

TEST_CASE("DOT labels the generic terminal") {
    ProblemFile pf = parse_problem(kEx1);
    ReportBundle b = run_problem(pf, RunOptions{});
    std::string dot = emit_dot(*b.tree, b.ring);
    CHECK(dot.find("digraph buildtree") == 0);
    CHECK(dot.find("[label=\"[1,1,1]\\n[1]\"]") != std::string::npos);
    CHECK(dot.find("[style=dashed]") != std::string::npos);
    CHECK(dot.find("[style=solid]") != std::string::npos);
}

TEST_CASE("JSON schema keys appear in stable order") {
    ProblemFile pf = parse_problem(kEx1);
    ReportBundle b = run_problem(pf, RunOptions{});
    std::string j = emit_json(b);
    std::size_t mode = j.find("\"mode\"");
    std::size_t ring = j.find("\"ring\"");
    std::size_t segs = j.find("\"segments\"");
    std::size_t diag = j.find("\"diagnostics\"");
    std::size_t seed = j.find("\"seed\"");
    CHECK(mode < ring);
    CHECK(ring < segs);
    CHECK(segs < diag);
    CHECK(diag < seed);
}
