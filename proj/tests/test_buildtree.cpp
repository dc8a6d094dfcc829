#include "mccgs/buildtree.hpp"
#include "mccgs/parse.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace mccgs;

namespace {

struct Row {
    std::vector<const char*> basis;
    std::vector<const char*> null_cond;
    std::vector<const char*> non_null;
};

bool matches(const Case& c, const Row& row, const Ring& r) {
    std::vector<Polynomial> basis, w;
    for (const char* s : row.basis) basis.push_back(parse_poly(s, r));
    for (const char* s : row.non_null) w.push_back(parse_poly(s, r));
    std::vector<Polynomial> n;
    for (const char* s : row.null_cond) n.push_back(parse_poly(s, r));
    if (c.basis != basis) return false;
    if (c.spec.N != Ideal(n, r)) return false;
    std::multiset<std::string> got, want;
    for (const auto& p : c.spec.W) got.insert(to_string(p, r));
    for (const auto& p : w) want.insert(to_string(p, r));
    return got == want;
}

} // namespace

TEST_CASE("system ex1: the ten terminal cases") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto tree = buildtree({parse_poly("a*x + b", r), parse_poly("c*x + d", r)}, r);
    CGS cgs = terminal_cases(*tree, r);
    REQUIRE(cgs.cases.size() == 10);

    // the expected table, rows as (basis, N, W) triples
    std::vector<Row> rows = {
        {{"1"}, {}, {"a", "a*d - c*b", "c"}},
        {{"x*c + d"}, {"a*d - c*b"}, {"a", "c"}},
        {{"1"}, {"a"}, {"b", "c"}},
        {{"x*c + d"}, {"b", "a"}, {"c"}},
        {{"1"}, {"c"}, {"a", "d"}},
        {{"1"}, {"c", "a"}, {"b", "d"}},
        {{"1"}, {"c", "b", "a"}, {"d"}},
        {{"x*a + b"}, {"d", "c"}, {"a"}},
        {{"1"}, {"d", "c", "a"}, {"b"}},
        {{}, {"d", "c", "b", "a"}, {}},
    };
    for (const auto& row : rows) {
        int hits = 0;
        for (const auto& c : cgs.cases)
            if (matches(c, row, r)) ++hits;
        CHECK(hits == 1);
    }

    // the generic case leads and carries the all-ones label
    for (int b : cgs.cases[0].label) CHECK(b == 1);
    CHECK(cgs.cases[0].basis == std::vector<Polynomial>{parse_poly("1", r)});
}

TEST_CASE("system ex2: two segments with the same lpp") {
    Ring r({"u"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto tree = buildtree({parse_poly("u*(u*x + 1)", r), parse_poly("(u*x + 1)*x", r)}, r);
    CGS cgs = terminal_cases(*tree, r);
    REQUIRE(cgs.cases.size() == 2);
    CHECK(cgs.cases[0].basis == std::vector<Polynomial>{parse_poly("x*u + 1", r)});
    CHECK(cgs.cases[0].spec.N.is_zero());
    CHECK(cgs.cases[1].basis == std::vector<Polynomial>{parse_poly("x", r)});
    CHECK(cgs.cases[1].spec.N == Ideal({parse_poly("u", r)}, r));
}

TEST_CASE("system ex3: eleven cases grouped (3,3,1,1,1,1,1)") {
    Ring r({"a", "b", "c"}, {"x", "y"}, OrderKind::lex, OrderKind::lex);
    auto tree = buildtree({parse_poly("a*x^2*y + a + 3*b^2", r),
                           parse_poly("a*(b - c)*x*y + a*b*x + 5*c", r)},
                          r);
    CGS cgs = terminal_cases(*tree, r);
    CHECK(cgs.cases.size() == 11);
    auto groups = group_by_lpp(cgs, r);
    std::vector<std::size_t> sizes;
    for (const auto& g : groups) sizes.push_back(g.size());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    CHECK(sizes == std::vector<std::size_t>{3, 3, 1, 1, 1, 1, 1});

    // the expected [y, x] group
    std::vector<std::vector<Polynomial>> want = {
        {parse_poly("y", r), parse_poly("3*b^3*x - 5*c", r)},
        {parse_poly("a^2*y + 25", r), parse_poly("5*x + a", r)},
        {parse_poly("25*y + 3*a*c^2 + a^2", r), parse_poly("a*x + 5", r)},
    };
    const std::vector<Case>* yx = nullptr;
    for (const auto& g : groups)
        if (lpp_set_to_string(g[0].lpp_set, r) == "[y, x]") yx = &g;
    REQUIRE(yx != nullptr);
    REQUIRE(yx->size() == 3);
    for (const auto& basis : want) {
        int hits = 0;
        for (const auto& c : *yx)
            if (c.basis == basis) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("terminal bases are reduced over their segments") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto tree = buildtree({parse_poly("a*x + b", r), parse_poly("c*x + d", r)}, r);
    CGS cgs = terminal_cases(*tree, r);
    for (const auto& c : cgs.cases)
        for (const auto& f : c.basis)
            if (!f.is_constant()) CHECK(is_reduced_over(f, c.spec, r));
}

TEST_CASE("sibling segments are disjoint at the branch polynomial") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto tree = buildtree({parse_poly("a*x + b", r), parse_poly("c*x + d", r)}, r);
    std::function<void(const Vertex&)> walk = [&](const Vertex& v) {
        if (v.is_terminal()) return;
        if (v.null_child) {
            CHECK(v.null_child->spec.N.contains(*v.branch_poly, r));
            walk(*v.null_child);
        }
        if (v.nonnull_child) {
            CHECK(wstar_member(*v.branch_poly, v.nonnull_child->spec, r));
            walk(*v.nonnull_child);
        }
    };
    walk(*tree);
}

TEST_CASE("single case yields one group") {
    Ring r({"a"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto tree = buildtree({parse_poly("x + a", r)}, r);
    CGS cgs = terminal_cases(*tree, r);
    REQUIRE(cgs.cases.size() == 1);
    CHECK(group_by_lpp(cgs, r).size() == 1);
}
