#include "mccgs/merge.hpp"
#include "mccgs/parse.hpp"

#include <doctest.h>

using namespace mccgs;

namespace {

RedSpec spec_of(const char* ngen, std::vector<const char*> w, const Ring& r) {
    std::vector<Polynomial> n;
    if (ngen) n.push_back(parse_poly(ngen, r));
    std::vector<Polynomial> ws;
    for (const char* s : w) ws.push_back(parse_poly(s, r));
    return *make_redspec(Ideal(n, r), ws, r);
}

} // namespace

TEST_CASE("decide: identity case") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto s = spec_of("a*d - b*c", {"a", "c"}, r);
    Polynomial f = parse_poly("c*x + d", r);
    DecideResult d = decide(f, s, f, s, MergeBounds{}, r);
    CHECK(d.kind == DecideResult::poly);
    CHECK(d.members[0] == f);
}

TEST_CASE("decide: one polynomial already covers the other segment") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    // c*x + d specializes well on the segment (b = a = 0, c nonzero)
    auto s1 = spec_of("a*d - b*c", {"a", "c"}, r);
    auto s2 = spec_of(nullptr, {"c"}, r);
    // make s2's N = <b, a>
    s2 = *make_redspec(Ideal({parse_poly("b", r), parse_poly("a", r)}, r),
                       {parse_poly("c", r)}, r);
    DecideResult d =
        decide(parse_poly("c*x + d", r), s1, parse_poly("c*x + d", r), s2, MergeBounds{}, r);
    CHECK(d.kind == DecideResult::poly);
}

TEST_CASE("system ex1 MCCGS: three merged segments with the expected sheaf") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    MergeDiagnostics diag;
    auto segs = mccgs_segments({parse_poly("a*x + b", r), parse_poly("c*x + d", r)}, r, {},
                               &diag);
    REQUIRE(segs.size() == 3);
    CHECK(lpp_set_to_string(segs[0].lpp_set, r) == "[1]");
    CHECK(segs[0].subsegments.size() == 6);
    REQUIRE(segs[0].basis.size() == 1);
    CHECK(segs[0].basis[0].members == std::vector<Polynomial>{parse_poly("1", r)});

    CHECK(lpp_set_to_string(segs[1].lpp_set, r) == "[x]");
    CHECK(segs[1].subsegments.size() == 3);
    REQUIRE(segs[1].basis.size() == 1);
    CHECK(segs[1].basis[0].is_sheaf());
    CHECK(segs[1].basis[0].members ==
          std::vector<Polynomial>{parse_poly("x*c + d", r), parse_poly("x*a + b", r)});

    CHECK(lpp_set_to_string(segs[2].lpp_set, r) == "[]");
    CHECK(segs[2].subsegments.size() == 1);
    CHECK(segs[2].subsegments[0].N ==
          Ideal({parse_poly("a", r), parse_poly("b", r), parse_poly("c", r),
                 parse_poly("d", r)},
                r));
    CHECK(segs[2].subsegments[0].W.empty());
    CHECK(diag.violations.empty());
}

TEST_CASE("system ex2: no common basis, pre-image search exhausts") {
    Ring r({"u"}, {"x"}, OrderKind::lex, OrderKind::lex);
    MergeDiagnostics diag;
    auto segs = mccgs_segments({parse_poly("u*(u*x + 1)", r), parse_poly("(u*x + 1)*x", r)}, r,
                               {}, &diag);
    CHECK(segs.size() == 2);
    REQUIRE(diag.warnings.size() >= 1);
    CHECK(diag.warnings[0] == "no common reduced basis for lpp [x]");

    auto s1 = spec_of(nullptr, {"u"}, r);
    auto s2 = spec_of("u", {}, r);
    auto g = genimage(parse_poly("u*x + 1", r), s1, parse_poly("x", r), s2, 4, 4, r);
    CHECK(!g.has_value());
}

TEST_CASE("system ex3: the [y, x] group admits a common pre-image basis") {
    Ring r({"a", "b", "c"}, {"x", "y"}, OrderKind::lex, OrderKind::lex);
    MergeBounds mb;
    mb.genimage_l = mb.genimage_m = 4;
    MergeDiagnostics diag;
    auto segs = mccgs_segments({parse_poly("a*x^2*y + a + 3*b^2", r),
                                parse_poly("a*(b - c)*x*y + a*b*x + 5*c", r)},
                               r, mb, &diag);
    CHECK(segs.size() == 7);
    const MergedSegment* yx = nullptr;
    for (const auto& s : segs)
        if (lpp_set_to_string(s.lpp_set, r) == "[y, x]") yx = &s;
    REQUIRE(yx != nullptr);
    CHECK(yx->subsegments.size() == 3);
    REQUIRE(yx->basis.size() == 2);

    // the pre-image basis specializes well to all three expected bases
    std::vector<std::vector<Polynomial>> expected = {
        {parse_poly("y", r), parse_poly("3*b^3*x - 5*c", r)},
        {parse_poly("a^2*y + 25", r), parse_poly("5*x + a", r)},
        {parse_poly("25*y + 3*a*c^2 + a^2", r), parse_poly("a*x + 5", r)},
    };
    std::vector<RedSpec> subsegs = {
        spec_of("a + 3*b^2", {"b - c", "c", "b"}, r),
        spec_of("b", {"c", "a"}, r),
        spec_of("b - c", {"c", "a"}, r),
    };
    for (std::size_t pos = 0; pos < 2; ++pos) {
        CHECK(!yx->basis[pos].is_sheaf());
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(specializes_well(yx->basis[pos].members[0], expected[i][pos], subsegs[i],
                                   r));
    }
}

TEST_CASE("genimage postcondition on success") {
    Ring r({"a", "b", "c"}, {"x", "y"}, OrderKind::lex, OrderKind::lex);
    auto s1 = spec_of("a + 3*b^2", {"b - c", "c", "b"}, r);
    auto s2 = spec_of("b", {"c", "a"}, r);
    Polynomial f1 = parse_poly("y", r), f2 = parse_poly("a^2*y + 25", r);
    auto g = genimage(f1, s1, f2, s2, 2, 2, r);
    REQUIRE(g.has_value());
    CHECK(specializes_well(*g, f1, s1, r));
    CHECK(specializes_well(*g, f2, s2, r));
    CHECK(lpp(*g, r) == lpp(f1, r));

    Polynomial g1 = parse_poly("3*b^3*x - 5*c", r), g2 = parse_poly("5*x + a", r);
    auto h = genimage(g1, s1, g2, s2, 2, 2, r);
    REQUIRE(h.has_value());
    CHECK(specializes_well(*h, g1, s1, r));
    CHECK(specializes_well(*h, g2, s2, r));
}

TEST_CASE("genimage rejects mismatched leading power products") {
    Ring r({"a"}, {"x", "y"}, OrderKind::lex, OrderKind::lex);
    auto s = spec_of(nullptr, {"a"}, r);
    CHECK_THROWS_AS(genimage(parse_poly("x", r), s, parse_poly("y", r), s, 2, 2, r), error);
}

TEST_CASE("merged bases keep the group lpp set") {
    Ring r({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex);
    auto segs = mccgs_segments({parse_poly("a*x + b", r), parse_poly("c*x + d", r)}, r, {});
    for (const auto& s : segs) {
        REQUIRE(s.basis.size() == s.lpp_set.size());
        for (std::size_t i = 0; i < s.basis.size(); ++i)
            for (const auto& m : s.basis[i].members) CHECK(lpp(m, r) == s.lpp_set[i]);
    }
}
