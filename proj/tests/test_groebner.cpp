#include "mccgs/groebner.hpp"
#include "mccgs/parse.hpp"

#include <doctest.h>

using namespace mccgs;

namespace {

Ring param_ring() { return Ring({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex); }

} // namespace

TEST_CASE("reduced basis of a linear system") {
    Ring r({}, {"x", "y"}, OrderKind::lex, OrderKind::lex);
    auto gb = groebner_basis({parse_poly("x + y", r), parse_poly("x - y", r)}, r);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == parse_poly("y", r));
    CHECK(gb[1] == parse_poly("x", r));
}

TEST_CASE("normal form and division identity") {
    Ring r({}, {"x", "y"}, OrderKind::grevlex, OrderKind::lex);
    auto gb = groebner_basis({parse_poly("x^2 - y", r), parse_poly("x*y - 1", r)}, r);
    Polynomial f = parse_poly("x^5 + y^3 + x + 1", r);
    auto [q, rem] = divide_full(f, gb, r);
    Polynomial recomposed = rem;
    for (std::size_t i = 0; i < gb.size(); ++i) recomposed = recomposed + q[i] * gb[i];
    CHECK(recomposed == f);
    CHECK(normal_form(f, gb, r) == rem);
    CHECK(normal_form(rem, gb, r) == rem);
    // members of the ideal reduce to zero
    Polynomial member = parse_poly("(x^2 - y)*(x + y) + (x*y - 1)*y^2", r);
    CHECK(normal_form(member, gb, r).is_zero());
}

TEST_CASE("gbex cofactor matrix expresses the basis in the generators") {
    Ring r = param_ring();
    std::vector<Polynomial> gens = {parse_poly("a + 3*b^2", r), parse_poly("b", r)};
    GBWithCofactors g = gbex(gens, r);
    REQUIRE(g.matrix.size() == g.basis.size());
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
        Polynomial sum;
        for (std::size_t j = 0; j < gens.size(); ++j) sum = sum + g.matrix[i][j] * gens[j];
        CHECK(sum == g.basis[i]);
    }
}

TEST_CASE("ideal intersection, quotient, saturation") {
    Ring r = param_ring();
    Ideal ia({parse_poly("a", r)}, r);
    Ideal ib({parse_poly("b", r)}, r);
    Ideal iab({parse_poly("a*b", r)}, r);
    CHECK(ideal_intersection(ia, ib, r) == iab);
    CHECK(ideal_quotient(iab, ia, r) == ib);

    Ideal big({parse_poly("a^2*b", r)}, r);
    CHECK(saturation(big, parse_poly("a", r), r) == ib);
    // quotient by a non-divisor leaves the ideal unchanged
    Ideal p({parse_poly("a", r), parse_poly("b", r)}, r);
    Ideal q({parse_poly("c", r)}, r);
    CHECK(ideal_quotient(p, q, r) == p);
}

TEST_CASE("ideal membership and radical membership") {
    Ring r = param_ring();
    Ideal n({parse_poly("a^2", r)}, r);
    CHECK(!n.contains(parse_poly("a", r), r));
    CHECK(n.contains(parse_poly("a^2*b + a^3", r), r));
    CHECK(radical_membership(parse_poly("a", r), n, r));
    CHECK(!radical_membership(parse_poly("b", r), n, r));
    CHECK(Ideal::unit(r).is_unit());
    Ideal unit_detected({parse_poly("a", r), parse_poly("a + 1", r)}, r);
    CHECK(unit_detected.is_unit());
}

TEST_CASE("parametric normal form reduces coefficients") {
    Ring r = param_ring();
    Ideal n({parse_poly("a*d - b*c", r)}, r);
    Polynomial f = parse_poly("a*d*x - b*c*x + a", r);
    CHECK(normal_form(f, n.basis(), r) == parse_poly("a", r));
}
