#include "mccgs/parse.hpp"
#include "mccgs/primedec.hpp"

#include <doctest.h>

using namespace mccgs;

namespace {

Ring pring() { return Ring({"a", "b", "c", "d"}, {"x"}, OrderKind::lex, OrderKind::lex); }

bool contains_ideal(const PrimeList& pl, const Ideal& p) {
    for (const auto& q : pl.primes)
        if (q == p) return true;
    return false;
}

} // namespace

TEST_CASE("minimal primes of the system ex1 discriminant locus") {
    Ring r = pring();
    Ideal n({parse_poly("a*d - c*b", r), parse_poly("a*c", r)}, r);
    PrimeList pl = minimal_primes(n, r);
    REQUIRE(pl.primes.size() == 3);
    CHECK(contains_ideal(pl, Ideal({parse_poly("a", r), parse_poly("b", r)}, r)));
    CHECK(contains_ideal(pl, Ideal({parse_poly("a", r), parse_poly("c", r)}, r)));
    CHECK(contains_ideal(pl, Ideal({parse_poly("c", r), parse_poly("d", r)}, r)));
    CHECK(pl.complete());
}

TEST_CASE("principal ideals split into their irreducible factors") {
    Ring r = pring();
    PrimeList pl = minimal_primes(Ideal({parse_poly("a*b + 3*b^3", r)}, r), r);
    REQUIRE(pl.primes.size() == 2);
    CHECK(contains_ideal(pl, Ideal({parse_poly("b", r)}, r)));
    CHECK(contains_ideal(pl, Ideal({parse_poly("a + 3*b^2", r)}, r)));
}

TEST_CASE("radical via intersection of minimal primes") {
    Ring r = pring();
    Ideal n({parse_poly("a^2*b", r), parse_poly("a*b^2", r)}, r);
    CHECK(radical(n, r) == Ideal({parse_poly("a*b", r)}, r));
    CHECK(radical(Ideal({parse_poly("a^2", r)}, r), r) == Ideal({parse_poly("a", r)}, r));
    // the unit ideal stays the unit ideal
    CHECK(radical(Ideal({parse_poly("1", r)}, r), r).is_unit());
}

TEST_CASE("irredundance: contained components win") {
    Ring r = pring();
    // V(ab, b) = V(b): the <a,b> branch is swallowed by <b>
    PrimeList pl = minimal_primes(Ideal({parse_poly("a*b", r), parse_poly("b", r)}, r), r);
    REQUIRE(pl.primes.size() == 1);
    CHECK(pl.primes[0] == Ideal({parse_poly("b", r)}, r));
}

TEST_CASE("primality certificates") {
    Ring r = pring();
    CHECK(is_prime_certified(Ideal({parse_poly("a*d - b*c", r)}, r), r));
    CHECK(is_prime_certified(Ideal({parse_poly("a", r), parse_poly("b", r)}, r), r));
    CHECK(is_prime_certified(Ideal(std::vector<Polynomial>{}, r), r));   // zero ideal
    CHECK(!is_prime_certified(Ideal({parse_poly("1", r)}, r), r));       // unit ideal
    CHECK(!is_prime_certified(Ideal({parse_poly("a*b", r)}, r), r));     // reducible
    CHECK(is_prime_certified(Ideal({parse_poly("c", r), parse_poly("a + 3*b^2", r)}, r), r));
}

TEST_CASE("decomposition is deterministic") {
    Ring r = pring();
    Ideal n({parse_poly("a*d - c*b", r), parse_poly("a*c", r)}, r);
    PrimeList p1 = minimal_primes(n, r);
    PrimeList p2 = minimal_primes(n, r);
    REQUIRE(p1.primes.size() == p2.primes.size());
    for (std::size_t i = 0; i < p1.primes.size(); ++i) CHECK(p1.primes[i] == p2.primes[i]);
}
