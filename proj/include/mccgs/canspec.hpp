#pragma once

#include "mccgs/redspec.hpp"

namespace mccgs {

/// Constructible set V(N) \ V(M) given by a pair of ideals N ⊆ M.
struct DiffSpec {
    Ideal N;
    Ideal M;
};

/// Canonical decomposition: union of components V(N_i) \ (∪_j V(M_ij)) with
/// N_i prime and M_ij the minimal primes of sqrt(M + N_i).
struct CanSpec {
    struct Component {
        Ideal N;
        std::vector<Ideal> M_list;
        bool warn = false;
    };
    std::vector<Component> components;
};

/// The diff-specification of a segment: M = N + <h>.
inline DiffSpec redspec_to_diffspec(const RedSpec& spec, const Ring& ring) {
    std::vector<Polynomial> gens = spec.N.gens();
    gens.push_back(spec.h);
    return {spec.N, Ideal(gens, ring)};
}

/// The canonical decomposition of V(N) \ V(M): for each minimal prime N_j of
/// N, subtract the minimal primes of M + N_j; components swallowed entirely
/// (sqrt(M + N_j) = N_j) are dropped, components with nothing to subtract
/// (sqrt = <1>) get an empty M_list.
inline CanSpec difftocanspec(const DiffSpec& d, const Ring& ring, int degree_bound = 6) {
    CanSpec out;
    PrimeList primesN = minimal_primes(d.N, ring, degree_bound);
    for (std::size_t j = 0; j < primesN.primes.size(); ++j) {
        const Ideal& nj = primesN.primes[j];
        Ideal mnj = ideal_sum(d.M, nj, ring);
        PrimeList primesM = minimal_primes(mnj, ring, degree_bound);
        CanSpec::Component comp;
        comp.N = nj;
        comp.warn = !primesN.certified[j] || !primesM.complete();
        if (primesM.primes.empty()) { // sqrt(M + N_j) = <1>
            out.components.push_back(std::move(comp));
            continue;
        }
        Ideal radical_m = primesM.primes[0];
        for (std::size_t k = 1; k < primesM.primes.size(); ++k)
            radical_m = ideal_intersection(radical_m, primesM.primes[k], ring);
        if (radical_m == nj) continue; // V(N_j) ⊆ V(M): disappears from the union
        comp.M_list = std::move(primesM.primes);
        out.components.push_back(std::move(comp));
    }
    std::sort(out.components.begin(), out.components.end(),
              [&](const CanSpec::Component& a, const CanSpec::Component& b) {
                  if (a.N.basis().size() != b.N.basis().size())
                      return a.N.basis().size() < b.N.basis().size();
                  return detail::cmp_basis(a.N.basis(), b.N.basis(), ring) < 0;
              });
    return out;
}

/// Ideal of the Zariski closure of the union: intersection of the N_i.
/// An empty CanSpec (empty set) maps to <1>.
inline Ideal canspec_closure(const CanSpec& c, const Ring& ring) {
    if (c.components.empty()) return Ideal::unit(ring);
    Ideal r = c.components[0].N;
    for (std::size_t i = 1; i < c.components.size(); ++i)
        r = ideal_intersection(r, c.components[i].N, ring);
    return r;
}

namespace detail {

inline std::string ideal_to_string(const Ideal& n, const Ring& ring) {
    std::string s = "[";
    for (std::size_t i = 0; i < n.basis().size(); ++i) {
        if (i) s += ", ";
        s += to_string(n.basis()[i], ring);
    }
    return s + "]";
}

} // namespace detail

/// Serialized form: V(N_i) \ ( V(M_i1) ∪ … ) joined by ∪; empty set is ∅.
inline std::string to_string(const CanSpec& c, const Ring& ring) {
    if (c.components.empty()) return "∅";
    std::string s;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        if (i) s += " ∪ ";
        s += "V(" + detail::ideal_to_string(c.components[i].N, ring) + ")";
        if (!c.components[i].M_list.empty()) {
            s += " \\ (";
            for (std::size_t j = 0; j < c.components[i].M_list.size(); ++j) {
                if (j) s += " ∪ ";
                s += "V(" + detail::ideal_to_string(c.components[i].M_list[j], ring) + ")";
            }
            s += ")";
        }
    }
    return s;
}

} // namespace mccgs
