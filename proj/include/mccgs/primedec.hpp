#pragma once

#include "mccgs/factor.hpp"
#include "mccgs/groebner.hpp"

namespace mccgs {

/// Irredundant minimal primes. `certified[i]` is false when the i-th
/// component's generators are irreducible but no primality pattern applies
/// (decomposition returned anyway, caller emits WARN).
struct PrimeList {
    std::vector<Ideal> primes;
    std::vector<bool> certified;

    bool complete() const {
        for (bool c : certified)
            if (!c) return false;
        return true;
    }
};

/// Pattern-based primality certificate: (a) a subset of indeterminates plus at
/// most one polynomial irreducible in the remaining indeterminates, which
/// covers (b) principal ideals with irreducible generator and (c) the zero
/// ideal and coordinate ideals.
inline bool is_prime_certified(const Ideal& p, const Ring& ring, int degree_bound = 6) {
    if (p.is_zero()) return true;
    if (p.is_unit()) return false;
    std::vector<Polynomial> rest;
    for (const auto& g : p.basis()) {
        bool is_var = g.terms.size() == 1 && g.terms.begin()->second == 1;
        if (is_var) {
            int total = 0;
            for (int x : g.terms.begin()->first) total += x;
            if (total != 1) is_var = false;
        }
        if (!is_var) rest.push_back(g);
    }
    if (rest.empty()) return true;
    if (rest.size() > 1) return false;
    try {
        auto fac = factor_irreducible(rest[0], ring, degree_bound);
        return fac.factors.size() == 1 && fac.factors[0].second == 1;
    } catch (const degree_bound_exceeded&) {
        return false;
    }
}

namespace detail {

inline int cmp_basis(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                     const Ring& ring) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = cmp_poly(a[i], b[i], ring);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

inline void split_branches(const Ideal& n, const Ring& ring, int degree_bound,
                           std::vector<Ideal>& leaves, std::vector<bool>& leaf_certified) {
    if (n.is_unit()) return;
    for (const auto& g : n.basis()) {
        Factorization fac;
        try {
            fac = factor_irreducible(g, ring, degree_bound);
        } catch (const degree_bound_exceeded&) {
            continue; // kept unfactored; certification below decides the WARN
        }
        if (fac.factors.size() == 1 && fac.factors[0].second == 1 &&
            fac.factors[0].first == primitive_part(g, ring))
            continue;
        // branch on each irreducible factor, saturated by the co-factors
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            std::vector<Polynomial> gens = n.gens();
            gens.push_back(fac.factors[i].first);
            Ideal branch(gens, ring);
            Polynomial cofactor = Polynomial::constant(1, ring.width());
            for (std::size_t j = 0; j < fac.factors.size(); ++j)
                if (j != i) cofactor = cofactor * fac.factors[j].first;
            if (!cofactor.is_constant()) branch = saturation(branch, cofactor, ring);
            split_branches(branch, ring, degree_bound, leaves, leaf_certified);
        }
        return;
    }
    leaves.push_back(n);
    leaf_certified.push_back(is_prime_certified(n, ring, degree_bound));
}

} // namespace detail

/// Minimal primes over Q by recursive factor-splitting with co-factor
/// saturation, deduplicated, containment-irredundant, deterministically sorted.
inline PrimeList minimal_primes(const Ideal& n, const Ring& ring, int degree_bound = 6) {
    std::vector<Ideal> leaves;
    std::vector<bool> certified;
    detail::split_branches(n, ring, degree_bound, leaves, certified);

    std::vector<std::size_t> order(leaves.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return detail::cmp_basis(leaves[a].basis(), leaves[b].basis(), ring) < 0;
    });

    PrimeList out;
    for (std::size_t idx : order) {
        bool redundant = false;
        for (std::size_t k = 0; k < out.primes.size() && !redundant; ++k) {
            if (out.primes[k] == leaves[idx]) redundant = true;
            // new component contains a kept one => new is the larger ideal
            if (leaves[idx].contains(out.primes[k], ring)) redundant = true;
        }
        if (redundant) continue;
        // drop previously kept components that contain this one
        for (std::size_t k = out.primes.size(); k-- > 0;) {
            if (out.primes[k].contains(leaves[idx], ring)) {
                out.primes.erase(out.primes.begin() + k);
                out.certified.erase(out.certified.begin() + k);
            }
        }
        out.primes.push_back(leaves[idx]);
        out.certified.push_back(certified[idx]);
    }
    return out;
}

/// Radical as the intersection of the minimal primes. The unit ideal maps to
/// itself.
inline Ideal radical(const Ideal& n, const Ring& ring, int degree_bound = 6) {
    PrimeList pl = minimal_primes(n, ring, degree_bound);
    if (pl.primes.empty()) return Ideal::unit(ring);
    Ideal r = pl.primes[0];
    for (std::size_t i = 1; i < pl.primes.size(); ++i)
        r = ideal_intersection(r, pl.primes[i], ring);
    return r;
}

} // namespace mccgs
