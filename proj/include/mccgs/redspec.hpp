#pragma once

#include "mccgs/primedec.hpp"

#include <random>

namespace mccgs {

/// A segment description S = V(N) \ V(h): N a radical parameter ideal given
/// by its reduced basis, W the distinct irreducible non-null polynomials,
/// h their product, with h outside every minimal prime of N.
struct RedSpec {
    Ideal N;
    std::vector<Polynomial> W;
    Polynomial h;
    PrimeList primesN;
};

using ParamPoint = std::vector<Rat>;

namespace detail {

inline void sort_factors(std::vector<Polynomial>& v, const Ring& ring) {
    std::sort(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (total_degree(a) != total_degree(b)) return total_degree(a) < total_degree(b);
        return cmp_poly(a, b, ring) < 0;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// Normalize a raw (N, W) pair into a RedSpec describing the same segment, or
/// nullopt when the segment is empty. W entries are factored into distinct
/// irreducibles; minimal primes of N on which some factor vanishes contribute
/// no segment points and are removed.
inline std::optional<RedSpec> make_redspec(const Ideal& nraw, const std::vector<Polynomial>& wraw,
                                           const Ring& ring, int degree_bound = 6) {
    std::vector<Polynomial> factors;
    for (const auto& w : wraw) {
        if (w.is_zero()) return std::nullopt; // h = 0: no point survives
        if (w.is_constant()) continue;
        try {
            for (auto& q : irreducible_factors(w, ring, degree_bound)) factors.push_back(q);
        } catch (const degree_bound_exceeded&) {
            factors.push_back(primitive_part(w, ring));
        }
    }
    detail::sort_factors(factors, ring);

    PrimeList primes = minimal_primes(nraw, ring, degree_bound);
    PrimeList kept;
    for (std::size_t i = 0; i < primes.primes.size(); ++i) {
        bool vanishes = false;
        for (const auto& q : factors)
            if (primes.primes[i].contains(q, ring)) {
                vanishes = true;
                break;
            }
        if (vanishes) continue;
        kept.primes.push_back(primes.primes[i]);
        kept.certified.push_back(primes.certified[i]);
    }
    if (kept.primes.empty()) return std::nullopt;

    RedSpec spec;
    spec.N = kept.primes[0];
    for (std::size_t i = 1; i < kept.primes.size(); ++i)
        spec.N = ideal_intersection(spec.N, kept.primes[i], ring);
    spec.primesN = std::move(kept);
    spec.W = std::move(factors);
    spec.h = Polynomial::constant(1, ring.width());
    for (const auto& w : spec.W) spec.h = spec.h * w;
    return spec;
}

/// Membership in W* = { k * prod w^lambda : k in Q\{0}, lambda >= 0 }:
/// divide out each w maximally, accept a nonzero rational remainder.
inline bool wstar_member(const Polynomial& p, const RedSpec& spec, const Ring& ring) {
    if (p.is_zero()) return false;
    Polynomial r = p;
    for (const auto& w : spec.W) {
        while (true) {
            auto q = try_divide(r, w, ring);
            if (!q) break;
            r = *q;
        }
    }
    return r.is_constant();
}

/// Def. 5: f is reduced over the segment when it survives normal form by N,
/// has variable-content 1 and a W*-member leading coefficient.
inline bool is_reduced_over(const Polynomial& f, const RedSpec& spec, const Ring& ring) {
    if (f.is_zero()) return false;
    if (normal_form(f, spec.N.basis(), ring) != f) return false;
    Polynomial c = content_x(f, ring);
    if (!(c.is_constant() && c.constant_value() == 1)) return false;
    return wstar_member(lc(f, ring), spec, ring);
}

namespace detail {

// All products prod w_i^e_i over ws with sum(e) <= bound, graded order.
inline std::vector<Polynomial> wstar_products(const std::vector<Polynomial>& ws, int bound,
                                              std::size_t width) {
    std::vector<Polynomial> out = {Polynomial::constant(1, width)};
    std::size_t lo = 0;
    for (int total = 1; total <= bound; ++total) {
        std::size_t hi = out.size();
        for (const auto& w : ws)
            for (std::size_t i = lo; i < hi; ++i) out.push_back(out[i] * w);
        lo = hi;
    }
    std::sort(out.begin(), out.end(),
              [&](const Polynomial& x, const Polynomial& y) { return x.terms < y.terms; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Exists a rational k != 0 with a*F_alpha - k*b*f_alpha in N for every slice?
inline bool witness_pair_works(const std::vector<std::pair<Expvec, Polynomial>>& fs,
                               const std::vector<std::pair<Expvec, Polynomial>>& gs,
                               const Polynomial& a, const Polynomial& b, const Ideal& n,
                               const Ring& ring) {
    std::optional<Rat> k;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Polynomial ra = normal_form(a * fs[i].second, n.basis(), ring);
        Polynomial rb = normal_form(b * gs[i].second, n.basis(), ring);
        if (ra.is_zero() != rb.is_zero()) return false;
        if (ra.is_zero()) continue;
        if (ra.terms.size() != rb.terms.size()) return false;
        auto ia = ra.terms.begin();
        auto ib = rb.terms.begin();
        for (; ia != ra.terms.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            Rat ratio = ia->second / ib->second;
            if (!k)
                k = ratio;
            else if (*k != ratio)
                return false;
        }
    }
    return k.has_value();
}

} // namespace detail

/// Def. 6: F specializes well to the reduced f when a*NF(F, N) = b*f mod N for
/// some a, b in W*. Fast path: the leading-coefficient ratio in lowest terms.
/// The equality only holds modulo N, so when the lowest-terms pair is not a
/// witness, a bounded search over W*-products decides (semi-algorithm, like
/// the pre-image search itself).
inline bool specializes_well(const Polynomial& F, const Polynomial& f, const RedSpec& spec,
                             const Ring& ring, int witness_bound = 2) {
    Polynomial Fr = normal_form(F, spec.N.basis(), ring);
    if (Fr.is_zero() || f.is_zero()) return false;
    auto fs = coeffs_by_x(Fr, ring);
    auto gs = coeffs_by_x(f, ring);
    if (fs.size() != gs.size()) return false;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].first != gs[i].first) return false;
    // ratio from the leading coefficients, in lowest terms: a*lc(Fr) = b*lc(f)
    Polynomial g = poly_gcd(fs[0].second, gs[0].second, ring);
    Polynomial a = *try_divide(gs[0].second, g, ring);
    Polynomial b = *try_divide(fs[0].second, g, ring);
    if (wstar_member(a, spec, ring) && wstar_member(b, spec, ring)) {
        bool ok = true;
        for (std::size_t i = 0; i < fs.size() && ok; ++i) {
            Polynomial diff = a * fs[i].second - b * gs[i].second;
            if (!normal_form(diff, spec.N.basis(), ring).is_zero()) ok = false;
        }
        if (ok) return true;
    }
    auto products = detail::wstar_products(spec.W, witness_bound, ring.width());
    for (const auto& wa : products)
        for (const auto& wb : products)
            if (detail::witness_pair_works(fs, gs, wa, wb, spec.N, ring)) return true;
    return false;
}

/// Point containment in the segment: the basis of N vanishes and h does not.
inline bool segment_contains(const RedSpec& spec, const ParamPoint& p, const Ring& ring) {
    for (const auto& g : spec.N.basis())
        if (!specialize(g, p, ring).is_zero()) return false;
    Polynomial hv = specialize(spec.h, p, ring);
    return !hv.is_zero();
}

/// Rational points of the segment, by back-solving the triangular part of the
/// basis of N after assigning random small values to the free parameters.
/// Throws sampling_failed when the retry budget runs out (e.g. a nonlinear
/// back-solve step); callers skip, never assert.
inline std::vector<ParamPoint> sample_points(const RedSpec& spec, std::size_t count,
                                             const Ring& ring, unsigned seed = 1) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-5, 5);
    const auto& basis = spec.N.basis();
    std::size_t m = ring.nparams();

    // leading parameter (largest under the parameter order) of each element
    std::vector<std::size_t> lead(basis.size());
    std::vector<bool> is_lead(m, false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Expvec e = leading_term(basis[i], ring).first;
        std::size_t j = 0;
        while (j < m && e[ring.nvars() + j] == 0) ++j;
        if (j == m) return {}; // constant in basis: unit ideal, empty segment
        lead[i] = j;
        is_lead[j] = true;
    }

    std::vector<ParamPoint> out;
    int budget = static_cast<int>(count) * 64 + 64;
    while (out.size() < count && budget-- > 0) {
        ParamPoint pt(m, 0);
        for (std::size_t j = 0; j < m; ++j)
            if (!is_lead[j]) pt[j] = dist(rng);
        bool ok = true;
        // back-solve ascending: elements in the later (smaller) parameters first
        for (std::size_t i = basis.size(); i-- > 0 && ok;) {
            std::size_t j = lead[i];
            // g = c1 * a_j + c0 after substituting everything else
            Polynomial g = basis[i];
            for (std::size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                g = substitute(g, ring.nvars() + k,
                               Polynomial::constant(pt[k], ring.width()), ring.width());
            }
            if (g.is_zero()) continue;
            if (degree_in(g, ring.nvars() + j) != 1) {
                ok = false;
                break;
            }
            auto slices = as_univariate(g, ring.nvars() + j);
            Rat c1 = slices.rbegin()->second.constant_value();
            Rat c0 = slices.count(0) ? slices.at(0).constant_value() : Rat(0);
            pt[j] = -c0 / c1;
        }
        if (ok && segment_contains(spec, pt, ring)) out.push_back(std::move(pt));
    }
    if (out.size() < count) throw sampling_failed("could not sample enough segment points");
    return out;
}

/// Serialized form used in reports: (N=[...], W={...}).
inline std::string to_string(const RedSpec& spec, const Ring& ring) {
    std::string s = "(N=[";
    bool first = true;
    for (const auto& g : spec.N.basis()) {
        if (!first) s += ", ";
        s += to_string(g, ring);
        first = false;
    }
    s += "], W={";
    first = true;
    for (const auto& w : spec.W) {
        if (!first) s += ", ";
        s += to_string(w, ring);
        first = false;
    }
    s += "})";
    return s;
}

} // namespace mccgs
