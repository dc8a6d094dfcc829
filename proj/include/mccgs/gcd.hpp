#pragma once

#include "mccgs/polynomial.hpp"

namespace mccgs {

/// Exact multivariate division: returns f/g when g divides f, nullopt otherwise.
inline std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g,
                                            const Ring& ring) {
    if (g.is_zero()) throw error("division by zero polynomial");
    Polynomial r = f;
    Polynomial q;
    auto [eg, cg] = leading_term(g, ring);
    while (!r.is_zero()) {
        auto [er, cr] = leading_term(r, ring);
        Expvec d(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            d[i] = er[i] - eg[i];
            if (d[i] < 0) return std::nullopt;
        }
        Polynomial t = Polynomial::monomial(d, cr / cg);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

inline bool divides(const Polynomial& g, const Polynomial& f, const Ring& ring) {
    return try_divide(f, g, ring).has_value();
}

/// Univariate view wrt one indeterminate: degree -> coefficient polynomial
/// (full width, zero exponent at idx).
inline std::map<int, Polynomial> as_univariate(const Polynomial& f, std::size_t idx) {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : f.terms) {
        Expvec w = e;
        int d = w[idx];
        w[idx] = 0;
        out[d].add_term(w, c);
    }
    return out;
}

inline Polynomial from_univariate(const std::map<int, Polynomial>& slices, std::size_t idx) {
    Polynomial r;
    for (const auto& [d, coeff] : slices)
        for (const auto& [e, c] : coeff.terms) {
            Expvec w = e;
            w[idx] += d;
            r.add_term(w, c);
        }
    return r;
}

/// Pseudo-remainder of f by g wrt indeterminate idx.
inline Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, std::size_t idx) {
    int dg = degree_in(g, idx);
    auto gu = as_univariate(g, idx);
    const Polynomial& lcg = gu.rbegin()->second;
    Polynomial r = f;
    while (!r.is_zero()) {
        int dr = degree_in(r, idx);
        if (dr < dg) break;
        auto ru = as_univariate(r, idx);
        Polynomial lcr = ru.rbegin()->second;
        Polynomial shift;
        for (const auto& [e, c] : lcr.terms) {
            Expvec w = e;
            w[idx] += dr - dg;
            shift.add_term(w, c);
        }
        r = lcg * r - shift * g;
    }
    return r;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g, const Ring& ring);

namespace detail {

/// gcd of the univariate-view coefficients of f wrt idx.
inline Polynomial content_wrt(const Polynomial& f, std::size_t idx, const Ring& ring) {
    Polynomial c;
    for (const auto& [d, coeff] : as_univariate(f, idx)) c = poly_gcd(c, coeff, ring);
    return c;
}

} // namespace detail

/// gcd over Q[all indeterminates], normalized to have integer-primitive
/// coefficient content equal to the rational gcd of the inputs' contents and
/// a positive leading rational.
inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    if (f.is_zero()) {
        Polynomial r = g;
        if (!r.is_zero() && leading_term(r, ring).second < 0) r = -r;
        return r;
    }
    if (g.is_zero()) {
        Polynomial r = f;
        if (!r.is_zero() && leading_term(r, ring).second < 0) r = -r;
        return r;
    }
    if (f.is_constant() && g.is_constant())
        return Polynomial::constant(rat_gcd(f.constant_value(), g.constant_value()),
                                    std::max(f.width(), g.width()));
    std::size_t v = 0;
    for (std::size_t i = 0; i < ring.width(); ++i)
        if (depends_on(f, i) || depends_on(g, i)) v = i;
    Polynomial cf = detail::content_wrt(f, v, ring);
    Polynomial cg = detail::content_wrt(g, v, ring);
    Polynomial pf = *try_divide(f, cf, ring);
    Polynomial pg = *try_divide(g, cg, ring);
    Polynomial c = poly_gcd(cf, cg, ring);
    if (degree_in(pf, v) < degree_in(pg, v)) std::swap(pf, pg);
    // primitive PRS on the v-primitive parts
    while (true) {
        if (pg.is_zero()) break;
        if (degree_in(pg, v) == 0) {
            pf = Polynomial::constant(1, f.width());
            break;
        }
        Polynomial r = pseudo_rem(pf, pg, v);
        pf = pg;
        if (r.is_zero()) {
            break;
        }
        Polynomial rc = detail::content_wrt(r, v, ring);
        pg = *try_divide(r, rc, ring);
        primitive_normalize(pg, ring);
    }
    if (!pf.is_constant()) {
        Polynomial pc = detail::content_wrt(pf, v, ring);
        pf = *try_divide(pf, pc, ring);
        primitive_normalize(pf, ring);
    } else {
        pf = Polynomial::constant(1, f.width());
    }
    Polynomial out = c * pf;
    if (leading_term(out, ring).second < 0) out = -out;
    return out;
}

/// Content of f wrt the variable block: gcd over Q[params] of the
/// K[params]-coefficients of f.
inline Polynomial content_x(const Polynomial& f, const Ring& ring) {
    Polynomial c;
    for (const auto& [xe, coeff] : coeffs_by_x(f, ring)) c = poly_gcd(c, coeff, ring);
    return c;
}

/// f = c * g with g of content 1 wrt the variables and positive leading
/// rational coefficient. The zero polynomial maps to (0, 0).
inline std::pair<Polynomial, Polynomial> content_normalize(const Polynomial& f,
                                                           const Ring& ring) {
    if (f.is_zero()) return {Polynomial(), Polynomial()};
    Polynomial c = content_x(f, ring);
    Polynomial g = *try_divide(f, c, ring);
    if (leading_term(g, ring).second < 0) {
        c = -c;
        g = -g;
    }
    return {c, g};
}

/// Product of the distinct irreducible factors of f, without factoring:
/// recursive content splitting plus a derivative gcd per main indeterminate.
inline Polynomial squarefree_part(const Polynomial& f, const Ring& ring) {
    if (f.is_zero()) throw error("squarefree part of zero polynomial");
    if (f.is_constant()) return Polynomial::constant(1, f.width());
    std::size_t v = 0;
    for (std::size_t i = 0; i < ring.width(); ++i)
        if (depends_on(f, i)) v = i;
    Polynomial cont = detail::content_wrt(f, v, ring);
    Polynomial pp = *try_divide(f, cont, ring);
    Polynomial s = *try_divide(pp, poly_gcd(pp, derivative(pp, v), ring), ring);
    Polynomial out = squarefree_part(cont, ring) * s;
    primitive_normalize(out, ring);
    return out;
}

} // namespace mccgs
