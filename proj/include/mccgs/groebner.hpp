#pragma once

#include "mccgs/gcd.hpp"

#include <cassert>
#include <numeric>

namespace mccgs {

namespace detail {

inline bool exp_divides(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expvec exp_lcm(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Expvec exp_sub(const Expvec& a, const Expvec& b) {
    Expvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool exp_coprime(const Expvec& a, const Expvec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Working polynomial with an optional cofactor row over the original
// generators: p == sum_j cof[j] * gens[j].
struct WorkPoly {
    Polynomial p;
    std::vector<Polynomial> cof;
    Expvec lt_exp;
    Rat lt_coeff;

    void refresh(const Ring& ring) {
        if (!p.is_zero()) {
            auto [e, c] = leading_term(p, ring);
            lt_exp = e;
            lt_coeff = c;
        }
    }
};

// Full reduction of w by G. Non-divisible leading terms migrate to the
// result; the cofactor row stays consistent throughout.
inline void reduce_full(WorkPoly& w, const std::vector<WorkPoly>& G, const Ring& ring,
                        bool cofactors) {
    Polynomial rest = w.p;
    Polynomial result;
    while (!rest.is_zero()) {
        auto [e, c] = leading_term(rest, ring);
        bool hit = false;
        for (const auto& g : G) {
            if (g.p.is_zero()) continue;
            if (!exp_divides(g.lt_exp, e)) continue;
            Polynomial t = Polynomial::monomial(exp_sub(e, g.lt_exp), c / g.lt_coeff);
            rest = rest - t * g.p;
            if (cofactors)
                for (std::size_t j = 0; j < w.cof.size(); ++j)
                    w.cof[j] = w.cof[j] - t * g.cof[j];
            hit = true;
            break;
        }
        if (!hit) {
            result.add_term(e, c);
            rest.terms.erase(e);
        }
    }
    w.p = result;
    w.refresh(ring);
}

inline void normalize_workpoly(WorkPoly& w, const Ring& ring, bool cofactors) {
    if (w.p.is_zero()) return;
    Rat u = primitive_normalize(w.p, ring);
    if (cofactors)
        for (auto& c : w.cof) c = c * Rat(1 / u);
    w.refresh(ring);
}

// Buchberger with normal strategy and the product criterion, followed by
// inter-reduction to the unique reduced basis (primitive, positive leading
// rational, sorted ascending).
inline std::vector<WorkPoly> buchberger(const std::vector<Polynomial>& gens, const Ring& ring,
                                        bool cofactors) {
    std::vector<WorkPoly> G;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        WorkPoly w;
        w.p = gens[j];
        if (cofactors) {
            w.cof.assign(gens.size(), Polynomial());
            w.cof[j] = Polynomial::constant(1, ring.width());
        }
        w.refresh(ring);
        normalize_workpoly(w, ring, cofactors);
        G.push_back(std::move(w));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            if (!exp_coprime(G[i].lt_exp, G[k].lt_exp)) pairs.emplace_back(i, k);
    };
    for (std::size_t k = 0; k < G.size(); ++k) add_pairs(k);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        std::size_t best = 0;
        Expvec best_lcm = exp_lcm(G[pairs[0].first].lt_exp, G[pairs[0].second].lt_exp);
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            Expvec l = exp_lcm(G[pairs[i].first].lt_exp, G[pairs[i].second].lt_exp);
            if (cmp_monomial(l, best_lcm, ring) < 0) {
                best = i;
                best_lcm = l;
            }
        }
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + best);

        const WorkPoly& f = G[i];
        const WorkPoly& g = G[j];
        Polynomial tf = Polynomial::monomial(exp_sub(best_lcm, f.lt_exp), Rat(1) / f.lt_coeff);
        Polynomial tg = Polynomial::monomial(exp_sub(best_lcm, g.lt_exp), Rat(1) / g.lt_coeff);
        WorkPoly sp;
        sp.p = tf * f.p - tg * g.p;
        if (cofactors) {
            sp.cof.assign(f.cof.size(), Polynomial());
            for (std::size_t k = 0; k < sp.cof.size(); ++k)
                sp.cof[k] = tf * f.cof[k] - tg * g.cof[k];
        }
        sp.refresh(ring);
        reduce_full(sp, G, ring, cofactors);
        if (!sp.p.is_zero()) {
            normalize_workpoly(sp, ring, cofactors);
            G.push_back(std::move(sp));
            add_pairs(G.size() - 1);
        }
    }

    // minimalize
    std::vector<WorkPoly> M;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!exp_divides(G[j].lt_exp, G[i].lt_exp)) continue;
            if (G[j].lt_exp == G[i].lt_exp && j > i) continue; // keep the first of equals
            redundant = true;
        }
        if (!redundant) M.push_back(G[i]);
    }
    // tail-reduce each element by the others
    std::vector<WorkPoly> R;
    for (std::size_t i = 0; i < M.size(); ++i) {
        WorkPoly w = M[i];
        std::vector<WorkPoly> others;
        for (std::size_t j = 0; j < M.size(); ++j)
            if (j != i) others.push_back(M[j]);
        reduce_full(w, others, ring, cofactors);
        normalize_workpoly(w, ring, cofactors);
        if (!w.p.is_zero()) R.push_back(std::move(w));
    }
    std::sort(R.begin(), R.end(), [&](const WorkPoly& a, const WorkPoly& b) {
        return cmp_poly(a.p, b.p, ring) < 0;
    });
    return R;
}

} // namespace detail

/// The unique reduced Groebner basis wrt the ring's block order, with each
/// element primitive over Z and a positive leading rational, sorted ascending.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                              const Ring& ring) {
    std::vector<Polynomial> out;
    for (auto& w : detail::buchberger(gens, ring, false)) out.push_back(std::move(w.p));
    return out;
}

/// Unique remainder of f modulo G (full division, field coefficients).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const Ring& ring) {
    detail::WorkPoly w;
    w.p = f;
    w.refresh(ring);
    std::vector<detail::WorkPoly> gg;
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        detail::WorkPoly v;
        v.p = g;
        v.refresh(ring);
        gg.push_back(std::move(v));
    }
    detail::reduce_full(w, gg, ring, false);
    return w.p;
}

/// Full division of f by the list G: f = sum_i q[i]*G[i] + r with no term of
/// r divisible by any leading monomial of G.
inline std::pair<std::vector<Polynomial>, Polynomial>
divide_full(const Polynomial& f, const std::vector<Polynomial>& G, const Ring& ring) {
    std::vector<Polynomial> q(G.size());
    Polynomial rest = f;
    Polynomial result;
    while (!rest.is_zero()) {
        auto [e, c] = leading_term(rest, ring);
        bool hit = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (G[k].is_zero()) continue;
            auto [ge, gc] = leading_term(G[k], ring);
            if (!detail::exp_divides(ge, e)) continue;
            Polynomial t = Polynomial::monomial(detail::exp_sub(e, ge), c / gc);
            q[k] = q[k] + t;
            rest = rest - t * G[k];
            hit = true;
            break;
        }
        if (!hit) {
            result.add_term(e, c);
            rest.terms.erase(e);
        }
    }
    return {std::move(q), std::move(result)};
}

struct GBWithCofactors {
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> matrix; // basis[i] == sum_j matrix[i][j]*gens[j]
};

/// Reduced Groebner basis together with the exact cofactor matrix over the
/// input generators. The reconstruction identity is verified on construction.
inline GBWithCofactors gbex(const std::vector<Polynomial>& gens, const Ring& ring) {
    GBWithCofactors out;
    for (auto& w : detail::buchberger(gens, ring, true)) {
        Polynomial check;
        for (std::size_t j = 0; j < gens.size(); ++j) check = check + w.cof[j] * gens[j];
        if (check != w.p) throw error("gbex cofactor identity failed");
        out.basis.push_back(std::move(w.p));
        out.matrix.push_back(std::move(w.cof));
    }
    return out;
}

/// Finitely generated ideal with its reduced Groebner basis (computed on
/// construction; the canonical representative of the ideal).
class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<Polynomial> gens, const Ring& ring)
        : gens_(std::move(gens)), basis_(groebner_basis(gens_, ring)) {
        std::erase_if(gens_, [](const Polynomial& p) { return p.is_zero(); });
    }

    static Ideal unit(const Ring& ring) {
        return Ideal({Polynomial::constant(1, ring.width())}, ring);
    }

    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

    bool contains(const Polynomial& f, const Ring& ring) const {
        return normal_form(f, basis_, ring).is_zero();
    }

    bool contains(const Ideal& other, const Ring& ring) const {
        for (const auto& g : other.basis_)
            if (!contains(g, ring)) return false;
        return true;
    }

    bool operator==(const Ideal& o) const { return basis_ == o.basis_; }
    bool operator!=(const Ideal& o) const { return basis_ != o.basis_; }

private:
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> basis_;
};

inline bool ideal_equal(const Ideal& a, const Ideal& b) { return a == b; }

inline Ideal ideal_sum(const Ideal& a, const Ideal& b, const Ring& ring) {
    std::vector<Polynomial> g = a.basis();
    g.insert(g.end(), b.basis().begin(), b.basis().end());
    return Ideal(std::move(g), ring);
}

namespace detail {

// Run an elimination computation: map param-only generators into a ring with
// one auxiliary leading variable, apply `build`, return the aux-free part of
// the resulting reduced basis mapped back.
template <typename Build>
std::vector<Polynomial> eliminate_aux(const Ring& ring, Build&& build) {
    Ring ext = ring.with_aux_var(ring.fresh_name());
    std::vector<Polynomial> gens = build(ext);
    std::vector<Polynomial> out;
    for (const auto& g : groebner_basis(gens, ext))
        if (!depends_on(g, 0)) out.push_back(remove_slots(g, 0, 1, ring.width()));
    return out;
}

} // namespace detail

/// Intersection of two ideals in the parameter ring, via one auxiliary
/// indeterminate t: <t*A, (1-t)*B> intersected with K[params].
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Ring& ring) {
    if (a.is_zero() || b.is_zero()) return Ideal({}, ring);
    auto gens = detail::eliminate_aux(ring, [&](const Ring& ext) {
        Polynomial t = Polynomial::indeterminate(0, ext.width());
        Polynomial one_minus_t = Polynomial::constant(1, ext.width()) - t;
        std::vector<Polynomial> g;
        for (const auto& f : a.basis()) g.push_back(t * insert_slots(f, 0, 1, ring.width()));
        for (const auto& f : b.basis())
            g.push_back(one_minus_t * insert_slots(f, 0, 1, ring.width()));
        return g;
    });
    return Ideal(std::move(gens), ring);
}

/// Quotient by a single polynomial: A : <b> = (A intersect <b>) / b.
inline Ideal ideal_quotient_single(const Ideal& a, const Polynomial& b, const Ring& ring) {
    if (b.is_zero()) return Ideal::unit(ring);
    Ideal inter = ideal_intersection(a, Ideal({b}, ring), ring);
    std::vector<Polynomial> gens;
    for (const auto& g : inter.basis()) {
        auto q = try_divide(g, b, ring);
        if (!q) throw error("quotient division not exact");
        gens.push_back(std::move(*q));
    }
    return Ideal(std::move(gens), ring);
}

/// A : B = intersection over generators b of B of A : <b>.
inline Ideal ideal_quotient(const Ideal& a, const Ideal& b, const Ring& ring) {
    if (b.is_zero()) return Ideal::unit(ring);
    bool first = true;
    Ideal out;
    for (const auto& g : b.basis()) {
        Ideal q = ideal_quotient_single(a, g, ring);
        out = first ? q : ideal_intersection(out, q, ring);
        first = false;
    }
    return out;
}

/// Saturation A : f^inf as the stabilized iterated quotient.
inline Ideal saturation(const Ideal& a, const Polynomial& f, const Ring& ring) {
    Ideal cur = a;
    while (true) {
        Ideal next = ideal_quotient_single(cur, f, ring);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/// Rabinowitsch test: f in sqrt(N) iff 1 in N + <1 - t*f>.
inline bool radical_membership(const Polynomial& f, const Ideal& n, const Ring& ring) {
    if (f.is_zero()) return true;
    if (n.contains(f, ring)) return true;
    Ring ext = ring.with_aux_var(ring.fresh_name());
    std::vector<Polynomial> gens;
    for (const auto& g : n.basis()) gens.push_back(insert_slots(g, 0, 1, ring.width()));
    Polynomial t = Polynomial::indeterminate(0, ext.width());
    gens.push_back(Polynomial::constant(1, ext.width()) - t * insert_slots(f, 0, 1, ring.width()));
    auto gb = groebner_basis(gens, ext);
    return gb.size() == 1 && gb[0].is_constant();
}

} // namespace mccgs
