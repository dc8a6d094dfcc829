#pragma once

#include "mccgs/core.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace mccgs {

/// Sparse multivariate polynomial over Q. Terms are keyed by exponent
/// vectors over a ring's flattened indeterminate list; zero coefficients
/// are never stored, so the zero polynomial has an empty term map.
/// The map key order is structural (element-wise vector comparison) and
/// independent of any monomial order; order-aware access goes through the
/// free functions below.
struct Polynomial {
    std::map<Expvec, Rat> terms;

    Polynomial() = default;

    static Polynomial zero(std::size_t /*width*/) { return Polynomial(); }

    static Polynomial constant(const Rat& c, std::size_t width) {
        Polynomial p;
        if (c != 0) p.terms.emplace(Expvec(width, 0), c);
        return p;
    }

    static Polynomial monomial(const Expvec& e, const Rat& c = 1) {
        Polynomial p;
        if (c != 0) p.terms.emplace(e, c);
        return p;
    }

    static Polynomial indeterminate(std::size_t idx, std::size_t width) {
        Expvec e(width, 0);
        e[idx] = 1;
        return monomial(e);
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        if (terms.empty()) return true;
        if (terms.size() > 1) return false;
        const Expvec& e = terms.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Rat constant_value() const {
        if (terms.empty()) return 0;
        return terms.begin()->second;
    }

    std::size_t width() const {
        return terms.empty() ? 0 : terms.begin()->first.size();
    }

    void add_term(const Expvec& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool operator==(const Polynomial& o) const { return terms == o.terms; }
    bool operator!=(const Polynomial& o) const { return terms != o.terms; }
};

inline Polynomial operator-(const Polynomial& f) {
    Polynomial r;
    for (const auto& [e, c] : f.terms) r.terms.emplace(e, -c);
    return r;
}

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    Polynomial r = f;
    for (const auto& [e, c] : g.terms) r.add_term(e, c);
    return r;
}

inline Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    Polynomial r = f;
    for (const auto& [e, c] : g.terms) r.add_term(e, -c);
    return r;
}

inline Polynomial operator*(const Polynomial& f, const Rat& c) {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [e, k] : f.terms) r.terms.emplace(e, k * c);
    return r;
}

inline Polynomial operator*(const Rat& c, const Polynomial& f) { return f * c; }

inline Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial r;
    for (const auto& [ef, cf] : f.terms)
        for (const auto& [eg, cg] : g.terms) {
            Expvec e = ef;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eg[i];
            r.add_term(e, cf * cg);
        }
    return r;
}

inline Polynomial pow(const Polynomial& f, int n) {
    if (n < 0) throw error("negative polynomial power");
    Polynomial r = Polynomial::constant(1, f.width());
    Polynomial b = f;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

inline int degree_in(const Polynomial& f, std::size_t idx) {
    int d = 0;
    for (const auto& [e, c] : f.terms) d = std::max(d, e[idx]);
    return d;
}

inline int total_degree(const Polynomial& f) {
    int d = 0;
    for (const auto& [e, c] : f.terms) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

inline bool depends_on(const Polynomial& f, std::size_t idx) {
    for (const auto& [e, c] : f.terms)
        if (e[idx] > 0) return true;
    return false;
}

inline Polynomial derivative(const Polynomial& f, std::size_t idx) {
    Polynomial r;
    for (const auto& [e, c] : f.terms) {
        if (e[idx] == 0) continue;
        Expvec d = e;
        d[idx] -= 1;
        r.add_term(d, c * e[idx]);
    }
    return r;
}

/// Substitute a polynomial for one indeterminate.
inline Polynomial substitute(const Polynomial& f, std::size_t idx, const Polynomial& value,
                             std::size_t width) {
    Polynomial r;
    for (const auto& [e, c] : f.terms) {
        Expvec base = e;
        int d = base[idx];
        base[idx] = 0;
        Polynomial t = Polynomial::monomial(base, c);
        if (d > 0) t = t * pow(value, d);
        r = r + t;
    }
    (void)width;
    return r;
}

/// Leading term of f under the ring's block order. Precondition: f != 0.
inline std::pair<Expvec, Rat> leading_term(const Polynomial& f, const Ring& ring) {
    if (f.is_zero()) throw error("leading term of zero polynomial");
    auto best = f.terms.begin();
    for (auto it = std::next(f.terms.begin()); it != f.terms.end(); ++it)
        if (cmp_monomial(best->first, it->first, ring) < 0) best = it;
    return {best->first, best->second};
}

/// Projection of an exponent vector onto the variable block.
inline Expvec x_part(const Expvec& e, const Ring& ring) {
    return Expvec(e.begin(), e.begin() + ring.nvars());
}

inline bool is_param_only(const Polynomial& f, const Ring& ring) {
    for (const auto& [e, c] : f.terms)
        for (std::size_t i = 0; i < ring.nvars(); ++i)
            if (e[i] > 0) return false;
    return true;
}

/// View f in K[params][vars]: list of (x-exponent, coefficient in K[params])
/// sorted descending by the variable-block order. Coefficients keep the full
/// exponent width with a zero variable part.
inline std::vector<std::pair<Expvec, Polynomial>> coeffs_by_x(const Polynomial& f,
                                                              const Ring& ring) {
    std::map<Expvec, Polynomial> slices;
    for (const auto& [e, c] : f.terms) {
        Expvec xe = x_part(e, ring);
        Expvec pe = e;
        for (std::size_t i = 0; i < ring.nvars(); ++i) pe[i] = 0;
        slices[xe].add_term(pe, c);
    }
    std::vector<std::pair<Expvec, Polynomial>> out(slices.begin(), slices.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return detail::cmp_block(a.first, b.first, 0, ring.nvars(), ring.order_vars) > 0;
    });
    return out;
}

/// Leading power product of f in the variables. Precondition: f != 0.
inline Expvec lpp(const Polynomial& f, const Ring& ring) {
    if (f.is_zero()) throw error("lpp of zero polynomial");
    return coeffs_by_x(f, ring).front().first;
}

/// Leading coefficient of f as a polynomial in the parameters. Precondition: f != 0.
inline Polynomial lc(const Polynomial& f, const Ring& ring) {
    if (f.is_zero()) throw error("lc of zero polynomial");
    return coeffs_by_x(f, ring).front().second;
}

/// Reassemble from x-slices.
inline Polynomial from_x_slices(const std::vector<std::pair<Expvec, Polynomial>>& slices,
                                const Ring& ring) {
    Polynomial r;
    for (const auto& [xe, coeff] : slices)
        for (const auto& [pe, c] : coeff.terms) {
            Expvec e = pe;
            for (std::size_t i = 0; i < ring.nvars(); ++i) e[i] += xe[i];
            r.add_term(e, c);
        }
    return r;
}

/// Canonical total order on polynomials: compare term streams descending by
/// the ring order, monomial first then coefficient. Returns <0, 0, >0.
inline int cmp_poly(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    std::vector<const std::pair<const Expvec, Rat>*> tf, tg;
    for (const auto& t : f.terms) tf.push_back(&t);
    for (const auto& t : g.terms) tg.push_back(&t);
    auto desc = [&](const auto* a, const auto* b) {
        return cmp_monomial(a->first, b->first, ring) > 0;
    };
    std::sort(tf.begin(), tf.end(), desc);
    std::sort(tg.begin(), tg.end(), desc);
    for (std::size_t i = 0; i < std::min(tf.size(), tg.size()); ++i) {
        int c = cmp_monomial(tf[i]->first, tg[i]->first, ring);
        if (c != 0) return c;
        if (tf[i]->second != tg[i]->second) return tf[i]->second < tg[i]->second ? -1 : 1;
    }
    if (tf.size() != tg.size()) return tf.size() < tg.size() ? -1 : 1;
    return 0;
}

/// Divide by the rational content and fix the sign so the leading rational
/// coefficient (under the ring order) is positive. Result has coprime integer
/// coefficients. Returns the removed rational factor u with f = u * result.
inline Rat primitive_normalize(Polynomial& f, const Ring& ring) {
    if (f.is_zero()) return 0;
    Rat g = 0;
    for (const auto& [e, c] : f.terms) g = rat_gcd(g, c);
    if (leading_term(f, ring).second < 0) g = -g;
    Polynomial r;
    for (const auto& [e, c] : f.terms) r.terms.emplace(e, c / g);
    f = std::move(r);
    return g;
}

inline Polynomial primitive_part(const Polynomial& f, const Ring& ring) {
    Polynomial g = f;
    primitive_normalize(g, ring);
    return g;
}

/// Map a polynomial into an extended ring obtained by inserting `count`
/// fresh indeterminates at position `pos` of the flattened index space.
inline Polynomial insert_slots(const Polynomial& f, std::size_t pos, std::size_t count,
                               std::size_t old_width) {
    Polynomial r;
    for (const auto& [e, c] : f.terms) {
        Expvec w(old_width + count, 0);
        for (std::size_t i = 0; i < old_width; ++i) w[i < pos ? i : i + count] = e[i];
        r.terms.emplace(std::move(w), c);
    }
    return r;
}

/// Inverse of insert_slots. Precondition: f has zero exponents in the slots.
inline Polynomial remove_slots(const Polynomial& f, std::size_t pos, std::size_t count,
                               std::size_t new_width) {
    Polynomial r;
    for (const auto& [e, c] : f.terms) {
        Expvec w(new_width, 0);
        for (std::size_t i = 0; i < new_width; ++i) w[i] = e[i < pos ? i : i + count];
        r.terms.emplace(std::move(w), c);
    }
    return r;
}

inline std::string to_string(const Polynomial& f, const Ring& ring) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const Expvec, Rat>*> ts;
    for (const auto& t : f.terms) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
        return cmp_monomial(a->first, b->first, ring) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        Rat c = t->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rat a = c < 0 ? Rat(-c) : c;
        bool unit_coeff = (a == 1);
        bool any_ind = std::any_of(t->first.begin(), t->first.end(), [](int x) { return x > 0; });
        if (!unit_coeff || !any_ind) os << a;
        bool sep = !unit_coeff || !any_ind;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            int d = t->first[i];
            if (d == 0) continue;
            if (sep) os << "*";
            sep = true;
            os << ring.name(i);
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

/// Substitute rational values for all parameters, leaving a polynomial in
/// the variables alone (parameter exponents all zero).
inline Polynomial specialize(const Polynomial& f, const std::vector<Rat>& point,
                             const Ring& ring) {
    if (point.size() != ring.nparams()) throw error("parameter point has wrong dimension");
    Polynomial r;
    for (const auto& [e, c] : f.terms) {
        Rat k = c;
        for (std::size_t j = 0; j < ring.nparams(); ++j) {
            int d = e[ring.nvars() + j];
            for (int i = 0; i < d; ++i) k *= point[j];
        }
        Expvec w = e;
        for (std::size_t j = 0; j < ring.nparams(); ++j) w[ring.nvars() + j] = 0;
        r.add_term(w, k);
    }
    return r;
}

} // namespace mccgs
