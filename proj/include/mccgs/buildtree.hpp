#pragma once

#include "mccgs/redspec.hpp"

#include <functional>
#include <memory>

namespace mccgs {

struct BuildOptions {
    int factor_degree_bound = 6;
    int max_depth = 64;
};

/// Node of the dichotomic discussion tree. Terminal vertices carry the
/// reduced basis for their segment; internal vertices branch on the vanishing
/// of branch_poly (null child appends 0 to the label, non-null child 1).
struct Vertex {
    std::vector<int> label;
    RedSpec spec;
    std::vector<Polynomial> basis;
    std::optional<Polynomial> branch_poly;
    std::unique_ptr<Vertex> null_child;
    std::unique_ptr<Vertex> nonnull_child;
    bool warn = false;

    bool is_terminal() const { return !branch_poly.has_value(); }
};

struct Case {
    std::vector<Expvec> lpp_set; // ascending under the variable order
    std::vector<Polynomial> basis;
    RedSpec spec;
    std::vector<int> label;
    bool warn = false;
};

struct CGS {
    std::vector<Case> cases;
    std::size_t generic_index = 0;
};

namespace detail {

inline bool exp_divides_x(const Expvec& a, const Expvec& b, const Ring& ring) {
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline int cmp_x(const Expvec& a, const Expvec& b, const Ring& ring) {
    return cmp_block(a, b, 0, ring.nvars(), ring.order_vars);
}

/// Full reduction of f by the decided polynomials G over the segment:
/// pseudo-reduction multiplies through by W*-member leading coefficients,
/// coefficients are normalized by N after every step. The result has no
/// x-term divisible by an lpp of G.
inline Polynomial reduce_over_spec(const Polynomial& f, const std::vector<Polynomial>& G,
                                   const RedSpec& spec, const Ring& ring) {
    Polynomial result;
    Polynomial r = normal_form(f, spec.N.basis(), ring);
    while (!r.is_zero()) {
        auto slices = coeffs_by_x(r, ring);
        const Expvec& xe = slices[0].first;
        const Polynomial* red = nullptr;
        for (const auto& g : G)
            if (exp_divides_x(lpp(g, ring), xe, ring)) {
                red = &g;
                break;
            }
        if (!red) {
            Polynomial slice;
            for (const auto& [pe, c] : slices[0].second.terms) {
                Expvec e = pe;
                for (std::size_t i = 0; i < ring.nvars(); ++i) e[i] += xe[i];
                slice.add_term(e, c);
            }
            result = result + slice;
            r = r - slice;
            continue;
        }
        Polynomial lg = lc(*red, ring);
        Expvec shift(ring.width(), 0);
        Expvec rl = lpp(*red, ring);
        for (std::size_t i = 0; i < ring.nvars(); ++i) shift[i] = xe[i] - rl[i];
        Polynomial mult = Polynomial::monomial(shift, 1) * slices[0].second;
        r = lg * r - mult * (*red);
        result = result * lg;
        r = normal_form(r, spec.N.basis(), ring);
    }
    return result + r;
}

/// Undecided part of a leading coefficient: product of the distinct
/// irreducible factors of NF(c, N) that are not already in W. Empty optional
/// when c is decided non-null (W* member).
inline std::optional<Polynomial> undecided_part(const Polynomial& c, const RedSpec& spec,
                                                const Ring& ring, const BuildOptions& opt,
                                                bool& warn) {
    if (wstar_member(c, spec, ring)) return std::nullopt;
    std::vector<Polynomial> factors;
    try {
        factors = irreducible_factors(c, ring, opt.factor_degree_bound);
    } catch (const degree_bound_exceeded&) {
        warn = true;
        factors = {primitive_part(squarefree_part(c, ring), ring)};
    }
    Polynomial q = Polynomial::constant(1, ring.width());
    for (const auto& w : factors) {
        bool in_w = std::find(spec.W.begin(), spec.W.end(), w) != spec.W.end();
        if (!in_w) q = q * w;
    }
    if (q.is_constant()) // all factors already non-null, yet not W*: impossible
        throw error("undecided part collapsed to a constant");
    return q;
}

inline std::unique_ptr<Vertex> build_vertex(std::vector<int> label, RedSpec spec,
                                            std::vector<Polynomial> polys, const Ring& ring,
                                            const BuildOptions& opt, int depth, bool warn);

inline std::unique_ptr<Vertex> branch_vertex(std::vector<int> label, RedSpec spec,
                                             const std::vector<Polynomial>& polys,
                                             Polynomial q, const Ring& ring,
                                             const BuildOptions& opt, int depth, bool warn) {
    auto v = std::make_unique<Vertex>();
    v->label = label;
    v->spec = spec;
    v->branch_poly = q;
    v->warn = warn;

    std::vector<Polynomial> ngens = spec.N.gens();
    ngens.push_back(q);
    auto nullspec = make_redspec(Ideal(ngens, ring), spec.W, ring, opt.factor_degree_bound);
    if (nullspec) {
        std::vector<int> l0 = label;
        l0.push_back(0);
        v->null_child = build_vertex(std::move(l0), *nullspec, polys, ring, opt, depth + 1, warn);
    }

    std::vector<Polynomial> w1 = spec.W;
    try {
        for (auto& f : irreducible_factors(q, ring, opt.factor_degree_bound)) w1.push_back(f);
    } catch (const degree_bound_exceeded&) {
        w1.push_back(primitive_part(q, ring));
    }
    auto nnspec = make_redspec(spec.N, w1, ring, opt.factor_degree_bound);
    if (nnspec) {
        std::vector<int> l1 = label;
        l1.push_back(1);
        v->nonnull_child =
            build_vertex(std::move(l1), *nnspec, polys, ring, opt, depth + 1, warn);
    }
    return v;
}

inline std::unique_ptr<Vertex> build_vertex(std::vector<int> label, RedSpec spec,
                                            std::vector<Polynomial> polys, const Ring& ring,
                                            const BuildOptions& opt, int depth, bool warn) {
    if (depth > opt.max_depth) throw error("branch depth budget exceeded");

    // normalize the working set over the current spec
    auto renormalize = [&]() {
        std::vector<Polynomial> out;
        for (const auto& f : polys) {
            Polynomial r = normal_form(f, spec.N.basis(), ring);
            if (!r.is_zero()) out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            int c = cmp_x(lpp(a, ring), lpp(b, ring), ring);
            if (c != 0) return c < 0;
            return cmp_poly(a, b, ring) < 0;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        polys = std::move(out);
    };
    renormalize();

    // a nonzero rational constant makes the whole segment the unit ideal
    auto has_rational_unit = [&]() {
        for (const auto& f : polys)
            if (f.is_constant()) return true;
        return false;
    };

    // classify every leading coefficient; branch on the smallest undecided one
    auto find_branch = [&]() -> std::optional<Polynomial> {
        std::optional<Polynomial> best;
        for (const auto& f : polys) {
            if (f.is_constant()) continue;
            auto q = undecided_part(lc(f, ring), spec, ring, opt, warn);
            if (!q) continue;
            if (!best || total_degree(*q) < total_degree(*best) ||
                (total_degree(*q) == total_degree(*best) && cmp_poly(*q, *best, ring) < 0))
                best = q;
        }
        return best;
    };

    auto has_segment_unit = [&]() { // decided non-null parameter-only polynomial
        for (const auto& f : polys)
            if (is_param_only(f, ring)) return true;
        return false;
    };

    if (!has_rational_unit()) {
        if (auto q = find_branch())
            return branch_vertex(std::move(label), std::move(spec), polys, *q, ring, opt,
                                 depth, warn);
        if (has_segment_unit()) polys = {Polynomial::constant(1, ring.width())};

        // completion: all leading coefficients decided non-null
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = i + 1; j < polys.size(); ++j) pairs.emplace_back(i, j);
        while (!pairs.empty()) {
            auto [i, j] = pairs.back();
            pairs.pop_back();
            Expvec li = lpp(polys[i], ring), lj = lpp(polys[j], ring);
            bool coprime = true;
            Expvec lcm(ring.width(), 0);
            for (std::size_t k = 0; k < ring.nvars(); ++k) {
                lcm[k] = std::max(li[k], lj[k]);
                if (li[k] > 0 && lj[k] > 0) coprime = false;
            }
            if (coprime && !(is_param_only(polys[i], ring) || is_param_only(polys[j], ring)))
                continue;
            Expvec si = lcm, sj = lcm;
            for (std::size_t k = 0; k < ring.nvars(); ++k) {
                si[k] -= li[k];
                sj[k] -= lj[k];
            }
            Polynomial sp = lc(polys[j], ring) * Polynomial::monomial(si, 1) * polys[i] -
                            lc(polys[i], ring) * Polynomial::monomial(sj, 1) * polys[j];
            Polynomial rem = reduce_over_spec(sp, polys, spec, ring);
            if (rem.is_zero()) continue;
            if (rem.is_constant())
                return build_vertex(std::move(label), std::move(spec),
                                    {Polynomial::constant(1, ring.width())}, ring, opt,
                                    depth, warn);
            if (auto q = undecided_part(lc(rem, ring), spec, ring, opt, warn)) {
                std::vector<Polynomial> next = polys;
                next.push_back(rem);
                return branch_vertex(std::move(label), std::move(spec), next, *q, ring, opt,
                                     depth, warn);
            }
            if (is_param_only(rem, ring)) // decided non-null: the segment unit case
                return build_vertex(std::move(label), std::move(spec),
                                    {Polynomial::constant(1, ring.width())}, ring, opt,
                                    depth, warn);
            std::size_t n = polys.size();
            polys.push_back(rem);
            for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
        }
    }

    // terminal: auto-reduce to the canonical basis
    auto v = std::make_unique<Vertex>();
    v->label = std::move(label);
    v->warn = warn;
    bool unit = false;
    for (const auto& f : polys)
        if (f.is_constant() || is_param_only(f, ring)) unit = true; // param-only lcs are in W*
    if (unit) {
        v->basis = {Polynomial::constant(1, ring.width())};
        v->spec = std::move(spec);
        return v;
    }
    // minimalize: ascending order keeps the canonically smallest of equal lpps
    std::vector<Polynomial> minimal;
    for (const auto& f : polys) {
        bool covered = false;
        for (const auto& g : minimal)
            if (exp_divides_x(lpp(g, ring), lpp(f, ring), ring)) {
                covered = true;
                break;
            }
        if (!covered) minimal.push_back(f);
    }
    // tail-reduce and normalize
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial g = reduce_over_spec(minimal[i], others, spec, ring);
        auto [c, p] = content_normalize(g, ring);
        reduced.push_back(std::move(p));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return cmp_x(lpp(a, ring), lpp(b, ring), ring) < 0;
    });
    v->basis = std::move(reduced);
    v->spec = std::move(spec);
    return v;
}

} // namespace detail

/// BUILDTREE: Buchberger-like dichotomic discussion of a parametric ideal.
inline std::unique_ptr<Vertex> buildtree(const std::vector<Polynomial>& gens, const Ring& ring,
                                         const BuildOptions& opt = {}) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens)
        if (!g.is_zero()) polys.push_back(g);
    if (polys.empty()) throw error("buildtree: empty input system");
    RedSpec root = *make_redspec(Ideal({}, ring), {}, ring, opt.factor_degree_bound);
    return detail::build_vertex({}, std::move(root), std::move(polys), ring, opt, 0, false);
}

/// The disjoint reduced CGS: terminal vertices as cases, generic case first.
inline CGS terminal_cases(const Vertex& tree, const Ring& ring) {
    CGS out;
    std::vector<Case> cases;
    // depth-first, non-null branch before null branch
    std::function<void(const Vertex&)> walk = [&](const Vertex& v) {
        if (v.is_terminal()) {
            Case c;
            c.basis = v.basis;
            c.spec = v.spec;
            c.label = v.label;
            c.warn = v.warn;
            for (const auto& g : c.basis) c.lpp_set.push_back(lpp(g, ring));
            cases.push_back(std::move(c));
            return;
        }
        if (v.nonnull_child) walk(*v.nonnull_child);
        if (v.null_child) walk(*v.null_child);
    };
    walk(tree);
    // generic case: the all-ones label
    std::size_t gen = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        bool all_ones = true;
        for (int b : cases[i].label)
            if (b != 1) all_ones = false;
        if (all_ones) {
            gen = i;
            break;
        }
    }
    if (gen != 0) std::rotate(cases.begin(), cases.begin() + gen, cases.begin() + gen + 1);
    out.cases = std::move(cases);
    out.generic_index = 0;
    return out;
}

namespace detail {

inline int cmp_lpp_set(const std::vector<Expvec>& a, const std::vector<Expvec>& b,
                       const Ring& ring) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = cmp_x(a[i], b[i], ring);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace detail

/// Partition of the CGS by lpp set; the generic case's group comes first and
/// leads its group, remaining groups follow in lpp-set order.
inline std::vector<std::vector<Case>> group_by_lpp(const CGS& cgs, const Ring& ring) {
    std::vector<std::vector<Case>> groups;
    for (const auto& c : cgs.cases) {
        bool placed = false;
        for (auto& g : groups)
            if (detail::cmp_lpp_set(g[0].lpp_set, c.lpp_set, ring) == 0) {
                g.push_back(c);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({c});
    }
    // groups accumulate in case order, generic first already; sort the rest
    if (groups.size() > 2)
        std::sort(groups.begin() + 1, groups.end(), [&](const auto& a, const auto& b) {
            return detail::cmp_lpp_set(a[0].lpp_set, b[0].lpp_set, ring) > 0;
        });
    return groups;
}

/// Human-readable power product, e.g. "x^2*y" or "1".
inline std::string lpp_to_string(const Expvec& e, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string lpp_set_to_string(const std::vector<Expvec>& v, const Ring& ring) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += lpp_to_string(v[i], ring);
    }
    return s + "]";
}

} // namespace mccgs
