#pragma once

#include "mccgs/buildtree.hpp"
#include "mccgs/canspec.hpp"

namespace mccgs {

struct MergeBounds {
    int genimage_l = 2;
    int genimage_m = 2;
    int factor_degree_bound = 6;
};

/// Basis entry of a merged segment: one polynomial, or a sheaf of polynomials
/// sharing one lpp of which at least one specializes well on every covered
/// subsegment while the others specialize to it or to 0.
struct SheafEntry {
    std::vector<Polynomial> members;

    bool is_sheaf() const { return members.size() > 1; }
};

struct MergedSegment {
    std::vector<Expvec> lpp_set;
    std::vector<SheafEntry> basis;
    std::vector<RedSpec> subsegments;
    std::vector<std::vector<Polynomial>> case_bases; // per subsegment, per position
    std::vector<CanSpec> canspecs;
};

namespace detail {

// graded-lex enumeration of exponent vectors of length s with |v| <= bound
inline std::vector<std::vector<int>> exponent_tuples(std::size_t s, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == s) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    for (int total = 0; total <= bound; ++total) rec(0, total);
    return out;
}

inline Polynomial w_power(const std::vector<Polynomial>& w, const std::vector<int>& lambda,
                          std::size_t width) {
    Polynomial r = Polynomial::constant(1, width);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (lambda[i] > 0) r = r * pow(w[i], lambda[i]);
    return r;
}

// r2 = k * r1 with a rational k? returns k.
inline std::optional<Rat> proportional_ratio(const Polynomial& r1, const Polynomial& r2) {
    if (r1.terms.size() != r2.terms.size()) return std::nullopt;
    std::optional<Rat> k;
    auto it1 = r1.terms.begin();
    auto it2 = r2.terms.begin();
    for (; it1 != r1.terms.end(); ++it1, ++it2) {
        if (it1->first != it2->first) return std::nullopt;
        Rat ratio = it2->second / it1->second;
        if (!k)
            k = ratio;
        else if (*k != ratio)
            return std::nullopt;
    }
    return k;
}

} // namespace detail

/// GENIMAGE: search a common pre-image F with sigma_1(F) = f1 and
/// sigma_2(F) = f2, enumerating W*-multipliers up to total degree l_bound and
/// m_bound. Returns nullopt when the bounded search is exhausted
/// (semi-algorithm). A returned F always satisfies specializes_well on both
/// specs (asserted).
inline std::optional<Polynomial> genimage(const Polynomial& f1, const RedSpec& spec1,
                                          const Polynomial& f2, const RedSpec& spec2,
                                          int l_bound, int m_bound, const Ring& ring) {
    std::vector<Polynomial> gens = spec1.N.basis();
    std::size_t n1_count = gens.size();
    gens.insert(gens.end(), spec2.N.basis().begin(), spec2.N.basis().end());
    GBWithCofactors gx = gbex(gens, ring);

    // union of x-monomials, leading first
    auto s1 = coeffs_by_x(f1, ring), s2 = coeffs_by_x(f2, ring);
    std::map<Expvec, std::pair<Polynomial, Polynomial>> terms; // alpha -> (a, b)
    for (auto& [xe, c] : s1) terms[xe].first = c;
    for (auto& [xe, c] : s2) terms[xe].second = c;
    Expvec ht = lpp(f1, ring);
    if (ht != lpp(f2, ring)) throw error("genimage: lpp mismatch");
    Polynomial a_ht = lc(f1, ring), b_ht = lc(f2, ring);

    auto lambdas = detail::exponent_tuples(spec1.W.size(), l_bound);
    auto mus = detail::exponent_tuples(spec2.W.size(), m_bound);
    for (const auto& lambda : lambdas) {
        Polynomial w1 = detail::w_power(spec1.W, lambda, ring.width());
        for (const auto& mu : mus) {
            Polynomial w2 = detail::w_power(spec2.W, mu, ring.width());
            // h = k1*w1*a_HT - k2*w2*b_HT reduced by N must have a factor
            // A*k1 + B*k2 with rational A, B
            Polynomial r1 = normal_form(w1 * a_ht, gx.basis, ring);
            Polynomial r2 = normal_form(w2 * b_ht, gx.basis, ring);
            Rat k1 = 1, k2 = 1;
            if (r1.is_zero() != r2.is_zero()) continue;
            if (!r1.is_zero()) {
                auto k = detail::proportional_ratio(r1, r2);
                if (!k || *k == 0) continue;
                k1 = *k; // k1*r1 - k2*r2 = 0 with k2 = 1
            }
            bool ok = true;
            for (const auto& [xe, ab] : terms) {
                Polynomial h = k1 * (w1 * ab.first) - k2 * (w2 * ab.second);
                if (!normal_form(h, gx.basis, ring).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            // reconstruct F term-wise: c_alpha = k1*w1*a_alpha - n1_alpha with
            // the <N1>-part recovered through the cofactor matrix
            Polynomial F;
            for (const auto& [xe, ab] : terms) {
                Polynomial h = k1 * (w1 * ab.first) - k2 * (w2 * ab.second);
                auto [q, rem] = divide_full(h, gx.basis, ring);
                if (!rem.is_zero()) {
                    ok = false;
                    break;
                }
                Polynomial n1;
                for (std::size_t i = 0; i < gx.basis.size(); ++i)
                    for (std::size_t j = 0; j < n1_count; ++j)
                        n1 = n1 + q[i] * gx.matrix[i][j] * gens[j];
                Polynomial c_alpha = k1 * (w1 * ab.first) - n1;
                Expvec xfull(ring.width(), 0); // x-slice keys carry only the variable block
                for (std::size_t i = 0; i < ring.nvars(); ++i) xfull[i] = xe[i];
                F = F + c_alpha * Polynomial::monomial(xfull, 1);
            }
            if (!ok) continue;
            auto [cont, g] = content_normalize(F, ring);
            if (g.is_zero()) continue;
            if (specializes_well(g, f1, spec1, ring) && specializes_well(g, f2, spec2, ring))
                return g;
        }
    }
    return std::nullopt;
}

struct DecideResult {
    enum Kind { poly, sheaf, not_found } kind = not_found;
    std::vector<Polynomial> members; // one polynomial, or the sheaf members
};

/// DECIDE (Table 1): common pre-image, sheaf, or neither, for two same-lpp
/// reduced polynomials. S(f1, f2) = lc(f2)*f1 - lc(f1)*f2.
inline DecideResult decide(const Polynomial& f1, const RedSpec& spec1, const Polynomial& f2,
                           const RedSpec& spec2, const MergeBounds& bounds, const Ring& ring) {
    Polynomial s = lc(f2, ring) * f1 - lc(f1, ring) * f2;
    auto from_genimage = [&]() -> DecideResult {
        auto F = genimage(f1, spec1, f2, spec2, bounds.genimage_l, bounds.genimage_m, ring);
        if (!F) return {DecideResult::not_found, {}};
        return {DecideResult::poly, {*F}};
    };
    if (!normal_form(s, spec2.N.basis(), ring).is_zero()) return from_genimage();
    if (wstar_member(normal_form(lc(f1, ring), spec2.N.basis(), ring), spec2, ring))
        return {DecideResult::poly, {f1}};
    if (!normal_form(s, spec1.N.basis(), ring).is_zero()) return from_genimage();
    if (wstar_member(normal_form(lc(f2, ring), spec1.N.basis(), ring), spec1, ring))
        return {DecideResult::poly, {f2}};
    std::vector<Polynomial> members = {f1, f2};
    std::sort(members.begin(), members.end(), [&](const Polynomial& a, const Polynomial& b) {
        return cmp_poly(a, b, ring) < 0;
    });
    return {DecideResult::sheaf, members};
}

namespace detail {

/// Conditions common to the covered subsegments: intersected N, and the
/// W-polynomials that remain non-null on every subsegment.
inline std::optional<RedSpec> combined_spec(const std::vector<RedSpec>& subs, const Ring& ring,
                                            int degree_bound) {
    Ideal n = subs[0].N;
    for (std::size_t i = 1; i < subs.size(); ++i) n = ideal_intersection(n, subs[i].N, ring);
    std::vector<Polynomial> ws;
    for (const auto& s : subs)
        for (const auto& w : s.W) {
            if (std::find(ws.begin(), ws.end(), w) != ws.end()) continue;
            bool ok = true;
            for (const auto& t : subs)
                if (!wstar_member(normal_form(w, t.N.basis(), ring), t, ring)) {
                    ok = false;
                    break;
                }
            if (ok) ws.push_back(w);
        }
    return make_redspec(n, ws, ring, degree_bound);
}

/// Specializes to the target or to zero on the target's segment.
inline bool specializes_to_or_vanishes(const Polynomial& f, const Polynomial& target,
                                       const RedSpec& spec, const Ring& ring) {
    if (normal_form(f, spec.N.basis(), ring).is_zero()) return true;
    return specializes_well(f, target, spec, ring);
}

} // namespace detail

struct MergeDiagnostics {
    std::vector<std::string> warnings;   // WARNs, NotFound events
    std::vector<std::string> violations; // conjecture-violation flags
};

namespace detail {

// Attempt to absorb a case into a merged segment; on success, updates it.
inline bool try_absorb(MergedSegment& seg, const Case& c, const MergeBounds& bounds,
                       const Ring& ring) {
    auto spec0 = combined_spec(seg.subsegments, ring, bounds.factor_degree_bound);
    if (!spec0) return false;
    std::vector<SheafEntry> next = seg.basis;
    for (std::size_t pos = 0; pos < next.size(); ++pos) {
        const Polynomial& f = c.basis[pos];
        SheafEntry& entry = next[pos];
        if (!entry.is_sheaf()) {
            DecideResult d = decide(entry.members[0], *spec0, f, c.spec, bounds, ring);
            if (d.kind == DecideResult::not_found) return false;
            entry.members = d.members;
            continue;
        }
        // sheaf entry: at least one member must specialize well to f on the
        // candidate segment, the rest to f or to 0; otherwise try enlarging
        // the sheaf with f itself
        bool covered = false;
        bool rest_ok = true;
        for (const auto& m : entry.members) {
            if (specializes_well(m, f, c.spec, ring))
                covered = true;
            else if (!normal_form(m, c.spec.N.basis(), ring).is_zero())
                rest_ok = false;
        }
        if (covered && rest_ok) continue;
        if (!rest_ok) return false;
        // f joins the sheaf: on every covered subsegment, f must specialize
        // to that subsegment's reduced polynomial or vanish
        for (std::size_t i = 0; i < seg.subsegments.size(); ++i)
            if (!specializes_to_or_vanishes(f, seg.case_bases[i][pos], seg.subsegments[i],
                                            ring))
                return false;
        entry.members.push_back(f);
        std::sort(entry.members.begin(), entry.members.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      return cmp_poly(a, b, ring) < 0;
                  });
        entry.members.erase(std::unique(entry.members.begin(), entry.members.end()),
                            entry.members.end());
    }
    seg.basis = std::move(next);
    seg.subsegments.push_back(c.spec);
    seg.case_bases.push_back(c.basis);
    return true;
}

} // namespace detail

/// Greedy transitive packing of one same-lpp group (Conjecture 1): absorb
/// each case into the first merged segment that admits a common basis, start
/// a new segment otherwise. Flags a conjecture violation when a case is
/// absorbable by more than one existing segment.
inline std::vector<MergedSegment> pack_group(const std::vector<Case>& group,
                                             const MergeBounds& bounds, const Ring& ring,
                                             MergeDiagnostics* diag = nullptr) {
    std::vector<MergedSegment> out;
    for (const auto& c : group) {
        std::size_t absorbed = out.size();
        int could_absorb = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            MergedSegment trial = out[i];
            if (detail::try_absorb(trial, c, bounds, ring)) {
                ++could_absorb;
                if (absorbed == out.size()) {
                    out[i] = std::move(trial);
                    absorbed = i;
                }
            }
        }
        if (could_absorb > 1 && diag)
            diag->violations.push_back("conjecture violation: case absorbable by " +
                                       std::to_string(could_absorb) +
                                       " merged segments for lpp " +
                                       lpp_set_to_string(c.lpp_set, ring));
        if (absorbed == out.size()) {
            MergedSegment seg;
            seg.lpp_set = c.lpp_set;
            for (const auto& f : c.basis) seg.basis.push_back(SheafEntry{{f}});
            seg.subsegments = {c.spec};
            seg.case_bases = {c.basis};
            out.push_back(std::move(seg));
        }
    }
    if (out.size() > 1 && diag)
        diag->warnings.push_back("no common reduced basis for lpp " +
                                 lpp_set_to_string(group[0].lpp_set, ring));
    return out;
}

/// The MCCGS pipeline: BUILDTREE, group by lpp, pack each group, attach the
/// canonical decompositions of every subsegment.
inline std::vector<MergedSegment> mccgs_segments(const std::vector<Polynomial>& gens,
                                                 const Ring& ring,
                                        const MergeBounds& bounds = {},
                                        MergeDiagnostics* diag = nullptr,
                                        const BuildOptions& build_opt = {}) {
    auto tree = buildtree(gens, ring, build_opt);
    CGS cgs = terminal_cases(*tree, ring);
    auto groups = group_by_lpp(cgs, ring);
    std::vector<MergedSegment> out;
    for (const auto& g : groups)
        for (auto& seg : pack_group(g, bounds, ring, diag)) {
            for (const auto& sub : seg.subsegments)
                seg.canspecs.push_back(
                    difftocanspec(redspec_to_diffspec(sub, ring), ring,
                                  bounds.factor_degree_bound));
            out.push_back(std::move(seg));
        }
    return out;
}

} // namespace mccgs
