#pragma once

#include "mccgs/gcd.hpp"

#include <cstdint>

namespace mccgs {

/// Complete factorization over Q: input == unit * prod factors[i]^mult[i],
/// with pairwise non-associate irreducible factors, each integer-primitive
/// and sign-normalized.
struct Factorization {
    Rat unit = 1;
    std::vector<std::pair<Polynomial, int>> factors;
};

namespace detail {

// ---- dense univariate arithmetic over Z and Z/m ----------------------------

using ZPoly = std::vector<Int>; // ascending coefficients

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& c : r) c = mod_pos(c, m);
    ztrim(r);
    return r;
}

// symmetric residues in (-m/2, m/2]
inline ZPoly zbalance(const ZPoly& a, const Int& m) {
    ZPoly r = zmod(a, m);
    for (auto& c : r)
        if (2 * c > m) c -= m;
    ztrim(r);
    return r;
}

// division by a monic divisor, coefficients mod m
inline std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly rem = zmod(a, m);
    if (zdeg(b) < 0 || b.back() != 1) throw error("zdivmod_monic: divisor not monic");
    ZPoly q;
    if (zdeg(rem) >= zdeg(b)) q.assign(rem.size() - b.size() + 1, Int(0));
    while (zdeg(rem) >= zdeg(b)) {
        int shift = zdeg(rem) - zdeg(b);
        Int c = rem.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = mod_pos(rem[shift + i] - c * b[i], m);
        ztrim(rem);
    }
    ztrim(q);
    return {q, rem};
}

// exact division over Z; throws if not exact
inline ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a, q;
    if (b.empty()) throw error("zdiv_exact by zero");
    if (zdeg(rem) >= zdeg(b)) q.assign(rem.size() - b.size() + 1, Int(0));
    while (zdeg(rem) >= zdeg(b)) {
        if (rem.back() % b.back() != 0) throw error("zdiv_exact: not exact");
        Int c = rem.back() / b.back();
        int shift = zdeg(rem) - zdeg(b);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        ztrim(rem);
    }
    if (!rem.empty()) throw error("zdiv_exact: nonzero remainder");
    ztrim(q);
    return q;
}

inline bool zdivides(const ZPoly& b, const ZPoly& a) {
    try {
        zdiv_exact(a, b);
        return true;
    } catch (const error&) {
        return false;
    }
}

inline Int zcontent(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    return g;
}

inline ZPoly zprimitive(const ZPoly& a) {
    Int g = zcontent(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    ZPoly r = a;
    for (auto& c : r) c /= g;
    return r;
}

inline ZPoly zderiv(const ZPoly& a) {
    ZPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Int(i));
    ztrim(r);
    return r;
}

// ---- arithmetic mod a small prime ------------------------------------------

using PPoly = std::vector<long long>;

inline void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

inline long long pinv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

inline std::pair<PPoly, PPoly> pdivmod(const PPoly& a, const PPoly& b, long long p) {
    PPoly rem = a, q;
    ptrim(rem);
    if (b.empty()) throw error("pdivmod by zero");
    long long inv = pinv(b.back(), p);
    if (pdeg(rem) >= pdeg(b)) q.assign(rem.size() - b.size() + 1, 0);
    while (pdeg(rem) >= pdeg(b)) {
        long long c = rem.back() * inv % p;
        int shift = pdeg(rem) - pdeg(b);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = ((rem[shift + i] - c * b[i]) % p + p) % p;
        ptrim(rem);
    }
    ptrim(q);
    return {q, rem};
}

inline PPoly pgcd(PPoly a, PPoly b, long long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // make monic
        long long inv = pinv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

// extended euclid: s*a + t*b = 1 mod p (a, b coprime)
inline std::pair<PPoly, PPoly> pbezout(const PPoly& a, const PPoly& b, long long p) {
    PPoly r0 = a, r1 = b;
    PPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    ptrim(r0);
    ptrim(r1);
    while (!r1.empty()) {
        auto [q, r2] = pdivmod(r0, r1, p);
        PPoly s2 = s0, t2 = t0;
        PPoly qs = pmul(q, s1, p), qt = pmul(q, t1, p);
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
        t2.resize(std::max(t2.size(), qt.size()), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
        ptrim(s2);
        ptrim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (pdeg(r0) != 0) throw error("pbezout: inputs not coprime");
    long long inv = pinv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
inline std::vector<PPoly> berlekamp(const PPoly& f, long long p) {
    int n = pdeg(f);
    if (n == 1) return {f};
    // x^p mod f by repeated squaring
    PPoly xp = {1};
    PPoly base = pdivmod(PPoly{0, 1}, f, p).second;
    long long e = p;
    while (e > 0) {
        if (e & 1) xp = pdivmod(pmul(xp, base, p), f, p).second;
        base = pdivmod(pmul(base, base, p), f, p).second;
        e >>= 1;
    }
    // rows[i] = x^{ip} mod f
    std::vector<PPoly> rows(n);
    rows[0] = {1};
    for (int i = 1; i < n; ++i) rows[i] = pdivmod(pmul(rows[i - 1], xp, p), f, p).second;
    // A = Q - I, left nullspace via elimination on A^T
    std::vector<std::vector<long long>> M(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= pdeg(rows[i]); ++j) M[j][i] = rows[i][j];
        M[i][i] = ((M[i][i] - 1) % p + p) % p;
    }
    // gaussian elimination, collect nullspace basis
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        long long inv = pinv(M[rank][col], p);
        for (int j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            long long c = M[r][col];
            for (int j = 0; j < n; ++j) M[r][j] = ((M[r][j] - c * M[rank][j]) % p + p) % p;
        }
        pivot_col[rank++] = col;
    }
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        PPoly v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = ((-M[r][col]) % p + p) % p;
        ptrim(v);
        basis.push_back(std::move(v));
    }
    std::size_t target = basis.size();
    std::vector<PPoly> factors = {f};
    for (const auto& v : basis) {
        if (factors.size() == target) break;
        if (pdeg(v) < 1) continue;
        for (long long c = 0; c < p && factors.size() < target; ++c) {
            std::vector<PPoly> next;
            for (auto& u : factors) {
                if (pdeg(u) <= 1) {
                    next.push_back(std::move(u));
                    continue;
                }
                PPoly vc = v;
                vc.resize(std::max<std::size_t>(vc.size(), 1), 0);
                vc[0] = ((vc[0] - c) % p + p) % p;
                ptrim(vc);
                PPoly g = pgcd(u, vc, p);
                if (pdeg(g) > 0 && pdeg(g) < pdeg(u)) {
                    next.push_back(pdivmod(u, g, p).first);
                    next.push_back(std::move(g));
                } else {
                    next.push_back(std::move(u));
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ---- Hensel lifting ---------------------------------------------------------

// One Hensel step: lifts f = g*h (mod m), s*g + t*h = 1 (mod m) to mod m^2.
// f, g, h monic.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
    ZPoly gstar = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
    ZPoly hstar = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, gstar), zmul(t, hstar)), ZPoly{1}), m2);
    auto [c, d] = zdivmod_monic(zmul(s, b), hstar, m2);
    ZPoly sstar = zmod(zsub(s, d), m2);
    ZPoly tstar = zmod(zsub(t, zadd(zmul(t, b), zmul(c, gstar))), m2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

// Lift the monic factorization f = prod(facs) (mod p) to mod p^(2^iters) >= bound.
inline void hensel_lift_tree(const ZPoly& f, std::vector<ZPoly>& facs, long long p,
                             const Int& bound) {
    if (facs.size() <= 1) {
        if (!facs.empty()) {
            Int m = p;
            while (m < bound) m *= m;
            facs[0] = zmod(f, m);
        }
        return;
    }
    std::size_t half = facs.size() / 2;
    PPoly gp = {1}, hp = {1};
    auto to_pp = [&](const ZPoly& a) {
        PPoly r;
        for (const auto& c : a) r.push_back(static_cast<long long>(mod_pos(c, p)));
        ptrim(r);
        return r;
    };
    for (std::size_t i = 0; i < half; ++i) gp = pmul(gp, to_pp(facs[i]), p);
    for (std::size_t i = half; i < facs.size(); ++i) hp = pmul(hp, to_pp(facs[i]), p);
    auto [sp, tp] = pbezout(gp, hp, p);
    auto to_z = [](const PPoly& a) {
        ZPoly r;
        for (long long c : a) r.push_back(Int(c));
        return r;
    };
    ZPoly g = to_z(gp), h = to_z(hp), s = to_z(sp), t = to_z(tp);
    Int m = p;
    while (m < bound) {
        hensel_step(zmod(f, m * m * m * m), g, h, s, t, m);
        m *= m;
    }
    std::vector<ZPoly> left(facs.begin(), facs.begin() + half);
    std::vector<ZPoly> right(facs.begin() + half, facs.end());
    hensel_lift_tree(zmod(g, m), left, p, bound);
    hensel_lift_tree(zmod(h, m), right, p, bound);
    facs.clear();
    facs.insert(facs.end(), left.begin(), left.end());
    facs.insert(facs.end(), right.begin(), right.end());
}

// ---- univariate factorization over Z ---------------------------------------

// Irreducible factors of a primitive squarefree univariate integer polynomial
// (positive leading coefficient), each primitive with positive lead.
inline std::vector<ZPoly> factor_univariate_squarefree(const ZPoly& s) {
    int n = zdeg(s);
    if (n <= 1) return {s};
    // monicize: h(y) = l^(n-1) * s(y/l)
    Int l = s.back();
    ZPoly h(s.size());
    h[n] = 1;
    Int power = 1;
    for (int i = n - 1; i >= 0; --i) {
        h[i] = s[i] * power;
        power *= l;
    }
    // choose a prime keeping h squarefree mod p
    static const long long primes[] = {3,    5,    7,    11,   13,  17,  19,  23,  29, 31,
                                       37,   41,   43,   47,   53,  59,  61,  67,  71, 73,
                                       79,   83,   89,   97,   101, 103, 107, 109, 113};
    long long p = 0;
    PPoly hp;
    for (long long cand : primes) {
        PPoly fp;
        for (const auto& c : h) fp.push_back(static_cast<long long>(mod_pos(c, cand)));
        ptrim(fp);
        if (pdeg(fp) != n) continue; // cannot happen (monic) but keep the guard
        PPoly dp;
        for (int i = 1; i <= n; ++i)
            dp.push_back(static_cast<long long>(i) % cand * fp[i] % cand);
        ptrim(dp);
        if (pdeg(pgcd(fp, dp, cand)) == 0) {
            p = cand;
            hp = std::move(fp);
            break;
        }
    }
    if (p == 0) throw degree_bound_exceeded("no small prime keeps the polynomial squarefree");

    std::vector<PPoly> modular = berlekamp(hp, p);
    if (modular.size() == 1) return {s};
    // sort for determinism
    std::sort(modular.begin(), modular.end());

    // Mignotte-style bound on coefficients of monic factors of h
    Int height = 0;
    for (const auto& c : h) height = std::max(height, Int(boost::multiprecision::abs(c)));
    Int bound = height * 2;
    for (int i = 0; i < n; ++i) bound *= 2; // 2^(n+1) * height
    bound = bound * Int(n + 1);

    std::vector<ZPoly> lifted;
    for (const auto& m : modular) {
        ZPoly z;
        for (long long c : m) z.push_back(Int(c));
        lifted.push_back(std::move(z));
    }
    Int modulus = p;
    while (modulus < bound) modulus *= modulus;
    hensel_lift_tree(zmod(h, modulus), lifted, p, bound);

    // subset recombination over the lifted monic factors
    std::vector<ZPoly> hfactors;
    ZPoly remaining = h;
    std::vector<ZPoly> avail = lifted;
    bool progress = true;
    while (progress && avail.size() > 0) {
        progress = false;
        std::size_t k = avail.size();
        for (std::size_t size = 1; size <= k / 2 && !progress; ++size) {
            for (std::uint64_t mask = 1; mask < (1ull << k) && !progress; ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
                ZPoly cand = {1};
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1ull << i)) cand = zmod(zmul(cand, avail[i]), modulus);
                cand = zbalance(cand, modulus);
                if (!zdivides(cand, remaining)) continue;
                hfactors.push_back(cand);
                remaining = zdiv_exact(remaining, cand);
                std::vector<ZPoly> rest;
                for (std::size_t i = 0; i < k; ++i)
                    if (!(mask & (1ull << i))) rest.push_back(avail[i]);
                avail = std::move(rest);
                progress = true;
            }
        }
        if (!progress) break;
    }
    if (zdeg(remaining) > 0) hfactors.push_back(remaining);

    // undo monicization: factor of s = primitive part of H(l*y)
    std::vector<ZPoly> out;
    for (const auto& H : hfactors) {
        ZPoly g(H.size());
        Int power = 1;
        for (std::size_t i = 0; i < H.size(); ++i) {
            g[i] = H[i] * power;
            power *= l;
        }
        out.push_back(zprimitive(g));
    }
    return out;
}

} // namespace detail

namespace detail {

// Present-variable list and per-variable degrees.
inline std::vector<std::size_t> present_indeterminates(const Polynomial& f) {
    std::vector<std::size_t> out;
    if (f.is_zero()) return out;
    std::size_t w = f.width();
    for (std::size_t i = 0; i < w; ++i)
        if (depends_on(f, i)) out.push_back(i);
    return out;
}

// Kronecker image of f onto a dense univariate integer polynomial, using
// mixed-radix weights. All coefficients of f must be integers.
inline ZPoly kronecker_image(const Polynomial& f, const std::vector<std::size_t>& vs,
                             const std::vector<long long>& weights, std::size_t size) {
    ZPoly u(size, Int(0));
    for (const auto& [e, c] : f.terms) {
        long long pos = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) pos += e[vs[j]] * weights[j];
        u[pos] += numerator(c);
    }
    ztrim(u);
    return u;
}

// Decode a univariate integer polynomial back through the Kronecker map.
inline Polynomial kronecker_decode(const ZPoly& u, const std::vector<std::size_t>& vs,
                                   const std::vector<int>& radices,
                                   const std::vector<long long>& weights, std::size_t width) {
    Polynomial r;
    for (std::size_t e = 0; e < u.size(); ++e) {
        if (u[e] == 0) continue;
        Expvec w(width, 0);
        long long rem = static_cast<long long>(e);
        for (std::size_t j = 0; j < vs.size(); ++j) {
            w[vs[j]] = static_cast<int>(rem / weights[j] % radices[j]);
            rem -= static_cast<long long>(w[vs[j]]) * weights[j];
        }
        r.add_term(w, Rat(u[e]));
    }
    return r;
}

constexpr int kronecker_degree_cap = 96;

// Irreducible factors of a squarefree, integer-primitive polynomial in >= 2
// indeterminates via Kronecker substitution and subset recombination.
inline std::vector<Polynomial> factor_multivariate_squarefree(const Polynomial& s,
                                                              const Ring& ring) {
    auto vs = present_indeterminates(s);
    std::vector<int> radices;
    std::vector<long long> weights;
    long long w = 1;
    for (std::size_t v : vs) {
        radices.push_back(degree_in(s, v) + 1);
        weights.push_back(w);
        w *= radices.back();
        if (w > kronecker_degree_cap + 1)
            throw degree_bound_exceeded("Kronecker substitution degree exceeds cap");
    }
    ZPoly u = kronecker_image(s, vs, weights, static_cast<std::size_t>(w));

    // squarefree decomposition of the image, then full factorization
    std::vector<ZPoly> avail; // multiset of irreducible factors of u
    ZPoly rest = zprimitive(u);
    while (zdeg(rest) > 0) {
        ZPoly g;
        {
            // integer gcd via gcd over Q (primitive PRS on dense Z-polys)
            ZPoly a = rest, b = zprimitive(zderiv(rest));
            while (!b.empty()) {
                // pseudo-remainder
                ZPoly r = a;
                while (zdeg(r) >= zdeg(b) && !r.empty()) {
                    Int c = r.back();
                    Int lb = b.back();
                    int shift = zdeg(r) - zdeg(b);
                    for (auto& x : r) x *= lb;
                    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
                    ztrim(r);
                }
                a = std::move(b);
                b = zprimitive(r);
            }
            g = zprimitive(a);
        }
        ZPoly sqfree = zdiv_exact(rest, g);
        if (zdeg(sqfree) > 0)
            for (const auto& q : factor_univariate_squarefree(zprimitive(sqfree))) {
                ZPoly cur = q;
                while (zdivides(cur, rest)) {
                    // record with full multiplicity in u
                    ZPoly probe = rest;
                    int mult = 0;
                    while (zdivides(q, probe)) {
                        probe = zdiv_exact(probe, q);
                        ++mult;
                    }
                    for (int i = 0; i < mult; ++i) avail.push_back(q);
                    rest = probe;
                    break;
                }
            }
        else
            break;
        if (zdeg(rest) > 0 && zdeg(g) == zdeg(rest)) break; // safety
    }

    if (avail.size() > 16)
        throw degree_bound_exceeded("too many univariate factors for recombination");

    std::vector<Polynomial> out;
    Polynomial remaining = s;
    bool progress = true;
    while (progress && !remaining.is_constant()) {
        progress = false;
        std::size_t k = avail.size();
        for (std::size_t size = 1; size <= k && !progress; ++size) {
            for (std::uint64_t mask = 1; mask < (1ull << k) && !progress; ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
                ZPoly prod = {1};
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1ull << i)) prod = zmul(prod, avail[i]);
                Polynomial cand = kronecker_decode(prod, vs, radices, weights, s.width());
                if (cand.is_constant()) continue;
                cand = primitive_part(cand, ring);
                auto q = try_divide(remaining, cand, ring);
                if (!q) continue;
                out.push_back(cand);
                remaining = *q;
                std::vector<ZPoly> restlist;
                for (std::size_t i = 0; i < k; ++i)
                    if (!(mask & (1ull << i))) restlist.push_back(avail[i]);
                avail = std::move(restlist);
                progress = true;
            }
        }
    }
    if (!remaining.is_constant()) out.push_back(primitive_part(remaining, ring));
    return out;
}

inline std::vector<Polynomial> factor_squarefree_primitive(const Polynomial& s,
                                                           const Ring& ring) {
    auto vs = present_indeterminates(s);
    if (vs.empty()) return {};
    if (vs.size() == 1) {
        std::size_t v = vs[0];
        auto uni = as_univariate(s, v);
        ZPoly z(static_cast<std::size_t>(uni.rbegin()->first) + 1, Int(0));
        for (const auto& [d, coeff] : uni) {
            Rat c = coeff.constant_value();
            if (denominator(c) != 1) throw error("factor: input not integer-primitive");
            z[d] = numerator(c);
        }
        std::vector<Polynomial> out;
        for (const auto& q : factor_univariate_squarefree(zprimitive(z))) {
            Polynomial g;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                Expvec e(s.width(), 0);
                e[v] = static_cast<int>(i);
                g.add_term(e, Rat(q[i]));
            }
            out.push_back(primitive_part(g, ring));
        }
        return out;
    }
    return factor_multivariate_squarefree(s, ring);
}

// All irreducible factors without multiplicities, for an integer-primitive f.
inline void factor_into(const Polynomial& f, const Ring& ring, std::vector<Polynomial>& out) {
    if (f.is_constant()) return;
    std::size_t v = *present_indeterminates(f).rbegin();
    Polynomial cont = detail::content_wrt(f, v, ring);
    Polynomial pp = primitive_part(*try_divide(f, cont, ring), ring);
    if (!cont.is_constant()) factor_into(primitive_part(cont, ring), ring, out);
    // squarefree part of pp wrt v (all factors of pp involve v)
    Polynomial s = *try_divide(pp, poly_gcd(pp, derivative(pp, v), ring), ring);
    s = primitive_part(s, ring);
    for (auto& q : factor_squarefree_primitive(s, ring)) out.push_back(std::move(q));
}

} // namespace detail

/// Complete irreducible factorization over Q. Throws degree_bound_exceeded
/// when the input's total degree exceeds the bound or the Kronecker reduction
/// is out of desk-scale reach; callers then keep the polynomial unfactored.
inline Factorization factor_irreducible(const Polynomial& f, const Ring& ring,
                                        int degree_bound = 6) {
    if (f.is_zero()) throw error("factor of zero polynomial");
    if (total_degree(f) > degree_bound)
        throw degree_bound_exceeded("total degree " + std::to_string(total_degree(f)) +
                                    " exceeds factorization bound " +
                                    std::to_string(degree_bound));
    Factorization out;
    Polynomial g = f;
    out.unit = primitive_normalize(g, ring);
    std::vector<Polynomial> irr;
    detail::factor_into(g, ring, irr);

    // multiplicities by trial division, canonical factor order
    std::sort(irr.begin(), irr.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (total_degree(a) != total_degree(b)) return total_degree(a) < total_degree(b);
        return cmp_poly(a, b, ring) < 0;
    });
    irr.erase(std::unique(irr.begin(), irr.end()), irr.end());
    Polynomial rest = g;
    for (const auto& q : irr) {
        int mult = 0;
        while (true) {
            auto d = try_divide(rest, q, ring);
            if (!d) break;
            rest = *d;
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(q, mult);
    }
    if (!rest.is_constant()) throw error("factorization incomplete");
    out.unit *= rest.constant_value();
    return out;
}

/// Distinct irreducible factors only (helper used all over the discussion).
inline std::vector<Polynomial> irreducible_factors(const Polynomial& f, const Ring& ring,
                                                   int degree_bound = 6) {
    std::vector<Polynomial> out;
    for (auto& [q, m] : factor_irreducible(f, ring, degree_bound).factors)
        out.push_back(std::move(q));
    return out;
}

} // namespace mccgs
