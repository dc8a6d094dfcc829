#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mccgs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct degree_bound_exceeded : error {
    using error::error;
};

struct sampling_failed : error {
    using error::error;
};

enum class OrderKind { lex, grevlex };

inline std::string to_string(OrderKind k) {
    return k == OrderKind::lex ? "lex" : "grevlex";
}

/// Exponent vector over the flattened indeterminate list of a ring:
/// variable block first, parameter block after it.
using Expvec = std::vector<int>;

/// Two-block polynomial ring K[params][vars] with one monomial order per block.
/// Indeterminate index layout: vars occupy [0, nvars), params [nvars, nvars+nparams).
struct Ring {
    std::vector<std::string> params;
    std::vector<std::string> vars;
    OrderKind order_vars = OrderKind::lex;
    OrderKind order_params = OrderKind::lex;

    Ring() = default;
    Ring(std::vector<std::string> params_, std::vector<std::string> vars_,
         OrderKind ov = OrderKind::lex, OrderKind op = OrderKind::lex)
        : params(std::move(params_)), vars(std::move(vars_)),
          order_vars(ov), order_params(op) {
        for (std::size_t i = 0; i < width(); ++i)
            for (std::size_t j = i + 1; j < width(); ++j)
                if (name(i) == name(j))
                    throw error("duplicate indeterminate name: " + name(i));
        if (width() == 0) throw error("ring needs at least one indeterminate");
    }

    std::size_t nvars() const { return vars.size(); }
    std::size_t nparams() const { return params.size(); }
    std::size_t width() const { return vars.size() + params.size(); }

    const std::string& name(std::size_t idx) const {
        return idx < nvars() ? vars[idx] : params[idx - nvars()];
    }

    bool is_var(std::size_t idx) const { return idx < nvars(); }

    std::optional<std::size_t> index_of(const std::string& nm) const {
        for (std::size_t i = 0; i < width(); ++i)
            if (name(i) == nm) return i;
        return std::nullopt;
    }

    /// Ring with one auxiliary variable prepended to the variable block.
    /// The block order makes it an elimination order for that variable.
    Ring with_aux_var(const std::string& nm) const {
        std::vector<std::string> v;
        v.reserve(vars.size() + 1);
        v.push_back(nm);
        v.insert(v.end(), vars.begin(), vars.end());
        return Ring(params, v, order_vars, order_params);
    }

    /// A name not colliding with any indeterminate of this ring.
    std::string fresh_name(const std::string& base = "t@") const {
        std::string nm = base;
        int k = 0;
        while (index_of(nm)) nm = base + std::to_string(k++);
        return nm;
    }
};

namespace detail {

inline int block_deg(const Expvec& e, std::size_t lo, std::size_t hi) {
    int d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += e[i];
    return d;
}

// Compare one block of two exponent vectors. Returns <0, 0, >0.
inline int cmp_block(const Expvec& a, const Expvec& b, std::size_t lo, std::size_t hi,
                     OrderKind kind) {
    if (kind == OrderKind::lex) {
        for (std::size_t i = lo; i < hi; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    // grevlex
    int da = block_deg(a, lo, hi), db = block_deg(b, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

} // namespace detail

/// Block order on full exponent vectors: the variable block dominates,
/// ties are broken by the parameter block. 1 is minimal in both blocks.
inline int cmp_monomial(const Expvec& a, const Expvec& b, const Ring& ring) {
    int c = detail::cmp_block(a, b, 0, ring.nvars(), ring.order_vars);
    if (c != 0) return c;
    return detail::cmp_block(a, b, ring.nvars(), ring.width(), ring.order_params);
}

/// gcd of rationals: gcd of numerators over lcm of denominators, positive.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int na = boost::multiprecision::abs(numerator(a));
    Int nb = boost::multiprecision::abs(numerator(b));
    Int da = denominator(a), db = denominator(b);
    if (a == 0) return boost::multiprecision::abs(b);
    if (b == 0) return boost::multiprecision::abs(a);
    return Rat(gcd(na, nb), lcm(da, db));
}

} // namespace mccgs
