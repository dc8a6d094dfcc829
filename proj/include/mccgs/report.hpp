#pragma once

#include "mccgs/merge.hpp"
#include "mccgs/parse.hpp"

#include <json.hpp>

#include <sstream>

namespace mccgs {

/// Parsed problem file: ring declaration plus the input system.
struct ProblemFile {
    Ring ring;
    std::vector<Polynomial> system;
};

/// Pipeline selection and tunables, mirroring the CLI flags.
struct RunOptions {
    std::string mode = "buildtree"; // "buildtree" | "mccgs"
    int genimage_bound = 2;
    int factor_degree_bound = 6;
    int samples = 5;
    unsigned seed = 1;
};

/// Everything one run produces; serialized by emit_table / emit_json.
struct ReportBundle {
    std::string mode;
    Ring ring;
    std::unique_ptr<Vertex> tree;
    CGS cgs;                             // per-terminal cases (both modes)
    std::vector<MergedSegment> segments; // mccgs mode only
    MergeDiagnostics diagnostics;
    unsigned seed = 1;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_names(const std::string& s, std::size_t line_no) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        for (char ch : item)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw parse_error("invalid identifier '" + item + "'", line_no);
        out.push_back(item);
    }
    return out;
}

inline OrderKind parse_order(const std::string& s, std::size_t line_no) {
    if (s == "lex") return OrderKind::lex;
    if (s == "grevlex") return OrderKind::grevlex;
    throw parse_error("unknown monomial order '" + s + "'", line_no);
}

} // namespace detail

/// Problem-file format: `params:` / `vars:` / `order_vars:` / `order_params:`
/// headers followed by `system:` and one polynomial per line. Positions in
/// thrown parse_errors are line numbers.
inline ProblemFile parse_problem(const std::string& text) {
    std::vector<std::string> params, vars;
    OrderKind ov = OrderKind::lex, op = OrderKind::lex;
    std::vector<std::pair<std::string, std::size_t>> polys; // text, line number
    bool in_system = false;

    std::stringstream ss(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (in_system) {
            polys.emplace_back(t, line_no);
            continue;
        }
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value' header line", line_no);
        std::string key = detail::trim(t.substr(0, colon));
        std::string value = detail::trim(t.substr(colon + 1));
        if (key == "params")
            params = detail::split_names(value, line_no);
        else if (key == "vars")
            vars = detail::split_names(value, line_no);
        else if (key == "order_vars")
            ov = detail::parse_order(value, line_no);
        else if (key == "order_params")
            op = detail::parse_order(value, line_no);
        else if (key == "system")
            in_system = true;
        else
            throw parse_error("unknown header '" + key + "'", line_no);
    }
    if (vars.empty()) throw parse_error("no variables declared", line_no);
    if (polys.empty()) throw parse_error("empty system", line_no);

    ProblemFile pf;
    pf.ring = Ring(params, vars, ov, op);
    for (const auto& [src, ln] : polys) {
        try {
            pf.system.push_back(parse_poly(src, pf.ring));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(ln) + ": " + e.what(), ln);
        }
    }
    return pf;
}

namespace detail {

inline std::string label_to_string(const std::vector<int>& label) {
    std::string s = "[";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(label[i]);
    }
    return s + "]";
}

inline std::string basis_entry_to_string(const SheafEntry& e, const Ring& ring) {
    if (!e.is_sheaf()) return to_string(e.members[0], ring);
    std::string s = "{";
    for (std::size_t i = 0; i < e.members.size(); ++i) {
        if (i) s += ", ";
        s += to_string(e.members[i], ring);
    }
    return s + "}";
}

inline std::string poly_list_to_string(const std::vector<Polynomial>& v, const Ring& ring,
                                       char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i], ring);
    }
    s += close;
    return s;
}

/// Partition sanity check on sampled points: every sampled segment point must
/// lie in exactly one terminal segment. Sampling failures are skipped.
inline void sample_check(const CGS& cgs, const Ring& ring, int samples, unsigned seed,
                         MergeDiagnostics& diag) {
    if (samples <= 0) return;
    for (const auto& c : cgs.cases) {
        std::vector<ParamPoint> pts;
        try {
            pts = sample_points(c.spec, static_cast<std::size_t>(samples), ring, seed);
        } catch (const sampling_failed&) {
            continue;
        }
        for (const auto& p : pts) {
            int hits = 0;
            for (const auto& other : cgs.cases)
                if (segment_contains(other.spec, p, ring)) ++hits;
            if (hits != 1) {
                diag.warnings.push_back("sampled point covered by " + std::to_string(hits) +
                                        " segments near case " + label_to_string(c.label));
                return;
            }
        }
    }
}

} // namespace detail

/// Execute the selected pipeline on a parsed problem.
inline ReportBundle run_problem(const ProblemFile& pf, const RunOptions& opt) {
    ReportBundle b;
    b.mode = opt.mode;
    b.ring = pf.ring;
    b.seed = opt.seed;

    BuildOptions bopt;
    bopt.factor_degree_bound = opt.factor_degree_bound;
    b.tree = buildtree(pf.system, pf.ring, bopt);
    b.cgs = terminal_cases(*b.tree, pf.ring);
    for (const auto& c : b.cgs.cases)
        if (c.warn)
            b.diagnostics.warnings.push_back("factor degree bound exceeded in case " +
                                             detail::label_to_string(c.label));

    if (opt.mode == "mccgs") {
        MergeBounds mb;
        mb.genimage_l = mb.genimage_m = opt.genimage_bound;
        mb.factor_degree_bound = opt.factor_degree_bound;
        auto groups = group_by_lpp(b.cgs, pf.ring);
        for (const auto& g : groups)
            for (auto& seg : pack_group(g, mb, pf.ring, &b.diagnostics)) {
                for (const auto& sub : seg.subsegments)
                    seg.canspecs.push_back(difftocanspec(redspec_to_diffspec(sub, pf.ring),
                                                         pf.ring, mb.factor_degree_bound));
                b.segments.push_back(std::move(seg));
            }
    } else if (opt.mode != "buildtree") {
        throw error("unknown mode '" + opt.mode + "'");
    }

    detail::sample_check(b.cgs, pf.ring, opt.samples, opt.seed, b.diagnostics);
    return b;
}

/// Stable-key-order JSON: {mode, ring, segments, diagnostics, seed}.
inline std::string emit_json(const ReportBundle& b) {
    using json = nlohmann::ordered_json;
    json root;
    root["mode"] = b.mode;
    root["ring"] = {{"params", b.ring.params},
                    {"vars", b.ring.vars},
                    {"order_vars", to_string(b.ring.order_vars)},
                    {"order_params", to_string(b.ring.order_params)}};
    json segs = json::array();
    auto spec_json = [&](const RedSpec& s) {
        json w = json::array();
        for (const auto& p : s.W) w.push_back(to_string(p, b.ring));
        json n = json::array();
        for (const auto& p : s.N.basis()) n.push_back(to_string(p, b.ring));
        return json{{"N", n}, {"W", w}};
    };
    if (b.mode == "mccgs") {
        for (const auto& s : b.segments) {
            json seg;
            seg["lpp"] = lpp_set_to_string(s.lpp_set, b.ring);
            json basis = json::array();
            for (const auto& e : s.basis) {
                json members = json::array();
                for (const auto& m : e.members) members.push_back(to_string(m, b.ring));
                basis.push_back(members);
            }
            seg["basis"] = basis;
            json subs = json::array();
            for (const auto& sub : s.subsegments) subs.push_back(spec_json(sub));
            seg["subsegments"] = subs;
            json cans = json::array();
            for (const auto& c : s.canspecs) cans.push_back(to_string(c, b.ring));
            seg["canspecs"] = cans;
            segs.push_back(std::move(seg));
        }
    } else {
        for (const auto& c : b.cgs.cases) {
            json seg;
            seg["lpp"] = lpp_set_to_string(c.lpp_set, b.ring);
            json basis = json::array();
            for (const auto& f : c.basis) basis.push_back(json::array({to_string(f, b.ring)}));
            seg["basis"] = basis;
            seg["subsegments"] = json::array({spec_json(c.spec)});
            seg["canspecs"] = json::array();
            segs.push_back(std::move(seg));
        }
    }
    root["segments"] = segs;
    root["diagnostics"] = {{"warnings", b.diagnostics.warnings},
                           {"violations", b.diagnostics.violations}};
    root["seed"] = b.seed;
    return root.dump(2) + "\n";
}

/// DOT rendering of the discussion tree: vertices labeled by their 0/1 branch
/// list (terminals additionally by their lpp set); null edges dashed,
/// non-null edges solid.
inline std::string emit_dot(const Vertex& tree, const Ring& ring) {
    std::string out = "digraph buildtree {\n  node [shape=box];\n";
    std::size_t next_id = 0;
    std::function<std::size_t(const Vertex&)> walk = [&](const Vertex& v) -> std::size_t {
        std::size_t id = next_id++;
        std::string label = detail::label_to_string(v.label);
        if (v.is_terminal()) {
            std::vector<Expvec> lpps;
            for (const auto& f : v.basis) lpps.push_back(lpp(f, ring));
            label += "\\n" + lpp_set_to_string(lpps, ring);
        }
        out += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
        if (v.null_child) {
            std::size_t cid = walk(*v.null_child);
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) +
                   " [style=dashed];\n";
        }
        if (v.nonnull_child) {
            std::size_t cid = walk(*v.nonnull_child);
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) +
                   " [style=solid];\n";
        }
        return id;
    };
    walk(tree);
    out += "}\n";
    return out;
}

/// Plain-text table. BUILDTREE mode mirrors the four-column case table,
/// MCCGS mode the three-column merged-segment table.
inline std::string emit_table(const ReportBundle& b) {
    std::string out;
    if (b.mode == "mccgs") {
        out += "lpp | basis | sets of pairs (N,W)\n";
        for (const auto& s : b.segments) {
            std::string basis = "[";
            for (std::size_t i = 0; i < s.basis.size(); ++i) {
                if (i) basis += ", ";
                basis += detail::basis_entry_to_string(s.basis[i], b.ring);
            }
            basis += "]";
            std::string pairs;
            for (std::size_t i = 0; i < s.subsegments.size(); ++i) {
                if (i) pairs += ", ";
                pairs += "(" +
                         detail::poly_list_to_string(s.subsegments[i].N.basis(), b.ring, '[',
                                                     ']') +
                         "," +
                         detail::poly_list_to_string(s.subsegments[i].W, b.ring, '{', '}') +
                         ")";
            }
            out += lpp_set_to_string(s.lpp_set, b.ring) + " | " + basis + " | " + pairs + "\n";
        }
    } else {
        out += "lpp | basis | null cond. | non-null cond\n";
        for (const auto& c : b.cgs.cases) {
            out += lpp_set_to_string(c.lpp_set, b.ring) + " | " +
                   detail::poly_list_to_string(c.basis, b.ring, '[', ']') + " | " +
                   detail::poly_list_to_string(c.spec.N.basis(), b.ring, '[', ']') + " | " +
                   detail::poly_list_to_string(c.spec.W, b.ring, '{', '}') + "\n";
        }
    }
    return out;
}

} // namespace mccgs
