#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "crm/betti.hpp"
#include "crm/pencil.hpp"
#include "crm/rankcheck.hpp"
#include "crm/tree.hpp"
#include "crm/window.hpp"

namespace crm {

inline constexpr int kFormatVersion = 1;

template <class F>
nlohmann::json field_to_json(const F& f) {
    FieldSpec s = f.spec();
    return {{"kind", s.kind == FieldSpec::Kind::Rationals ? "Q" : "Fp"},
            {"characteristic", s.characteristic}};
}

// ----------------------------- pencils ------------------------------------
template <class F>
nlohmann::json pencil_to_json(const LinearPencil<F>& p, const std::string& provenance) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["n"] = p.nvars - 1;
    j["rows"] = p.rows;
    j["cols"] = p.cols;
    j["field"] = field_to_json(p.f);
    j["provenance"] = provenance;
    nlohmann::json coeffs = nlohmann::json::array();
    for (int v = 0; v < p.nvars; ++v) {
        nlohmann::json arr = nlohmann::json::array();
        for (int i = 0; i < p.rows; ++i)
            for (int c = 0; c < p.cols; ++c)
                arr.push_back(p.f.to_string(p.coeff[static_cast<std::size_t>(v)].at(i, c)));
        coeffs.push_back(arr);
    }
    j["coefficients"] = coeffs;
    return j;
}

inline LinearPencil<QQ> pencil_from_json(const nlohmann::json& j) {
    QQ f;
    int nv = j.at("n").get<int>() + 1;
    LinearPencil<QQ> p(f, nv, j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& coeffs = j.at("coefficients");
    for (int v = 0; v < nv; ++v) {
        const auto& arr = coeffs.at(static_cast<std::size_t>(v));
        int t = 0;
        for (int i = 0; i < p.rows; ++i)
            for (int c = 0; c < p.cols; ++c, ++t)
                p.coeff[static_cast<std::size_t>(v)].at(i, c) =
                    f.parse(arr.at(static_cast<std::size_t>(t)).get<std::string>());
    }
    return p;
}

// ----------------------------- windows ------------------------------------
template <class F>
nlohmann::json window_to_json(const Window<F>& w) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["n"] = w.nvars - 1;
    j["lo"] = w.lo;
    j["hi"] = w.hi;
    j["exact_below"] = w.exact_below;
    j["field"] = field_to_json(w.f);
    j["dims"] = w.dims;
    nlohmann::json acts = nlohmann::json::array();
    for (int d = w.lo; d < w.hi; ++d) {
        nlohmann::json per_var = nlohmann::json::array();
        for (int v = 0; v < w.nvars; ++v) {
            const Matrix<F>& m = w.act(v, d);
            nlohmann::json arr = nlohmann::json::array();
            for (int i = 0; i < m.rows(); ++i)
                for (int c = 0; c < m.cols(); ++c) arr.push_back(w.f.to_string(m.at(i, c)));
            per_var.push_back(arr);
        }
        acts.push_back(per_var);
    }
    j["actions"] = acts;
    return j;
}

inline Window<QQ> window_from_json(const nlohmann::json& j) {
    QQ f;
    int nv = j.at("n").get<int>() + 1;
    Window<QQ> w(f, nv, j.at("lo").get<int>(), j.at("hi").get<int>(),
                 j.at("exact_below").get<bool>());
    w.dims = j.at("dims").get<std::vector<int>>();
    const auto& acts = j.at("actions");
    for (int d = w.lo; d < w.hi; ++d) {
        const auto& per_var = acts.at(static_cast<std::size_t>(d - w.lo));
        std::vector<Matrix<QQ>> ms;
        for (int v = 0; v < nv; ++v) {
            Matrix<QQ> m(f, w.dim(d + 1), w.dim(d));
            const auto& arr = per_var.at(static_cast<std::size_t>(v));
            int t = 0;
            for (int i = 0; i < m.rows(); ++i)
                for (int c = 0; c < m.cols(); ++c, ++t)
                    m.at(i, c) = f.parse(arr.at(static_cast<std::size_t>(t)).get<std::string>());
            ms.push_back(std::move(m));
        }
        w.set_actions(d, std::move(ms));
    }
    if (!w.check_commute()) throw std::runtime_error("window actions do not commute");
    return w;
}

// ----------------------------- betti tables -------------------------------
// Figure-style layout: rows indexed by j - i, columns by i, '.' for zero.
inline std::string betti_dot_matrix(const BettiTable& b) {
    if (b.entries.empty()) return "(empty)\n";
    int imax = 0, rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [key, val] : b.entries) {
        int i = key.first, r = key.second - key.first;
        imax = std::max(imax, i);
        if (first) {
            rmin = rmax = r;
            first = false;
        } else {
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
    }
    std::ostringstream os;
    for (int r = rmin; r <= rmax; ++r) {
        os << r << ":";
        for (int i = 0; i <= imax; ++i) {
            mpz_class v = b.get(i, r + i);
            os << " " << (v == 0 ? "." : v.get_str());
        }
        os << "\n";
    }
    return os.str();
}

// ----------------------------- verdicts -----------------------------------
inline nlohmann::json verdict_to_json(const RankVerdict& v) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["rho"] = v.rho;
    j["exit_code"] = v.exit_code();
    switch (v.kind) {
        case RankVerdictKind::Certified: j["verdict"] = "Certified"; break;
        case RankVerdictKind::Refuted: j["verdict"] = "Refuted"; break;
        default: j["verdict"] = "Inconclusive"; break;
    }
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : v.transcripts)
        ts.push_back({{"strategy", t.strategy},
                      {"min_rank", t.min_rank},
                      {"max_rank", t.max_rank},
                      {"points_checked", t.points_checked}});
    j["transcripts"] = ts;
    if (v.kind == RankVerdictKind::Refuted) {
        j["witness"] = v.witness;
        j["witness_field"] = v.witness_field;
        j["witness_rank"] = v.witness_rank;
    }
    return j;
}

// ----------------------------- trees --------------------------------------
inline nlohmann::json tree_node_to_json(const TreeNode& n) {
    nlohmann::json j;
    nlohmann::json strand = nlohmann::json::array();
    for (const auto& b : n.strand) strand.push_back(b.get_str());
    j["strand"] = strand;
    j["gen_degree"] = n.gen_degree;
    j["status"] = node_status_name(n.status);
    if (n.status == NodeStatus::Linear)
        j["pencil"] = {{"rows", n.pencil_rows}, {"cols", n.pencil_cols},
                       {"expected_rank", n.expected_rank}};
    if (!n.edge_label.empty()) j["edge"] = n.edge_label;
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& c : n.children) kids.push_back(tree_node_to_json(*c));
    j["children"] = kids;
    return j;
}

inline nlohmann::json tree_to_json(const ConstructionTree& t) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["sheaf_rank"] = t.sheaf_rank;
    j["root"] = t.root ? tree_node_to_json(*t.root) : nlohmann::json();
    return j;
}

inline void tree_to_text(const TreeNode& n, std::ostream& os, int indent = 0) {
    for (int i = 0; i < indent; ++i) os << "  ";
    if (!n.edge_label.empty()) os << n.edge_label << " -> ";
    os << "(";
    for (std::size_t i = 0; i < n.strand.size(); ++i) {
        if (i) os << " ";
        os << n.strand[i].get_str();
    }
    os << ") " << node_status_name(n.status);
    if (n.status == NodeStatus::Linear && n.pencil_rows > 0)
        os << " [" << n.pencil_rows << "x" << n.pencil_cols << ", rank "
           << n.expected_rank << "]";
    os << "\n";
    for (const auto& c : n.children) tree_to_text(*c, os, indent + 1);
}

}  // namespace crm
