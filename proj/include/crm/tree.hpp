#pragma once

#include <memory>
#include <string>

#include "crm/artinian.hpp"
#include "crm/reduction.hpp"

namespace crm {

enum class NodeStatus { Linear, NotLinear, NoCandidates, NuNotArtinian };

inline const char* node_status_name(NodeStatus s) {
    switch (s) {
        case NodeStatus::Linear: return "Linear";
        case NodeStatus::NotLinear: return "NotLinear";
        case NodeStatus::NoCandidates: return "NoCandidates";
        default: return "NuNotArtinian";
    }
}

struct TreeNode {
    std::vector<mpz_class> strand;  // linear strand at the generator degree
    int gen_degree = 0;
    NodeStatus status = NodeStatus::Linear;
    int pencil_rows = 0, pencil_cols = 0, expected_rank = 0;
    std::string edge_label;  // candidate label of the incoming edge
    std::vector<std::unique_ptr<TreeNode>> children;
};

struct ConstructionTree {
    std::unique_ptr<TreeNode> root;
    int sheaf_rank = 1;  // rank of the sheafified root module
};

struct PencilShape {
    int rows = 0, cols = 0, rank = 0;
    std::vector<std::string> path;
};

namespace detail {

template <class F>
void expand_node(TreeNode& node, const Window<F>& w, int sheaf_rank, int depth,
                 int attempts, std::uint64_t seed, int max_multiplicity,
                 const std::pair<int, int>& parent_edge_key) {
    if (depth <= 0) return;
    int n = w.nvars - 1;
    auto cands = compatible_candidates(node.strand, w.nvars, node.gen_degree,
                                       max_multiplicity);
    std::uint64_t child_seed = seed;
    for (const auto& cand : cands) {
        // Dedup rule: edge keys are nondecreasing along any root path, so the
        // multiset of labels determines the path.
        std::pair<int, int> key{cand.t, cand.multiplicity};
        if (key < parent_edge_key) continue;
        child_seed = child_seed * 6364136223846793005ULL + 1442695040888963407ULL;
        auto child = std::make_unique<TreeNode>();
        child->edge_label = cand.label();
        child->gen_degree = node.gen_degree;
        try {
            Window<F> g = candidate_window(cand, w.f, w.nvars, w.lo, w.hi);
            ReductionResult<F> r = sample_reduction(w, g, attempts, child_seed);
            child->strand = r.strand_f;
            if (!r.diagnostics.coker_nu2_artinian) {
                child->status = NodeStatus::NuNotArtinian;
            } else if (r.pencil && r.presentation.is_linear()) {
                child->status = NodeStatus::Linear;
                child->pencil_rows = r.pencil->rows;
                child->pencil_cols = r.pencil->cols;
                child->expected_rank = r.pencil->rows - sheaf_rank;
            } else {
                child->status = NodeStatus::NotLinear;
            }
            if (child->status == NodeStatus::Linear && depth > 1)
                expand_node(*child, r.kernel, sheaf_rank, depth - 1, attempts,
                            child_seed ^ 0x5851f42d4c957f2dULL, max_multiplicity, key);
        } catch (const NoSurjectionFound&) {
            child->status = NodeStatus::NoCandidates;
        } catch (const NotFinitelyGeneratedInWindow&) {
            child->status = NodeStatus::NotLinear;
        } catch (const WindowTooShort&) {
            child->status = NodeStatus::NotLinear;
        }
        node.children.push_back(std::move(child));
    }
    if (node.children.empty() && cands.empty() && node.status == NodeStatus::Linear &&
        node.strand.size() > 1 && node.strand[1] == 0)
        node.status = NodeStatus::NoCandidates;
    (void)n;
}

inline void collect_pencils(const TreeNode& node, std::vector<std::string>& path,
                            std::vector<PencilShape>& out) {
    if (!node.edge_label.empty()) path.push_back(node.edge_label);
    if (node.status == NodeStatus::Linear && node.pencil_rows > 0) {
        PencilShape s;
        s.rows = node.pencil_rows;
        s.cols = node.pencil_cols;
        s.rank = node.expected_rank;
        s.path = path;
        out.push_back(s);
    }
    for (const auto& c : node.children) collect_pencils(*c, path, out);
    if (!node.edge_label.empty()) path.pop_back();
}

}  // namespace detail

// Breadth of the search: for every node, all numerically compatible catalog
// candidates (with the sorted-path dedup rule) are tried with sampled
// morphisms.
template <class F>
ConstructionTree build_tree(const Window<F>& root, int sheaf_rank, int depth,
                            int attempts_per_edge, std::uint64_t seed,
                            int max_multiplicity = 16) {
    MinimalPresentation<F> pres = minimal_presentation(root);
    if (!pres.is_linear()) throw RootNotLinear("root module is not linearly presented");
    ConstructionTree t;
    t.sheaf_rank = sheaf_rank;
    t.root = std::make_unique<TreeNode>();
    t.root->gen_degree = pres.gen_degrees.empty() ? root.lo : pres.gen_degrees.front();
    int n = root.nvars - 1;
    for (int i = 0; i <= n; ++i) {
        auto b = koszul_betti(root, i, t.root->gen_degree + i);
        t.root->strand.push_back(b ? mpz_class(static_cast<long>(*b)) : mpz_class(0));
    }
    t.root->status = NodeStatus::Linear;
    t.root->pencil_rows = static_cast<int>(pres.gen_degrees.size());
    t.root->pencil_cols = static_cast<int>(pres.rel_degrees.size());
    t.root->expected_rank = t.root->pencil_rows - sheaf_rank;
    detail::expand_node(*t.root, root, sheaf_rank, depth, attempts_per_edge, seed,
                        max_multiplicity, {0, 0});
    return t;
}

inline std::vector<PencilShape> enumerate_pencils(const ConstructionTree& t) {
    std::vector<PencilShape> out;
    std::vector<std::string> path;
    if (t.root) detail::collect_pencils(*t.root, path, out);
    return out;
}

}  // namespace crm
