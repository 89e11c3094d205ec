#pragma once

#include <string>
#include <vector>

#include "igusa/factor.hpp"
#include "igusa/rational.hpp"

namespace igusa {

/// Vertex of the residue tree.  The residue identifies the class of the
/// roots passing through the vertex modulo p^level; edges point toward
/// the level-0 root, so the parent lives one level below.
struct TreeVertex {
    unsigned long level = 0;
    BigInt residue;
    long parent = -1;        // index into the previous level, -1 at level 0
    long weight = 0;         // W(u): total multiplicity through the vertex
    long valence = 0;        // Val(u): number of children
    long stalk_weight = 0;   // W*(B_u): sum of W along the path to the root
};

/// Weighted tree built from the root expansions modulo p^{lf+1}.
/// Levels run 0 .. lf+1; level 0 holds the single root vertex.
struct WeightedTree {
    BigInt prime;
    unsigned long lf = 0;
    std::vector<std::vector<TreeVertex>> levels;

    const TreeVertex& parent_of(const TreeVertex& v) const {
        return levels[v.level - 1][static_cast<std::size_t>(v.parent)];
    }
};

/// Vertices at each level are ordered by residue value, which fixes a
/// deterministic atom order downstream.
WeightedTree build_tree(const std::vector<RootFactor>& plus_roots, const BigInt& p,
                        unsigned long lf);

/// True for weight-1 vertices with no weight-1 vertex strictly closer to
/// the root (the first weight-1 vertex along a stalk).
bool is_minimal_weight_one(const WeightedTree& tree, const TreeVertex& v);

/// All minimal weight-1 vertices, level by level.
std::vector<TreeVertex> minimal_weight_one(const WeightedTree& tree);

/// Graphviz export; one node per vertex labeled "level/residue [W, Val, W*]".
std::string tree_to_dot(const WeightedTree& tree);

}  // namespace igusa
