#include "igusa/tree.hpp"

#include <map>
#include <sstream>

#include "igusa/errors.hpp"
#include "igusa/padic.hpp"

namespace igusa {

WeightedTree build_tree(const std::vector<RootFactor>& plus_roots, const BigInt& p,
                        unsigned long lf) {
    if (plus_roots.empty()) throw EmptyRootList();
    for (std::size_t i = 0; i < plus_roots.size(); ++i)
        for (std::size_t j = i + 1; j < plus_roots.size(); ++j)
            if (plus_roots[i].root == plus_roots[j].root)
                throw DuplicateRoot("duplicate root " + to_string(plus_roots[i].root));

    WeightedTree tree;
    tree.prime = p;
    tree.lf = lf;
    tree.levels.resize(lf + 2);

    // Residues of every root at every level, from the digit expansions.
    std::vector<std::vector<BigInt>> residues(plus_roots.size());
    for (std::size_t i = 0; i < plus_roots.size(); ++i) {
        PadicDigits digits = padic_expand(plus_roots[i].root, p, lf);
        residues[i].resize(lf + 2);
        for (unsigned long level = 0; level <= lf + 1; ++level)
            residues[i][level] = digits.prefix_value(level);
    }

    std::vector<long> prev_vertex_of_root(plus_roots.size(), -1);
    for (unsigned long level = 0; level <= lf + 1; ++level) {
        std::map<BigInt, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < plus_roots.size(); ++i) groups[residues[i][level]].push_back(i);

        std::vector<long> vertex_of_root(plus_roots.size(), -1);
        for (const auto& [residue, members] : groups) {
            TreeVertex v;
            v.level = level;
            v.residue = residue;
            if (level == 0) {
                v.weight = 0;
                v.parent = -1;
                v.stalk_weight = 0;
            } else {
                for (std::size_t i : members) v.weight += plus_roots[i].multiplicity;
                v.parent = prev_vertex_of_root[members.front()];
                const TreeVertex& par = tree.levels[level - 1][static_cast<std::size_t>(v.parent)];
                v.stalk_weight = par.stalk_weight + v.weight;
            }
            long index = static_cast<long>(tree.levels[level].size());
            tree.levels[level].push_back(std::move(v));
            for (std::size_t i : members) vertex_of_root[i] = index;
        }
        // Children counted as the groups split level by level.
        if (level > 0)
            for (const auto& v : tree.levels[level])
                tree.levels[level - 1][static_cast<std::size_t>(v.parent)].valence += 1;
        prev_vertex_of_root = std::move(vertex_of_root);
    }
    return tree;
}

bool is_minimal_weight_one(const WeightedTree& tree, const TreeVertex& v) {
    if (v.weight != 1) return false;
    if (v.level == 0) return false;
    if (v.level == 1) return true;  // the level-0 root has weight 0
    return tree.parent_of(v).weight != 1;
}

std::vector<TreeVertex> minimal_weight_one(const WeightedTree& tree) {
    std::vector<TreeVertex> out;
    for (const auto& level : tree.levels)
        for (const auto& v : level)
            if (is_minimal_weight_one(tree, v)) out.push_back(v);
    return out;
}

std::string tree_to_dot(const WeightedTree& tree) {
    std::ostringstream out;
    out << "digraph residue_tree {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (const auto& level : tree.levels) {
        for (const auto& v : level) {
            out << "  \"" << v.level << "/" << v.residue.get_str() << "\" [label=\"" << v.level
                << "/" << v.residue.get_str() << " [" << v.weight << ", " << v.valence << ", "
                << v.stalk_weight << "]\"];\n";
        }
    }
    for (const auto& level : tree.levels) {
        for (const auto& v : level) {
            if (v.parent < 0) continue;
            const TreeVertex& par = tree.parent_of(v);
            out << "  \"" << v.level << "/" << v.residue.get_str() << "\" -> \"" << par.level
                << "/" << par.residue.get_str() << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace igusa
