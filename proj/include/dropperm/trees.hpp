#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dropperm/perm.hpp"

namespace dropperm {

/// Rooted plane tree; only the ordered child list is stored, statistics
/// are derived on demand.
struct OrderedTree {
    std::vector<OrderedTree> children;

    int edges() const {
        int e = 0;
        for (const auto& c : children) e += 1 + c.edges();
        return e;
    }

    int height() const {
        int h = 0;
        for (const auto& c : children) h = std::max(h, 1 + c.height());
        return h;
    }

    /// Single-node tree counts as 1 leaf (nodes = leaves + internal).
    int leaf_count() const {
        if (children.empty()) return 1;
        int l = 0;
        for (const auto& c : children) l += c.leaf_count();
        return l;
    }

    int internal_count() const {
        if (children.empty()) return 0;
        int m = 1;
        for (const auto& c : children) m += c.internal_count();
        return m;
    }

    bool operator==(const OrderedTree& o) const { return children == o.children; }
    bool operator<(const OrderedTree& o) const { return children < o.children; }

    /// Balanced-parentheses serialization, preorder: "(" descends an edge,
    /// ")" ascends. The 2-edge path is "(())", the 2-star is "()()".
    std::string str() const {
        std::string s;
        write(s);
        return s;
    }

    static OrderedTree parse(const std::string& text) {
        std::size_t pos = 0;
        OrderedTree t = parse_children(text, pos);
        if (pos != text.size())
            throw std::invalid_argument("OrderedTree::parse: trailing input");
        return t;
    }

private:
    void write(std::string& s) const {
        for (const auto& c : children) {
            s.push_back('(');
            c.write(s);
            s.push_back(')');
        }
    }

    static OrderedTree parse_children(const std::string& text, std::size_t& pos) {
        OrderedTree t;
        while (pos < text.size() && text[pos] == '(') {
            ++pos;
            t.children.push_back(parse_children(text, pos));
            if (pos >= text.size() || text[pos] != ')')
                throw std::invalid_argument("OrderedTree::parse: unbalanced parentheses");
            ++pos;
        }
        return t;
    }
};

/// Word over {U, D}; every prefix has #U >= #D and totals are equal.
struct DyckPath {
    std::string steps;  // 'U' and 'D'

    DyckPath() = default;
    explicit DyckPath(std::string s) : steps(std::move(s)) { validate(); }

    /// Accepts U/D or (/) notation.
    static DyckPath parse(const std::string& text) {
        std::string s;
        for (char ch : text) {
            if (ch == 'U' || ch == 'u' || ch == '(') s.push_back('U');
            else if (ch == 'D' || ch == 'd' || ch == ')') s.push_back('D');
            else if (ch == ' ') continue;
            else throw std::invalid_argument("DyckPath::parse: bad character");
        }
        return DyckPath(std::move(s));
    }

    int semilength() const { return static_cast<int>(steps.size()) / 2; }

    int height() const {
        int h = 0, y = 0;
        for (char ch : steps) {
            y += ch == 'U' ? 1 : -1;
            h = std::max(h, y);
        }
        return h;
    }

    int peaks() const {
        int p = 0;
        for (std::size_t i = 0; i + 1 < steps.size(); ++i)
            if (steps[i] == 'U' && steps[i + 1] == 'D') ++p;
        return p;
    }

    bool operator==(const DyckPath& o) const { return steps == o.steps; }
    bool operator<(const DyckPath& o) const { return steps < o.steps; }

private:
    void validate() const {
        int y = 0;
        for (char ch : steps) {
            if (ch != 'U' && ch != 'D')
                throw std::invalid_argument("DyckPath: steps must be U or D");
            y += ch == 'U' ? 1 : -1;
            if (y < 0) throw std::invalid_argument("DyckPath: prefix dips below zero");
        }
        if (y != 0) throw std::invalid_argument("DyckPath: unbalanced path");
    }
};

/// Lifting: U ++ P ++ D.
inline DyckPath lift(const DyckPath& p) { return DyckPath("U" + p.steps + "D"); }

namespace detail {

inline void tree_word(const OrderedTree& t, std::vector<int>& post, int& counter,
                      std::vector<const OrderedTree*>& order) {
    // assign postorder labels to edges; an edge is identified with its lower
    // vertex, visited after its subtree
    for (const auto& c : t.children) {
        tree_word(c, post, counter, order);
        order.push_back(&c);
        post.push_back(++counter);
    }
}

inline void preorder_read(const OrderedTree& t,
                          const std::vector<std::pair<const OrderedTree*, int>>& label_of,
                          std::vector<int>& out) {
    for (const auto& c : t.children) {
        for (const auto& [node, lab] : label_of)
            if (node == &c) {
                out.push_back(lab);
                break;
            }
        preorder_read(c, label_of, out);
    }
}

} // namespace detail

/// Label edges by postorder traversal, read labels by preorder traversal.
inline Permutation tree_to_perm(const OrderedTree& t) {
    if (t.children.empty())
        throw std::invalid_argument("tree_to_perm: tree must have at least one edge");
    std::vector<int> post;
    int counter = 0;
    std::vector<const OrderedTree*> order;
    detail::tree_word(t, post, counter, order);
    std::vector<std::pair<const OrderedTree*, int>> label_of;
    for (std::size_t i = 0; i < order.size(); ++i) label_of.emplace_back(order[i], post[i]);
    std::vector<int> out;
    detail::preorder_read(t, label_of, out);
    return Permutation(std::move(out));
}

namespace detail {
// structural recursion on the position of the maximum
inline OrderedTree perm_to_tree_rec(const std::vector<int>& word) {
    if (word.empty()) return OrderedTree{};
    int n = static_cast<int>(word.size());
    int pos = static_cast<int>(std::find(word.begin(), word.end(), n) - word.begin());
    std::vector<int> left(word.begin(), word.begin() + pos);
    std::vector<int> right(word.begin() + pos + 1, word.end());
    for (int v : left)
        if (v > pos)
            throw std::invalid_argument("perm_to_tree: input contains 231, no preimage");
    if (!right.empty()) right = reduce(right).word();
    OrderedTree t = perm_to_tree_rec(left);
    t.children.push_back(perm_to_tree_rec(right));
    return t;
}
} // namespace detail

/// Inverse of tree_to_perm on 231-avoiding permutations.
inline OrderedTree perm_to_tree(const Permutation& p) {
    if (p.size() == 0)
        throw std::invalid_argument("perm_to_tree: permutation must be nonempty");
    if (!avoids_231(p))
        throw std::invalid_argument("perm_to_tree: input contains 231, no preimage");
    return detail::perm_to_tree_rec(p.word());
}

namespace detail {
inline std::string perm_to_dyck_rec(const std::vector<int>& word) {
    if (word.empty()) return "";
    int n = static_cast<int>(word.size());
    if (n == 1) return "UD";
    int pos = static_cast<int>(std::find(word.begin(), word.end(), n) - word.begin()) + 1;
    if (pos == n) {
        return perm_to_dyck_rec(std::vector<int>(word.begin(), word.end() - 1)) + "UD";
    }
    if (pos == 1) {
        std::vector<int> rest = reduce(std::vector<int>(word.begin() + 1, word.end())).word();
        return "U" + perm_to_dyck_rec(rest) + "D";
    }
    std::vector<int> left = reduce(std::vector<int>(word.begin(), word.begin() + pos - 1)).word();
    std::vector<int> right = reduce(std::vector<int>(word.begin() + pos, word.end())).word();
    return perm_to_dyck_rec(left) + "U" + perm_to_dyck_rec(right) + "D";
}
} // namespace detail

/// Case analysis on the position of n: append a peak, lift, or split.
inline DyckPath perm_to_dyck(const Permutation& p) {
    if (p.size() == 0)
        throw std::invalid_argument("perm_to_dyck: permutation must be nonempty");
    if (!avoids_231(p))
        throw std::invalid_argument("perm_to_dyck: input contains 231");
    return DyckPath(detail::perm_to_dyck_rec(p.word()));
}

/// Preorder edge walk; the parenthesis serialization is the Dyck word.
inline DyckPath tree_to_dyck(const OrderedTree& t) {
    std::string s = t.str();
    for (char& ch : s) ch = ch == '(' ? 'U' : 'D';
    return DyckPath(std::move(s));
}

inline OrderedTree dyck_to_tree(const DyckPath& p) {
    std::string s = p.steps;
    for (char& ch : s) ch = ch == 'U' ? '(' : ')';
    return OrderedTree::parse(s);
}

namespace detail {

// subtrees with a given number of edges and height bound, deterministic
// first-child-size ordering
inline std::vector<OrderedTree> all_trees(int edges, int max_height) {
    if (edges == 0) return {OrderedTree{}};
    if (max_height <= 0) return {};
    std::vector<OrderedTree> out;
    // first child consumes 1 + f edges; remainder stays at this root
    for (int f = 0; f <= edges - 1; ++f) {
        auto firsts = all_trees(f, max_height - 1);
        auto rests = all_trees(edges - 1 - f, max_height);
        for (const auto& first : firsts)
            for (const auto& rest : rests) {
                OrderedTree t;
                t.children.reserve(1 + rest.children.size());
                t.children.push_back(first);
                for (const auto& c : rest.children) t.children.push_back(c);
                out.push_back(std::move(t));
            }
    }
    return out;
}

} // namespace detail

inline constexpr int kTreeEnumCeiling = 14;

/// All ordered trees with n edges, height <= max_height, optionally a fixed
/// internal-node count.
inline std::vector<OrderedTree> enumerate_trees(int n, int max_height = -1,
                                                int internal = -1) {
    if (n < 0) throw std::invalid_argument("enumerate_trees: n must be >= 0");
    if (n > kTreeEnumCeiling)
        throw std::invalid_argument("enumerate_trees: n exceeds the Catalan-scale ceiling " +
                                    std::to_string(kTreeEnumCeiling));
    int h = max_height < 0 ? n : max_height;
    auto trees = detail::all_trees(n, h);
    if (internal >= 0) {
        std::vector<OrderedTree> filtered;
        for (auto& t : trees)
            if (t.internal_count() == internal) filtered.push_back(std::move(t));
        return filtered;
    }
    return trees;
}

namespace detail {
inline void gen_dyck(int ups_left, int downs_left, int y, int max_height,
                     std::string& cur, std::vector<DyckPath>& out) {
    if (ups_left == 0 && downs_left == 0) {
        out.push_back(DyckPath(cur));
        return;
    }
    if (downs_left > 0 && y > 0) {
        cur.push_back('D');
        gen_dyck(ups_left, downs_left - 1, y - 1, max_height, cur, out);
        cur.pop_back();
    }
    if (ups_left > 0 && (max_height < 0 || y < max_height)) {
        cur.push_back('U');
        gen_dyck(ups_left - 1, downs_left, y + 1, max_height, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

/// All Dyck paths of semilength n, optional peak count and height bound.
/// Generated independently of the tree enumeration so the two can serve as
/// cross-checks.
inline std::vector<DyckPath> enumerate_dyck(int n, int peaks = -1, int max_height = -1) {
    if (n < 0) throw std::invalid_argument("enumerate_dyck: n must be >= 0");
    if (n > kTreeEnumCeiling)
        throw std::invalid_argument("enumerate_dyck: n exceeds the Catalan-scale ceiling " +
                                    std::to_string(kTreeEnumCeiling));
    std::vector<DyckPath> out;
    std::string cur;
    detail::gen_dyck(n, n, 0, max_height, cur, out);
    if (peaks >= 0) {
        std::vector<DyckPath> filtered;
        for (auto& p : out)
            if (p.peaks() == peaks) filtered.push_back(std::move(p));
        return filtered;
    }
    return out;
}

} // namespace dropperm
