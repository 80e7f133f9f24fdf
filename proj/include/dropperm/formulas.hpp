#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dropperm/bigint.hpp"
#include "dropperm/perm.hpp"
#include "dropperm/trees.hpp"

namespace dropperm {

/// C(n,k), zero whenever k < 0, k > n, or n < 0. The out-of-range
/// convention is what makes the Q_a correction sums terminate and vanish
/// where they should.
inline Int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Narayana number N(n,j) = (1/n) C(n,j) C(n,j-1); N(0,j) = [j==0].
inline Int narayana(long long n, long long j) {
    if (n < 0) throw std::invalid_argument("narayana: n must be >= 0");
    if (n == 0) return j == 0 ? 1 : 0;
    return binom(n, j) * binom(n, j - 1) / n;
}

namespace detail {
// Kemp's alternating correction term
inline Int kemp_q(long long n, long long j, long long k, long long a) {
    Int q = 0;
    for (long long s = 1; s <= j + 2; ++s) {
        Int term = binom(n - s * (k - 1) - 2, j + s + a - 1) *
                   binom(n + s * (k - 1) - 2, j - s - a - 1);
        q += term;
        if (j - s - a - 1 < 0) break;  // zero for all larger s
    }
    return q;
}
} // namespace detail

/// Number of ordered trees with n nodes, j leaves, and height <= k-1:
/// h_k(1,j) = [j==1], h_1(n,j) = [n==j][n==1], otherwise
/// N(n-1,j) - [Q_1 - 2 Q_0 + Q_{-1}].
inline Int kemp_h(long long n, long long j, long long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("kemp_h: requires n >= 1, k >= 1");
    if (n == 1) return j == 1 ? 1 : 0;
    if (k == 1) return 0;  // only the single-node tree has height <= 0
    Int q = detail::kemp_q(n, j, k, 1) - 2 * detail::kemp_q(n, j, k, 0) +
            detail::kemp_q(n, j, k, -1);
    return narayana(n - 1, j) - q;
}

/// a^(k)_{n,231,j} = h_{k+2}(n+1, n-j)
inline Int a_kemp(long long n, long long j, long long k) {
    if (n < 1 || j < 0 || k < 0)
        throw std::invalid_argument("a_kemp: requires n >= 1, j >= 0, k >= 0");
    return kemp_h(n + 1, n - j, k + 2);
}

enum class ExtremalVariant { KEqualsJ, KEqualsJMinus1 };

/// e^(j)_{n,231,j} = C(n+j-1, 2j); e^(j-1)_{n,231,j} = (2j-3) C(n+j-2, 2j).
inline Int e_extremal(long long n, long long j, ExtremalVariant variant) {
    if (variant == ExtremalVariant::KEqualsJ) {
        if (j < 1) throw std::invalid_argument("e_extremal: k=j variant needs j >= 1");
        return binom(n + j - 1, 2 * j);
    }
    if (j < 2) throw std::invalid_argument("e_extremal: k=j-1 variant needs j >= 2");
    return Int(2 * j - 3) * binom(n + j - 2, 2 * j);
}

enum class DropFormulaVariant { KEqualsJMinus1, KEqualsJMinus2 };

/// a^(j-1)_{n,231,j} and a^(j-2)_{n,231,j} closed forms.
inline Int a_drop_formula(long long n, long long j, DropFormulaVariant variant) {
    if (n < 1) throw std::invalid_argument("a_drop_formula: n must be >= 1");
    Int nar = binom(n, j) * binom(n, j + 1) / n;
    if (variant == DropFormulaVariant::KEqualsJMinus1) {
        if (j < 1) throw std::invalid_argument("a_drop_formula: k=j-1 variant needs j >= 1");
        return nar - binom(n + j - 1, 2 * j);
    }
    if (j < 2) throw std::invalid_argument("a_drop_formula: k=j-2 variant needs j >= 2");
    return nar - binom(n + j - 1, 2 * j) - Int(2 * j - 3) * binom(n + j - 2, 2 * j);
}

/// Weak composition of n with i positive parts followed by j nonnegative
/// parts.
struct WeakComposition {
    std::vector<long long> positive;
    std::vector<long long> nonneg;

    long long total() const {
        long long s = 0;
        for (long long v : positive) s += v;
        for (long long v : nonneg) s += v;
        return s;
    }

    bool operator==(const WeakComposition& o) const {
        return positive == o.positive && nonneg == o.nonneg;
    }
    bool operator<(const WeakComposition& o) const {
        return std::tie(positive, nonneg) < std::tie(o.positive, o.nonneg);
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t r = 0; r < positive.size(); ++r) {
            if (r) s += ",";
            s += std::to_string(positive[r]);
        }
        s += ";";
        for (std::size_t r = 0; r < nonneg.size(); ++r) {
            if (r) s += ",";
            s += std::to_string(nonneg[r]);
        }
        s += ")";
        return s;
    }
};

/// |W_n(i,j)| = C(n+j-1, i+j-1); the empty composition is the one way to
/// compose 0 with no parts.
inline Int count_weak(long long n, long long i, long long j) {
    if (n < 0 || i < 0 || j < 0)
        throw std::invalid_argument("count_weak: arguments must be >= 0");
    if (i == 0 && j == 0) return n == 0 ? 1 : 0;
    return binom(n + j - 1, i + j - 1);
}

namespace detail {
inline void gen_weak(long long remaining, long long parts_left, long long min_part,
                     std::vector<long long>& cur,
                     const std::vector<long long>& positives,
                     long long nonneg_total,
                     std::vector<WeakComposition>& out);
} // namespace detail

/// Exhaustive generation of W_n(i,j), lexicographic.
inline std::vector<WeakComposition> weak_compositions(long long n, long long i, long long j) {
    if (n < 0 || i < 0 || j < 0)
        throw std::invalid_argument("weak_compositions: arguments must be >= 0");
    if (n + i + j > 30)
        throw std::invalid_argument("weak_compositions: n+i+j exceeds the generation ceiling 30");
    std::vector<WeakComposition> out;
    // enumerate positive prefix, then nonnegative suffix
    std::vector<long long> pos(i), non(j);
    struct Rec {
        long long i, j;
        std::vector<WeakComposition>& out;
        std::vector<long long>& pos;
        std::vector<long long>& non;
        void positives(long long idx, long long rem) {
            if (idx == i) {
                nonnegs(0, rem);
                return;
            }
            long long reserve = i - idx - 1;  // later positives need >= 1 each
            for (long long v = 1; v + reserve <= rem; ++v) {
                pos[idx] = v;
                positives(idx + 1, rem - v);
            }
        }
        void nonnegs(long long idx, long long rem) {
            if (idx == j) {
                if (rem == 0) out.push_back({pos, non});
                return;
            }
            if (idx == j - 1) {
                non[idx] = rem;
                out.push_back({pos, non});
                return;
            }
            for (long long v = 0; v <= rem; ++v) {
                non[idx] = v;
                nonnegs(idx + 1, rem - v);
            }
        }
    } rec{i, j, out, pos, non};
    if (i == 0 && j == 0) {
        if (n == 0) out.push_back({});
    } else {
        rec.positives(0, n);
    }
    return out;
}

/// Bijection from 2j-subsets of [n+j-1] onto permutations with des = j and
/// md = j exactly: a chain of nested intervals, each cyclically rotated.
inline Permutation subset_to_extremal_perm(const std::set<int>& S, int n, int j) {
    if (j < 1) throw std::invalid_argument("subset_to_extremal_perm: j must be >= 1");
    if (static_cast<int>(S.size()) != 2 * j)
        throw std::invalid_argument("subset_to_extremal_perm: |S| must equal 2j");
    for (int s : S)
        if (s < 1 || s > n + j - 1)
            throw std::invalid_argument("subset_to_extremal_perm: element out of [n+j-1]");
    std::vector<int> sorted(S.begin(), S.end());
    // nested interval endpoints: a_m = m-th smallest of S; b_1 = max(S cap [n]),
    // b_m = b_{m-1} if n+m-1 in S else max([1, b_{m-1}-1] cap S)
    std::vector<int> a(j), b(j);
    for (int m = 0; m < j; ++m) a[m] = sorted[m];
    auto max_below = [&](int bound) {
        int best = 0;
        for (int s : sorted)
            if (s <= bound) best = std::max(best, s);
        return best;
    };
    b[0] = max_below(n);
    if (b[0] == 0) throw std::invalid_argument("subset_to_extremal_perm: S misses [n]");
    for (int m = 2; m <= j; ++m) {
        if (S.count(n + m - 1)) b[m - 1] = b[m - 2];
        else b[m - 1] = max_below(b[m - 2] - 1);
        if (b[m - 1] == 0)
            throw std::invalid_argument("subset_to_extremal_perm: interval chain broke");
    }
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int m = 0; m < j; ++m) {
        int lo = a[m] - 1, hi = b[m] - 1;  // 0-based interval
        int last = w[hi];
        for (int i = hi; i > lo; --i) w[i] = w[i - 1];
        w[lo] = last;
    }
    return Permutation(std::move(w));
}

namespace detail {

// nodes of one level, left to right
inline void level_nodes(OrderedTree& t, int level, std::vector<OrderedTree*>& out) {
    if (level == 0) {
        out.push_back(&t);
        return;
    }
    for (auto& c : t.children) level_nodes(c, level - 1, out);
}

// the lone root counts as a leaf here (fall of the star yields one
// positive part), so leaf_count's type convention carries over directly
inline int comp_leaves(const OrderedTree& t) { return t.leaf_count(); }

inline int comp_nonneg_parts(const OrderedTree& t) {
    // sum over nodes with at least one child of 1 + degree
    if (t.children.empty()) return 0;
    int total = 1 + static_cast<int>(t.children.size());
    for (const auto& c : t.children) total += comp_nonneg_parts(c);
    return total;
}

} // namespace detail

/// Grow j edges on T guided by the weak composition: visiting levels from
/// the deepest up, right to left within a level, leaves consume positive
/// parts and internal nodes consume one nonnegative part per child gap.
inline OrderedTree spring(const OrderedTree& tree, const WeakComposition& c) {
    int leaves = detail::comp_leaves(tree);
    int gaps = detail::comp_nonneg_parts(tree);
    if (static_cast<int>(c.positive.size()) != leaves)
        throw std::invalid_argument("spring: positive part count must equal leaf count (" +
                                    std::to_string(leaves) + ")");
    if (static_cast<int>(c.nonneg.size()) != gaps)
        throw std::invalid_argument("spring: nonnegative part count must equal the arity total (" +
                                    std::to_string(gaps) + ")");
    OrderedTree t = tree;
    std::size_t p = 0;  // next positive part
    std::size_t r = 0;  // next nonnegative part
    for (int level = t.height(); level >= 0; --level) {
        std::vector<OrderedTree*> nodes;
        detail::level_nodes(t, level, nodes);
        for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
            OrderedTree* x = *it;
            if (x->children.empty()) {
                // leaf: hang the next positive batch below it
                long long l = c.positive[p++];
                for (long long m = 0; m < l; ++m) x->children.push_back(OrderedTree{});
            } else {
                // node with children: one batch to the right of the
                // rightmost child, then one to the left of each child
                // from the right
                std::size_t d = x->children.size();
                std::vector<long long> batch(d + 1);
                for (std::size_t m = 0; m <= d; ++m) batch[m] = c.nonneg[r++];
                std::vector<OrderedTree> rebuilt;
                for (std::size_t ci = 0; ci < d; ++ci) {
                    // batch[d - ci] leaves to the left of child ci
                    for (long long m = 0; m < batch[d - ci]; ++m)
                        rebuilt.push_back(OrderedTree{});
                    rebuilt.push_back(std::move(x->children[ci]));
                }
                for (long long m = 0; m < batch[0]; ++m) rebuilt.push_back(OrderedTree{});
                x->children = std::move(rebuilt);
            }
        }
    }
    return t;
}

/// Prune every edge whose lower endpoint is a leaf, level by level from the
/// root, recording the removal counts; exact inverse of spring.
inline std::pair<OrderedTree, WeakComposition> fall(const OrderedTree& tree) {
    if (tree.children.empty())
        throw std::invalid_argument("fall: tree must have at least one edge");
    OrderedTree t = tree;
    WeakComposition c;
    int max_level = t.height();
    for (int level = 0; level < max_level; ++level) {
        std::vector<OrderedTree*> nodes;
        detail::level_nodes(t, level, nodes);
        for (OrderedTree* x : nodes) {
            if (x->children.empty()) continue;  // already a leaf, nothing below
            bool all_single = true;
            for (const auto& ch : x->children)
                if (!ch.children.empty()) all_single = false;
            if (all_single) {
                // x becomes a leaf of the result: one positive part
                c.positive.insert(c.positive.begin(),
                                  static_cast<long long>(x->children.size()));
                x->children.clear();
            } else {
                // gaps around the surviving subtrees, recorded right to left
                std::vector<long long> gaps;
                long long run = 0;
                std::vector<OrderedTree> kept;
                for (auto& ch : x->children) {
                    if (ch.children.empty()) {
                        ++run;
                    } else {
                        gaps.push_back(run);
                        run = 0;
                        kept.push_back(std::move(ch));
                    }
                }
                gaps.push_back(run);  // right of the last survivor
                // block order: rightmost gap first
                c.nonneg.insert(c.nonneg.begin(), gaps.rbegin(), gaps.rend());
                x->children = std::move(kept);
            }
        }
    }
    return {std::move(t), std::move(c)};
}

enum class NarayanaMethod { Recursion, Closed, Brute };

inline Int a_rec(long long n, long long j, long long k);

/// Height-refined Narayana numbers N(n,j,k): trees with n edges, j leaves,
/// height <= k; N(0,0,k) = 1.
inline Int narayana_height(long long n, long long j, long long k,
                           NarayanaMethod method = NarayanaMethod::Recursion) {
    if (n < 0 || j < 0 || k < 0)
        throw std::invalid_argument("narayana_height: arguments must be >= 0");
    if (method == NarayanaMethod::Brute) {
        if (n > kTreeEnumCeiling)
            throw std::invalid_argument("narayana_height: brute method exceeds tree ceiling");
        if (n == 0) return j == 0 ? 1 : 0;
        long long internal = n + 1 - j;
        if (internal < 0) return 0;
        return static_cast<long long>(
            enumerate_trees(static_cast<int>(n), static_cast<int>(std::min(n, k)),
                            static_cast<int>(internal))
                .size());
    }
    if (n == 0) return j == 0 ? 1 : 0;
    if (j == 0 || j > n || k == 0) return 0;
    if (method == NarayanaMethod::Closed) return a_rec(n, n - j, k - 1);
    static std::map<std::tuple<long long, long long, long long>, Int> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({n, j, k});
        if (it != cache.end()) return it->second;
    }
    Int total = 0;
    for (long long i = 0; i <= n - j; ++i)
        total += narayana_height(n - j, i, k - 1, NarayanaMethod::Recursion) *
                 binom(2 * n - j - i, 2 * n - 2 * j);
    std::lock_guard<std::mutex> lock(mutex);
    cache.insert({{n, j, k}, total});
    return total;
}

/// Zabrocki's Narayana recurrence: N(n,j) = sum_i N(j-1,i) C(n+i-1, 2j-2).
inline Int zabrocki(long long n, long long j) {
    if (n < j || j < 2) throw std::invalid_argument("zabrocki: requires n >= j >= 2");
    Int total = 0;
    for (long long i = 1; i <= j - 1; ++i)
        total += narayana(j - 1, i) * binom(n + i - 1, 2 * j - 2);
    return total;
}

/// a^(k)_{n,231,j} = sum_{i=0}^{j} a^(k-1)_{j,231,i} C(n+i, 2j), with
/// a^(k)_{0,231,0} = 1 and the k=0 base a^(0)_{n,231,j} = [j==0].
inline Int a_rec(long long n, long long j, long long k) {
    if (n < 0 || j < 0 || k < 0) return 0;
    if (k == 0) return j == 0 ? 1 : 0;
    if (n == 0) return j == 0 ? 1 : 0;
    static std::map<std::tuple<long long, long long, long long>, Int> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({n, j, k});
        if (it != cache.end()) return it->second;
    }
    Int total = 0;
    for (long long i = 0; i <= j; ++i) total += a_rec(j, i, k - 1) * binom(n + i, 2 * j);
    std::lock_guard<std::mutex> lock(mutex);
    cache.insert({{n, j, k}, total});
    return total;
}

namespace detail {
// sum over weakly decreasing chains j >= i_{k-1} >= ... >= i_1 >= 0 of the
// product of C(i_{m+2}+i_m, 2 i_{m+1})
inline Int iterated_sum(long long pos, long long upper, std::vector<long long>& chain,
                        long long n, long long j, long long k) {
    if (pos == 0) {
        // chain filled: i_0 = 0, i_k = j, i_{k+1} = n
        auto at = [&](long long idx) -> long long {
            if (idx == 0) return 0;
            if (idx == k) return j;
            if (idx == k + 1) return n;
            return chain[idx - 1];
        };
        Int prod = 1;
        for (long long m = 0; m <= k - 1; ++m) prod *= binom(at(m + 2) + at(m), 2 * at(m + 1));
        return prod;
    }
    Int total = 0;
    for (long long v = 0; v <= upper; ++v) {
        chain[pos - 1] = v;
        total += iterated_sum(pos - 1, v, chain, n, j, k);
    }
    return total;
}
} // namespace detail

/// The iterated product formula for a^(k)_{n,231,j}; k <= 1 falls back to
/// the delta / single-binomial bases.
inline Int a_iterated(long long n, long long j, long long k) {
    if (n < 0 || j < 0 || k < 0) return 0;
    if (k == 0) return j == 0 ? 1 : 0;
    if (k == 1) return j == 0 ? 1 : binom(n, 2 * j);
    std::vector<long long> chain(k - 1);
    return detail::iterated_sum(k - 1, j, chain, n, j, k);
}

/// sum_{m=0}^{n} C(m,j) C(n-m,k-j) == C(n+1,k+1); self-test of the binomial
/// conventions.
inline bool binomial_convolution_identity(long long n, long long k, long long j) {
    if (!(n >= k && k >= j && j >= 0))
        throw std::invalid_argument("binomial_convolution_identity: requires n >= k >= j >= 0");
    Int lhs = 0;
    for (long long m = 0; m <= n; ++m) lhs += binom(m, j) * binom(n - m, k - j);
    return lhs == binom(n + 1, k + 1);
}

/// Q~_a(n,j,k+2) = sum_{s>=1} C(n-(k+1)s-1, j-(k+2)s-a) C(n+(k+1)s-1, j+(k+2)s+a)
inline Int qtilde(long long n, long long j, long long kp2, long long a) {
    long long k = kp2 - 2;
    Int q = 0;
    for (long long s = 1;; ++s) {
        long long bot = j - (k + 2) * s - a;
        q += binom(n - (k + 1) * s - 1, bot) * binom(n + (k + 1) * s - 1, j + (k + 2) * s + a);
        if (bot < 0) break;
    }
    return q;
}

struct IdentityReport {
    long long n, j, k;
    Int lhs;
    Int rhs;
    bool equal;
};

/// Compares the iterated product formula (or C(n,2j) for k=1) against the
/// Narayana-minus-correction form coming from the tree count.
inline IdentityReport identity_check(long long n, long long j, long long k) {
    if (n < 1 || j < 0 || k < 1)
        throw std::invalid_argument("identity_check: requires n >= 1, j >= 0, k >= 1");
    Int lhs = k == 1 ? binom(n, 2 * j) : a_iterated(n, j, k);
    Int rhs = narayana(n, j + 1) -
              (qtilde(n, j, k + 2, 1) - 2 * qtilde(n, j, k + 2, 0) + qtilde(n, j, k + 2, -1));
    return {n, j, k, lhs, rhs, lhs == rhs};
}

} // namespace dropperm
