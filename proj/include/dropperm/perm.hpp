#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dropperm {

/// Permutation of [n] in one-line notation, 1-based values.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<int> sorted(word_);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1)
                throw std::invalid_argument("Permutation: word is not a bijection on [n]");
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// Parse space-separated one-line notation, e.g. "3 1 2".
    static Permutation parse(const std::string& text) {
        std::istringstream is(text);
        std::vector<int> w;
        int v;
        while (is >> v) w.push_back(v);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }
    /// 1-based access: p(i) = sigma_i
    int operator()(int i) const { return word_.at(i - 1); }
    const std::vector<int>& word() const { return word_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i) os << ' ';
            os << word_[i];
        }
        return os.str();
    }

private:
    std::vector<int> word_;
};

inline std::set<int> descent_set(const Permutation& p) {
    std::set<int> d;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) d.insert(i);
    return d;
}

inline int des(const Permutation& p) {
    int c = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) ++c;
    return c;
}

/// max over i of (i - sigma_i); 0 for the empty permutation
inline int max_drop(const Permutation& p) {
    int m = 0;
    for (int i = 1; i <= p.size(); ++i) m = std::max(m, i - p(i));
    return m;
}

/// red[w]: replace the i-th smallest entry by i. Entries must be distinct.
inline Permutation reduce(const std::vector<int>& word) {
    std::vector<int> sorted(word);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("reduce: entries must be distinct");
    std::vector<int> w(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), word[i]);
        w[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(w));
}

namespace detail {
// does pattern occur in word starting from (word pos `from`, pattern pos `at`)?
inline bool occurs_from(const std::vector<int>& w, const std::vector<int>& pat,
                        std::vector<int>& chosen, std::size_t from) {
    if (chosen.size() == pat.size()) return true;
    for (std::size_t i = from; i < w.size(); ++i) {
        // check order-isomorphism of chosen+w[i] against the pattern prefix
        bool ok = true;
        std::size_t m = chosen.size();
        for (std::size_t a = 0; a < m && ok; ++a) {
            if ((chosen[a] < w[i]) != (pat[a] < pat[m])) ok = false;
        }
        if (!ok) continue;
        chosen.push_back(w[i]);
        if (occurs_from(w, pat, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}
} // namespace detail

/// true iff no subsequence of p is order-isomorphic to pattern
inline bool avoids(const Permutation& p, const Permutation& pattern) {
    if (pattern.size() == 0)
        throw std::invalid_argument("avoids: pattern must be nonempty");
    if (pattern.size() > p.size()) return true;
    std::vector<int> chosen;
    return !detail::occurs_from(p.word(), pattern.word(), chosen, 0);
}

/// One full left-to-right pass of adjacent-swap bubble sort.
inline Permutation bubble_pass(const Permutation& p) {
    std::vector<int> w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) std::swap(w[i], w[i + 1]);
    return Permutation(std::move(w));
}

/// Number of bubble passes needed to reach the identity (equals max_drop).
inline int bubble_complexity(const Permutation& p) {
    Permutation q = p;
    int c = 0;
    while (!q.is_identity()) {
        q = bubble_pass(q);
        ++c;
    }
    return c;
}

/// One-pass stack sort; returns the identity iff p avoids 231.
inline Permutation stack_sort(const Permutation& p) {
    std::vector<int> out, stack;
    for (int i = 1; i <= p.size(); ++i) {
        int v = p(i);
        while (!stack.empty() && stack.back() < v) {
            out.push_back(stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return Permutation(std::move(out));
}

/// fast 231-avoidance test via stack sort
inline bool avoids_231(const Permutation& p) { return stack_sort(p).is_identity(); }

/// Number of positions matching the quadrant marked mesh pattern
/// MMP(a,b,c,d): quadrants I..IV around (i, sigma_i) contain at least
/// a, b, c, d points; a 0 coordinate imposes no condition.
inline int mmp_statistic(const Permutation& p, int a, int b, int c, int d) {
    int n = p.size();
    int matches = 0;
    for (int i = 1; i <= n; ++i) {
        int q1 = 0, q2 = 0, q3 = 0, q4 = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            if (j > i && p(j) > p(i)) ++q1;
            else if (j < i && p(j) > p(i)) ++q2;
            else if (j < i && p(j) < p(i)) ++q3;
            else ++q4;
        }
        if (q1 >= a && q2 >= b && q3 >= c && q4 >= d) ++matches;
    }
    return matches;
}

/// Bijection from even-size subsets of [n] to 231-avoiders with md <= 1:
/// identity outside the intervals [s_{2j-1}, s_{2j}], and on each interval
/// the word s_{2j} s_{2j-1} (s_{2j-1}+1) ... (s_{2j}-1).
inline Permutation even_subset_to_perm(const std::set<int>& S, int n) {
    if (S.size() % 2 != 0)
        throw std::invalid_argument("even_subset_to_perm: subset size must be even");
    for (int s : S)
        if (s < 1 || s > n)
            throw std::invalid_argument("even_subset_to_perm: element out of range");
    std::vector<int> s(S.begin(), S.end());
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (std::size_t j = 0; j + 1 < s.size(); j += 2) {
        int lo = s[j], hi = s[j + 1];
        w[lo - 1] = hi;
        for (int i = lo + 1; i <= hi; ++i) w[i - 1] = i - 1;
    }
    return Permutation(std::move(w));
}

/// Parse "1,3,6" or "{1,3,6}" into a subset.
inline std::set<int> parse_subset(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != '{' && ch != '}' && ch != ' ') t.push_back(ch);
    std::set<int> S;
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        S.insert(std::stoi(tok));
    }
    return S;
}

/// Brute-force ceiling guarding factorial enumeration; overridable via
/// the DROP_ZONE_MAX_N environment variable.
inline int default_brute_ceiling() {
    if (const char* env = std::getenv("DROP_ZONE_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 10;
}

struct ClassSpec {
    int n = 0;
    std::optional<int> k;  // max-drop bound; nullopt = unbounded
    std::optional<int> j;  // descent count; nullopt = any
};

enum class DropMode { AtMostK, ExactlyK };

/// All sigma in S_n(231) with the requested max-drop and descent filters,
/// in lexicographic order on the one-line word.
inline std::vector<Permutation> enumerate_class(const ClassSpec& spec, DropMode mode,
                                                int ceiling = default_brute_ceiling()) {
    if (spec.n < 1) throw std::invalid_argument("enumerate_class: n must be >= 1");
    if (spec.n > ceiling)
        throw std::invalid_argument("enumerate_class: n=" + std::to_string(spec.n) +
                                    " exceeds brute-force ceiling " + std::to_string(ceiling) +
                                    " (override with DROP_ZONE_MAX_N)");
    std::vector<int> w(spec.n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation p{std::vector<int>(w)};
        if (!avoids_231(p)) continue;
        int md = max_drop(p);
        if (spec.k) {
            if (mode == DropMode::AtMostK && md > *spec.k) continue;
            if (mode == DropMode::ExactlyK && md != *spec.k) continue;
        }
        if (spec.j && des(p) != *spec.j) continue;
        out.push_back(std::move(p));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// counts[md][des] over all of S_n(231), computed in a single sweep;
/// shared oracle for the verification sweeps.
inline std::vector<std::vector<long long>> class_count_table(int n,
                                                             int ceiling = default_brute_ceiling()) {
    if (n < 1) throw std::invalid_argument("class_count_table: n must be >= 1");
    if (n > ceiling)
        throw std::invalid_argument("class_count_table: n exceeds brute-force ceiling");
    std::vector<std::vector<long long>> counts(n, std::vector<long long>(n, 0));
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        Permutation p{std::vector<int>(w)};
        if (!avoids_231(p)) continue;
        counts[max_drop(p)][des(p)] += 1;
    } while (std::next_permutation(w.begin(), w.end()));
    return counts;
}

} // namespace dropperm
