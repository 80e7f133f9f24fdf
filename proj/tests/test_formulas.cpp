#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "dropperm/formulas.hpp"
#include "dropperm/genfunc.hpp"

using namespace dropperm;

TEST_CASE("binom convention") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-2, 1) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(40, 20) == Int("137846528820"));
}

TEST_CASE("narayana numbers") {
    CHECK(narayana(4, 2) == 6);
    CHECK(Int(enumerate_dyck(4, 2).size()) == narayana(4, 2));
    for (int n = 1; n <= 9; ++n) {
        CHECK(narayana(n, 1) == 1);
        for (int j = 1; j <= n; ++j) CHECK(narayana(n, j) == narayana(n, n - j + 1));
    }
    CHECK(narayana(0, 0) == 1);
    CHECK(narayana(0, 1) == 0);
    // N(n, n-j) is the large-k plateau of the bounded-drop counts
    for (int n = 1; n <= 9; ++n)
        for (int j = 0; j < n; ++j) REQUIRE(narayana(n, n - j) == a_coeff(n, j, j));
}

TEST_CASE("kemp_h pins") {
    CHECK(kemp_h(5, 3, 3) == 6);
    for (int k = 1; k <= 5; ++k) {
        CHECK(kemp_h(1, 1, k) == 1);
        CHECK(kemp_h(1, 2, k) == 0);
    }
    CHECK(kemp_h(1, 1, 1) == 1);
    CHECK(kemp_h(2, 1, 1) == 0);
    // height <= 1 means the star: j = n-1 leaves only
    for (int n = 2; n <= 8; ++n)
        for (int j = 0; j <= n; ++j) {
            Int expected = j == n - 1 ? 1 : 0;
            REQUIRE(kemp_h(n, j, 2) == expected);
        }
}

TEST_CASE("kemp_h counts trees by nodes, leaves, and height") {
    for (int nodes = 1; nodes <= 9; ++nodes)
        for (int k = 1; k <= 5; ++k)
            for (int j = 0; j <= nodes; ++j) {
                long long brute = 0;
                for (const auto& t : enumerate_trees(nodes - 1, k - 1))
                    if (t.leaf_count() == j) ++brute;
                REQUIRE(kemp_h(nodes, j, k) == brute);
            }
}

TEST_CASE("a_kemp pins") {
    CHECK(a_kemp(4, 1, 1) == 6);
    CHECK(a_kemp(9, 3, 2) == 714);
    for (int n = 1; n <= 9; ++n)
        for (int j = 0; j < n; ++j)
            for (int k = j; k <= j + 2; ++k)
                REQUIRE(a_kemp(n, j, k) == narayana(n, n - j));
}

TEST_CASE("e_extremal pins") {
    CHECK(e_extremal(5, 2, ExtremalVariant::KEqualsJ) == 15);
    CHECK(e_extremal(5, 2, ExtremalVariant::KEqualsJ) == binom(6, 4));
    CHECK(e_extremal(6, 3, ExtremalVariant::KEqualsJMinus1) == 21);
    CHECK_THROWS_AS(e_extremal(5, 0, ExtremalVariant::KEqualsJ), std::invalid_argument);
    CHECK_THROWS_AS(e_extremal(5, 1, ExtremalVariant::KEqualsJMinus1), std::invalid_argument);
    for (int n = 1; n <= 9; ++n)
        for (int j = 1; j < n; ++j) {
            REQUIRE(e_extremal(n, j, ExtremalVariant::KEqualsJ) == e_coeff(n, j, j));
            if (j >= 2)
                REQUIRE(e_extremal(n, j, ExtremalVariant::KEqualsJMinus1) ==
                        e_coeff(n, j, j - 1));
        }
}

TEST_CASE("a_drop_formula pins") {
    CHECK(a_drop_formula(5, 2, DropFormulaVariant::KEqualsJMinus1) == 5);
    CHECK(a_drop_formula(6, 3, DropFormulaVariant::KEqualsJMinus1) == 22);
    CHECK(a_drop_formula(7, 3, DropFormulaVariant::KEqualsJMinus2) == 7);
    for (int n = 1; n <= 9; ++n)
        for (int j = 1; j < n; ++j) {
            REQUIRE(a_drop_formula(n, j, DropFormulaVariant::KEqualsJMinus1) ==
                    a_coeff(n, j, j - 1));
            if (j >= 2)
                REQUIRE(a_drop_formula(n, j, DropFormulaVariant::KEqualsJMinus2) ==
                        a_coeff(n, j, j - 2));
        }
}

TEST_CASE("weak compositions") {
    CHECK(count_weak(10, 3, 6) == 6435);
    CHECK(count_weak(2, 1, 1) == 2);
    auto w211 = weak_compositions(2, 1, 1);
    REQUIRE(w211.size() == 2);
    CHECK(w211[0].str() == "(1;1)");
    CHECK(w211[1].str() == "(2;0)");
    CHECK(count_weak(0, 0, 0) == 1);
    CHECK(count_weak(3, 0, 0) == 0);
    CHECK(weak_compositions(0, 0, 0).size() == 1);
    CHECK(weak_compositions(3, 0, 0).empty());
    for (long long n = 0; n <= 6; ++n)
        for (long long i = 0; i <= 3; ++i)
            for (long long j = 0; j <= 4; ++j) {
                auto all = weak_compositions(n, i, j);
                REQUIRE(Int(all.size()) == count_weak(n, i, j));
                for (const auto& c : all) {
                    REQUIRE(c.total() == n);
                    for (long long v : c.positive) REQUIRE(v >= 1);
                }
            }
    CHECK_THROWS_AS(weak_compositions(20, 6, 6), std::invalid_argument);
}

TEST_CASE("subset_to_extremal_perm pins") {
    CHECK(subset_to_extremal_perm({1, 3, 4, 5, 6, 8}, 7, 3) ==
          Permutation::parse("6 1 5 3 2 4 7"));
    CHECK(subset_to_extremal_perm({1, 2, 3, 4}, 3, 2) == Permutation::parse("3 2 1"));
    // j=1 coincides with the even-subset map
    for (int n = 3; n <= 7; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                REQUIRE(subset_to_extremal_perm({a, b}, n, 1) ==
                        even_subset_to_perm({a, b}, n));
    CHECK_THROWS_AS(subset_to_extremal_perm({1, 2}, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(subset_to_extremal_perm({1, 2, 3, 9}, 5, 2), std::invalid_argument);
}

TEST_CASE("subset_to_extremal_perm is a bijection onto the extremal class") {
    for (int j = 1; j <= 4; ++j)
        for (int n = j + 1; n + j - 1 <= 11; ++n) {
            int m = n + j - 1;
            std::vector<Permutation> images;
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::set<int> S;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) S.insert(i + 1);
                if (static_cast<int>(S.size()) != 2 * j) continue;
                Permutation p = subset_to_extremal_perm(S, n, j);
                REQUIRE(des(p) == j);
                REQUIRE(max_drop(p) == j);
                REQUIRE(avoids_231(p));
                images.push_back(std::move(p));
            }
            REQUIRE(Int(images.size()) == binom(m, 2 * j));
            std::sort(images.begin(), images.end());
            REQUIRE(std::adjacent_find(images.begin(), images.end()) == images.end());
            if (n <= 9) {
                auto target = enumerate_class({n, j, j}, DropMode::ExactlyK);
                REQUIRE(images == target);
            }
        }
}

TEST_CASE("spring pins") {
    OrderedTree rec0 = OrderedTree::parse("()(()())");
    WeakComposition c{{1, 2, 2}, {1, 2, 0, 0, 1, 1}};
    OrderedTree rec3 = spring(rec0, c);
    CHECK(rec3.str() == "()(()())()((()())()()(())())");
    CHECK(rec3.edges() == 14);
    CHECK(rec3.leaf_count() == 10);
    CHECK(rec3.height() == 3);
    CHECK(spring(OrderedTree::parse("()"), WeakComposition{{1}, {0, 0}}) ==
          OrderedTree::parse("(())"));
    CHECK_THROWS_AS(spring(rec0, WeakComposition{{1}, {1, 2, 0, 0, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(spring(rec0, WeakComposition{{1, 2, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("fall pins") {
    auto [base, c] = fall(OrderedTree::parse("()(()()())()((()()))"));
    CHECK(base.str() == "()(())");
    CHECK(c.str() == "(2,3;0,0,0,1,1)");
    auto [single, star_c] = fall(OrderedTree::parse("()()()()"));
    CHECK(single == OrderedTree{});
    CHECK(star_c.str() == "(4;)");
    CHECK_THROWS_AS(fall(OrderedTree{}), std::invalid_argument);
}

TEST_CASE("spring and fall are mutually inverse, exhaustive n <= 8") {
    // fall then spring over every tree with at least one edge
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n)) {
            auto [base, c] = fall(t);
            REQUIRE(spring(base, c) == t);
        }
    // spring then fall over every legal (base, composition) pair
    for (int total = 1; total <= 8; ++total)
        for (int grow = 1; grow <= total; ++grow) {
            int base_edges = total - grow;
            for (const auto& base : enumerate_trees(base_edges)) {
                int leaves = base.leaf_count();
                int gaps = 2 * base_edges - leaves + 1;
                if (base_edges == 0) gaps = 0;  // lone root takes the leaf rule
                for (const auto& c : weak_compositions(grow, leaves, gaps)) {
                    OrderedTree t = spring(base, c);
                    REQUIRE(t.edges() == total);
                    REQUIRE(t.leaf_count() == grow);
                    REQUIRE(t.height() == base.height() + 1);
                    auto [base2, c2] = fall(t);
                    REQUIRE(base2 == base);
                    REQUIRE(c2 == c);
                }
            }
        }
}

TEST_CASE("narayana_height methods agree") {
    // 4 edges, 3 leaves, height <= 2: two internal nodes, six shapes
    CHECK(narayana_height(4, 3, 2) == 6);
    CHECK(narayana_height(4, 3, 2, NarayanaMethod::Brute) == 6);
    for (long long n = 0; n <= 12; ++n)
        for (long long j = 0; j <= n; ++j)
            for (long long k = 0; k <= 6; ++k) {
                Int rec = narayana_height(n, j, k);
                REQUIRE(rec == narayana_height(n, j, k, NarayanaMethod::Closed));
                if (n <= 10)
                    REQUIRE(rec == narayana_height(n, j, k, NarayanaMethod::Brute));
                if (k >= n) REQUIRE(rec == narayana(n, j));
            }
    for (long long n = 1; n <= 10; ++n) {
        CHECK(narayana_height(n, n, 1) == 1);
        for (long long j = 0; j < n; ++j) CHECK(narayana_height(n, j, 1) == 0);
    }
}

TEST_CASE("height-refined narayana recursion identity") {
    // N(n,j,k) = sum_i N(n-j,i,k-1) C(2n-j-i, 2n-2j), the closed method on
    // the left and fresh evaluation of the right-hand sum
    for (long long n = 1; n <= 12; ++n)
        for (long long j = 0; j <= n; ++j)
            for (long long k = 1; k <= 6; ++k) {
                Int rhs = 0;
                for (long long i = 0; i <= n - j; ++i)
                    rhs += narayana_height(n - j, i, k - 1, NarayanaMethod::Closed) *
                           binom(2 * n - j - i, 2 * n - 2 * j);
                REQUIRE(narayana_height(n, j, k, NarayanaMethod::Closed) == rhs);
            }
}

TEST_CASE("zabrocki recurrence") {
    CHECK(zabrocki(4, 2) == narayana(4, 2));
    CHECK(zabrocki(5, 3) == 20);
    for (long long j = 2; j <= 10; ++j) {
        CHECK(zabrocki(j, j) == 1);
        for (long long n = j; n <= 30; ++n) REQUIRE(zabrocki(n, j) == narayana(n, j));
    }
    CHECK_THROWS_AS(zabrocki(3, 1), std::invalid_argument);
}

TEST_CASE("a_rec pins") {
    CHECK(a_rec(8, 3, 2) == 280);
    for (long long n = 1; n <= 12; ++n) {
        for (long long j = 0; j <= n; ++j) REQUIRE(a_rec(n, j, 1) == binom(n, 2 * j));
        for (long long k = 0; k <= 5; ++k) CHECK(a_rec(n, 0, k) == 1);
    }
}

TEST_CASE("a_iterated pins") {
    CHECK(a_iterated(10, 4, 3) == 4005);
    // k=2 collapses to a single chain index
    for (long long n = 1; n <= 10; ++n)
        for (long long j = 0; j < n; ++j) {
            Int direct = 0;
            for (long long i = 0; 2 * i <= j; ++i)
                direct += binom(j, 2 * i) * binom(n + i, 2 * j);
            REQUIRE(a_iterated(n, j, 2) == direct);
        }
    for (long long n = 1; n <= 9; ++n)
        for (long long j = 0; j < n; ++j)
            for (long long k = j; k <= j + 2; ++k)
                if (k >= 2) REQUIRE(a_iterated(n, j, k) == narayana(n, n - j));
}

TEST_CASE("five-way agreement, n <= 9, j <= n-1, k <= 6") {
    for (int n = 1; n <= 9; ++n) {
        auto table = class_count_table(n);
        for (int k = 0; k <= 6; ++k)
            for (int j = 0; j < n; ++j) {
                Int brute = 0;
                for (int md = 0; md <= std::min(k, n - 1); ++md) brute += table[md][j];
                REQUIRE(a_coeff(n, j, k) == brute);
                if (k >= 1) REQUIRE(a_kemp(n, j, k) == brute);
                REQUIRE(a_rec(n, j, k) == brute);
                if (k >= 2) REQUIRE(a_iterated(n, j, k) == brute);
            }
    }
}

TEST_CASE("binomial convolution identity") {
    CHECK(binomial_convolution_identity(5, 2, 1));
    CHECK(binomial_convolution_identity(4, 4, 4));
    CHECK(binomial_convolution_identity(10, 4, 2));
    for (long long n = 0; n <= 30; ++n)
        for (long long k = 0; k <= n; ++k)
            for (long long j = 0; j <= k; ++j)
                REQUIRE(binomial_convolution_identity(n, k, j));
}

TEST_CASE("identity_check") {
    // j = 0, 1: the correction vanishes and the identity is Narayana itself
    for (long long n = 1; n <= 12; ++n)
        for (long long j = 0; j <= 1; ++j) {
            CHECK(qtilde(n, j, 3, -1) == 0);
            CHECK(qtilde(n, j, 3, 0) == 0);
            CHECK(qtilde(n, j, 3, 1) == 0);
            auto r = identity_check(n, j, 1);
            REQUIRE(r.equal);
            REQUIRE(r.rhs == narayana(n, j + 1));
        }
    // j = 2, k = 1 reduction
    for (long long n = 1; n <= 12; ++n) {
        CHECK(qtilde(n, 2, 3, -1) == binom(n + 1, 4));
        auto r = identity_check(n, 2, 1);
        REQUIRE(r.equal);
        REQUIRE(r.lhs == binom(n, 4));
    }
    auto pin = identity_check(12, 5, 3);
    CHECK(pin.equal);
    CHECK(pin.lhs == pin.rhs);
    for (long long n = 1; n <= 12; ++n)
        for (long long j = 0; j < n; ++j)
            for (long long k = 1; k <= 5; ++k) REQUIRE(identity_check(n, j, k).equal);
}
