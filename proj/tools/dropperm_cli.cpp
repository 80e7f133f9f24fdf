// Command-line front end: tables of the bounded-drop counts, generating
// functions, bijection transcripts, enumeration dumps, and the
// cross-verification matrix.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dropperm/formulas.hpp"
#include "dropperm/genfunc.hpp"
#include "dropperm/trees.hpp"

using namespace dropperm;
using nlohmann::json;

namespace {

struct Record {
    int n, j, k;
    std::string stat;
    std::string method;
    Int value;
};

void emit_records(const std::vector<Record>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,j,k,stat,method,value\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.j << "," << r.k << "," << r.stat << ","
                      << r.method << "," << to_decimal(r.value) << "\n";
    } else if (format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.n},
                           {"j", r.j},
                           {"k", r.k},
                           {"stat", r.stat},
                           {"method", r.method},
                           {"value", to_decimal(r.value)}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << r.stat << "(n=" << r.n << ", j=" << r.j << ", k=" << r.k
                      << ") [" << r.method << "] = " << to_decimal(r.value) << "\n";
    }
}

Int table_value(const std::string& stat, const std::string& method, int n, int j, int k) {
    if (stat == "a") {
        if (method == "brute")
            return static_cast<long long>(
                enumerate_class({n, k, j}, DropMode::AtMostK).size());
        if (method == "series") return a_coeff(n, j, k);
        if (method == "kemp") return a_kemp(n, j, k);
        if (method == "rec") return a_rec(n, j, k);
        if (method == "iterated") return a_iterated(n, j, k);
        throw CLI::ValidationError("--method", "stat a supports brute|series|kemp|rec|iterated");
    }
    if (stat == "e") {
        if (method == "brute")
            return static_cast<long long>(
                enumerate_class({n, k, j}, DropMode::ExactlyK).size());
        if (method == "series") return e_coeff(n, j, k);
        throw CLI::ValidationError("--method", "stat e supports brute|series");
    }
    if (stat == "N") {
        if (method == "brute") return narayana_height(n, j, k, NarayanaMethod::Brute);
        if (method == "rec") return narayana_height(n, j, k, NarayanaMethod::Recursion);
        if (method == "closed") return narayana_height(n, j, k, NarayanaMethod::Closed);
        throw CLI::ValidationError("--method", "stat N supports brute|rec|closed");
    }
    throw CLI::ValidationError("--stat", "unknown stat " + stat);
}

int run_verify(int max_n, int max_k, const std::string& format) {
    std::vector<json> mismatches;
    long long cells = 0;
    for (int n = 1; n <= max_n; ++n) {
        auto table = class_count_table(n);
        for (int k = 0; k <= max_k; ++k)
            for (int j = 0; j < n; ++j) {
                Int brute = 0;
                for (int md = 0; md <= std::min(k, n - 1); ++md) brute += table[md][j];
                std::vector<std::pair<std::string, Int>> methods = {
                    {"brute", brute}, {"series", a_coeff(n, j, k)}, {"rec", a_rec(n, j, k)}};
                if (k >= 1) methods.emplace_back("kemp", a_kemp(n, j, k));
                if (k >= 2) methods.emplace_back("iterated", a_iterated(n, j, k));
                ++cells;
                for (const auto& [name, value] : methods)
                    if (value != brute)
                        mismatches.push_back({{"n", n},
                                              {"j", j},
                                              {"k", k},
                                              {"method", name},
                                              {"value", to_decimal(value)},
                                              {"expected", to_decimal(brute)}});
            }
    }
    if (format == "json") {
        json out = {{"cells", cells}, {"mismatches", mismatches}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "checked " << cells << " cells, " << mismatches.size()
                  << " mismatches\n";
        for (const auto& m : mismatches)
            std::cout << "MISMATCH n=" << m["n"] << " j=" << m["j"] << " k=" << m["k"]
                      << " method=" << m["method"].get<std::string>() << " got "
                      << m["value"].get<std::string>() << " expected "
                      << m["expected"].get<std::string>() << "\n";
    }
    return mismatches.empty() ? 0 : 1;
}

int run_identity(int max_n, int max_k, const std::string& format) {
    bool all_equal = true;
    json rows = json::array();
    for (long long n = 1; n <= max_n; ++n)
        for (long long j = 0; j < n; ++j)
            for (long long k = 1; k <= max_k; ++k) {
                auto r = identity_check(n, j, k);
                if (!r.equal) all_equal = false;
                if (format == "json")
                    rows.push_back({{"n", r.n},
                                    {"j", r.j},
                                    {"k", r.k},
                                    {"lhs", to_decimal(r.lhs)},
                                    {"rhs", to_decimal(r.rhs)},
                                    {"equal", r.equal}});
                else if (!r.equal)
                    std::cout << "UNEQUAL n=" << r.n << " j=" << r.j << " k=" << r.k
                              << " lhs=" << to_decimal(r.lhs)
                              << " rhs=" << to_decimal(r.rhs) << "\n";
            }
    if (format == "json") {
        std::cout << json{{"all_equal", all_equal}, {"checks", rows}}.dump(2) << "\n";
    } else {
        std::cout << (all_equal ? "all identities hold\n" : "identity failures found\n");
    }
    return all_equal ? 0 : 1;
}

json series_to_json(int k, const SeriesTX& s) {
    json coeffs = json::array();
    for (const auto& p : s.coeffs()) {
        json row = json::array();
        for (const auto& c : p.coeffs()) row.push_back(to_decimal(c));
        coeffs.push_back(row);
    }
    return {{"k", k}, {"coeffs", coeffs}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-drop 231-avoiding permutation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // table
    auto* table = app.add_subcommand("table", "count tables by (n, j, k)");
    std::string stat = "a", method = "series";
    int t_n = 0, t_k = 0;
    std::optional<int> t_j;
    table->add_option("--stat", stat)->check(CLI::IsMember({"a", "e", "N"}));
    table->add_option("--method", method);
    table->add_option("--n", t_n)->required();
    table->add_option("--k", t_k)->required();
    table->add_option("--j", t_j, "single j (default: all rows)");

    // gf
    auto* gf = app.add_subcommand("gf", "generating functions");
    gf->require_subcommand(1);
    auto* gf_series = gf->add_subcommand("series", "truncated series of A^(k)(x,t)");
    auto* gf_rational = gf->add_subcommand("rational", "exact rational form of A^(k)(x,t)");
    int g_k = 0, g_order = 10;
    bool x_eq_1 = false;
    gf_series->add_option("--k", g_k)->required();
    gf_series->add_option("--order", g_order);
    gf_series->add_flag("--x-eq-1", x_eq_1, "specialize x := 1");
    gf_rational->add_option("--k", g_k)->required();

    // bijection
    auto* bij = app.add_subcommand("bijection", "apply one of the structural bijections");
    std::string bij_map, bij_in;
    bij->add_option("map", bij_map, "tree2perm|perm2tree|perm2dyck|tree2dyck|dyck2tree")
        ->required()
        ->check(CLI::IsMember({"tree2perm", "perm2tree", "perm2dyck", "tree2dyck",
                               "dyck2tree", "subset2perm"}));
    bij->add_option("--in", bij_in, "input object (one-line permutation, parens tree, U/D path)")
        ->required();
    int bij_n = 0, bij_j = 0;
    bij->add_option("--n", bij_n, "ambient n for subset2perm");
    bij->add_option("--j", bij_j, "descent count for subset2perm (0 = even-subset map)");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "dump a class of objects");
    std::string en_what = "perms", en_mode = "at-most";
    int en_n = 0;
    std::optional<int> en_k, en_j;
    en->add_option("what", en_what)->check(CLI::IsMember({"perms", "trees", "dyck"}));
    en->add_option("--n", en_n)->required();
    en->add_option("--k", en_k, "max-drop bound / height bound / height bound");
    en->add_option("--j", en_j, "descents / internal nodes / peaks");
    en->add_option("--mode", en_mode)->check(CLI::IsMember({"at-most", "exactly"}));

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check all counting methods");
    int v_max_n = 8, v_max_k = 5;
    verify->add_option("--max-n", v_max_n);
    verify->add_option("--max-k", v_max_k);

    // identity
    auto* ident = app.add_subcommand("identity", "check the Narayana-minus-correction identity");
    int i_max_n = 12, i_max_k = 5;
    ident->add_option("--max-n", i_max_n);
    ident->add_option("--max-k", i_max_k);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) {
            std::vector<Record> rows;
            std::vector<int> js;
            if (t_j) js.push_back(*t_j);
            else
                for (int j = 0; j < std::max(t_n, 1); ++j) js.push_back(j);
            for (int j : js)
                rows.push_back({t_n, j, t_k, stat, method,
                                table_value(stat, method, t_n, j, t_k)});
            emit_records(rows, format);
        } else if (*gf_series) {
            auto s = a231_series(g_k, g_order);
            if (x_eq_1) {
                bool first = true;
                for (const Int& v : s.at_x_one()) {
                    if (!first) std::cout << ' ';
                    std::cout << to_decimal(v);
                    first = false;
                }
                std::cout << "\n";
            } else if (format == "json") {
                std::cout << series_to_json(g_k, s).dump(2) << "\n";
            } else {
                std::cout << s.str() << "\n";
            }
        } else if (*gf_rational) {
            auto r = a231_rational(g_k);
            if (format == "json") {
                json num = json::array(), den = json::array();
                for (const auto& p : r.num) {
                    json row = json::array();
                    for (const auto& c : p.coeffs()) row.push_back(to_decimal(c));
                    num.push_back(row);
                }
                for (const auto& p : r.den) {
                    json row = json::array();
                    for (const auto& c : p.coeffs()) row.push_back(to_decimal(c));
                    den.push_back(row);
                }
                std::cout << json{{"k", g_k}, {"num", num}, {"den", den}}.dump(2) << "\n";
            } else {
                std::cout << "(" << tpoly_str(r.num) << ") / (" << tpoly_str(r.den)
                          << ")\n";
            }
        } else if (*bij) {
            if (bij_map == "tree2perm") {
                std::cout << tree_to_perm(OrderedTree::parse(bij_in)).str() << "\n";
            } else if (bij_map == "perm2tree") {
                std::cout << perm_to_tree(Permutation::parse(bij_in)).str() << "\n";
            } else if (bij_map == "perm2dyck") {
                std::cout << perm_to_dyck(Permutation::parse(bij_in)).steps << "\n";
            } else if (bij_map == "tree2dyck") {
                std::cout << tree_to_dyck(OrderedTree::parse(bij_in)).steps << "\n";
            } else if (bij_map == "dyck2tree") {
                std::cout << dyck_to_tree(DyckPath::parse(bij_in)).str() << "\n";
            } else {
                auto S = parse_subset(bij_in);
                Permutation p = bij_j == 0 ? even_subset_to_perm(S, bij_n)
                                           : subset_to_extremal_perm(S, bij_n, bij_j);
                std::cout << p.str() << "\n";
            }
        } else if (*en) {
            if (en_what == "perms") {
                DropMode mode =
                    en_mode == "exactly" ? DropMode::ExactlyK : DropMode::AtMostK;
                for (const auto& p : enumerate_class({en_n, en_k, en_j}, mode))
                    std::cout << p.str() << "\n";
            } else if (en_what == "trees") {
                for (const auto& t :
                     enumerate_trees(en_n, en_k.value_or(-1), en_j ? *en_j : -1))
                    std::cout << t.str() << "\n";
            } else {
                for (const auto& d :
                     enumerate_dyck(en_n, en_j ? *en_j : -1, en_k.value_or(-1)))
                    std::cout << d.steps << "\n";
            }
        } else if (*verify) {
            return run_verify(v_max_n, v_max_k, format);
        } else if (*ident) {
            return run_identity(i_max_n, i_max_k, format);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
