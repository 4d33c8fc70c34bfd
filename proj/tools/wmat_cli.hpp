#ifndef WMAT_TOOLS_WMAT_CLI_HPP
#define WMAT_TOOLS_WMAT_CLI_HPP

// Command-line front end. run() is kept separate from main() so the test
// suite can drive it in-process.

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wmat/wmat.hpp>

namespace wmat::cli
{

enum exit_code : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
};

namespace detail
{

struct CaseResult {
    std::string label;
    bool passed = false;
};

inline std::vector<PackedWord> packed_words_up_to(std::size_t max_len)
{
    std::vector<PackedWord> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        for_each_packed(n, std::nullopt, [&](const PackedWord &w) { out.push_back(w); });
    }
    return out;
}

inline std::vector<CaseResult> run_verification(const std::string &property, std::size_t max_len,
                                                std::size_t threads)
{
    const std::vector<PackedWord> words = packed_words_up_to(max_len);
    std::vector<CaseResult> results;
    if (property == "bialgebra") {
        results.resize(words.size() * words.size());
        wmat::detail::parallel_for(results.size(), threads, [&](std::size_t i) {
            const PackedWord &u = words[i / words.size()];
            const PackedWord &v = words[i % words.size()];
            results[i] = {to_string(u) + " " + to_string(v), verify_bialgebra(u, v)};
        });
        return results;
    }
    std::function<bool(const PackedWord &)> check;
    if (property == "coassoc") {
        check = [](const PackedWord &w) { return verify_coassociativity(w); };
    } else if (property == "antipode") {
        check = [](const PackedWord &w) { return verify_antipode(w); };
    } else {
        check = [](const PackedWord &w) {
            if (w.empty()) {
                return true;
            }
            const std::vector<PackedWord> factors = factor_irreducible(w);
            for (const PackedWord &f : factors) {
                if (f.empty() || !is_irreducible(f)) {
                    return false;
                }
            }
            return shifted_concat_all(factors) == w;
        };
    }
    results.resize(words.size());
    wmat::detail::parallel_for(words.size(), threads,
                               [&](std::size_t i) { results[i] = {to_string(words[i]), check(words[i])}; });
    return results;
}

inline void check_length(const PackedWord &w, std::size_t max_len)
{
    if (w.size() > max_len) {
        throw resource_error("word length " + std::to_string(w.size()) + " exceeds --max-len "
                             + std::to_string(max_len));
    }
}

inline std::string join_row(const std::string &head, const std::vector<std::string> &cells)
{
    std::string out = head;
    for (const std::string &c : cells) {
        out += '\t';
        out += c;
    }
    return out;
}

} // namespace detail

// args excludes the program name.
inline int run(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact computations in the Hopf algebra of packed words", "wmat"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t threads = 1;
    app.add_option("--threads", threads, "Cap on worker threads (0 = hardware concurrency)")->capture_default_str();

    std::size_t enum_n = 0;
    std::optional<std::size_t> enum_sup;
    bool enum_irreducible = false;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "List packed words of length n, one per line");
    enumerate_cmd->add_option("n", enum_n, "Word length")->required();
    enumerate_cmd->add_option("--sup", enum_sup, "Only words with this supremum");
    enumerate_cmd->add_flag("--irreducible", enum_irreducible, "Only irreducible words");

    std::string table_kind;
    std::size_t table_max_n = 0;
    auto *table_cmd = app.add_subcommand("table", "Counting tables as TSV");
    table_cmd->add_option("kind", table_kind, "dnk, dn or in")->required()->check(CLI::IsMember({"dnk", "dn", "in"}));
    table_cmd->add_option("--max-n", table_max_n, "Largest n")->required();

    std::string factor_word;
    auto *factor_cmd = app.add_subcommand("factor", "Factor a packed word into irreducibles");
    factor_cmd->add_option("w", factor_word, "Packed word")->required();

    std::string product_left;
    std::string product_right;
    auto *product_cmd = app.add_subcommand("product", "Shifted concatenation u*v");
    product_cmd->add_option("u", product_left, "Packed word")->required();
    product_cmd->add_option("v", product_right, "Packed word")->required();

    std::string coproduct_word;
    std::size_t coproduct_max_len = 12;
    auto *coproduct_cmd = app.add_subcommand("coproduct", "Selection/quotient coproduct of a packed word");
    coproduct_cmd->add_option("w", coproduct_word, "Packed word")->required();
    coproduct_cmd->add_option("--max-len", coproduct_max_len, "Largest accepted word length")->capture_default_str();

    std::string antipode_word;
    std::size_t antipode_max_len = 8;
    auto *antipode_cmd = app.add_subcommand("antipode", "Antipode of a packed word");
    antipode_cmd->add_option("w", antipode_word, "Packed word")->required();
    antipode_cmd->add_option("--max-len", antipode_max_len, "Largest accepted word length")->capture_default_str();

    std::string verify_property;
    std::size_t verify_max_len = 4;
    auto *verify_cmd = app.add_subcommand("verify", "Check an identity on all packed words up to a length");
    verify_cmd->add_option("property", verify_property, "coassoc, bialgebra, antipode or factorization")
        ->required()
        ->check(CLI::IsMember({"coassoc", "bialgebra", "antipode", "factorization"}));
    verify_cmd->add_option("--max-len", verify_max_len, "Largest word length")->capture_default_str();

    std::size_t prim_n = 0;
    std::size_t prim_max_grade = 4;
    auto *primitives_cmd = app.add_subcommand("primitives", "Basis of the primitive space of one grade");
    primitives_cmd->add_option("--n", prim_n, "Grade")->required();
    primitives_cmd->add_option("--max-grade", prim_max_grade, "Largest accepted grade")->capture_default_str();

    std::size_t egf_max_n = 0;
    auto *egf_cmd = app.add_subcommand("egf-check", "Compare n! [x^n] e^x/(2-e^x) with d_n");
    egf_cmd->add_option("--max-n", egf_max_n, "Largest n")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (*enumerate_cmd) {
            std::optional<Index> sup;
            if (enum_sup) {
                sup = static_cast<Index>(*enum_sup);
            }
            for_each_packed(enum_n, sup, [&](const PackedWord &w) {
                if (!enum_irreducible || (!w.empty() && is_irreducible(w))) {
                    out << to_string(w) << '\n';
                }
            });
        } else if (*table_cmd) {
            const CountTriangle table(table_max_n);
            std::vector<std::string> header;
            for (std::size_t i = 0; i <= table_max_n; ++i) {
                header.push_back(std::to_string(i));
            }
            if (table_kind == "dnk") {
                out << detail::join_row("n/k", header) << '\n';
                for (std::size_t n = 0; n <= table_max_n; ++n) {
                    std::vector<std::string> cells;
                    for (std::size_t k = 0; k <= table_max_n; ++k) {
                        cells.push_back(table.packed(n, k).get_str());
                    }
                    out << detail::join_row(std::to_string(n), cells) << '\n';
                }
            } else {
                std::vector<std::string> cells;
                for (std::size_t n = 0; n <= table_max_n; ++n) {
                    cells.push_back((table_kind == "dn" ? table.packed_total(n) : table.irreducible(n)).get_str());
                }
                out << detail::join_row("n", header) << '\n';
                out << detail::join_row(table_kind == "dn" ? "d_n" : "i_n", cells) << '\n';
            }
        } else if (*factor_cmd) {
            const PackedWord w = parse_packed_word(factor_word);
            if (w.empty()) {
                throw parse_error("the unit word has no factorization into irreducibles");
            }
            std::string line;
            for (const PackedWord &f : factor_irreducible(w)) {
                if (!line.empty()) {
                    line += " * ";
                }
                line += to_string(f);
            }
            out << line << '\n';
        } else if (*product_cmd) {
            out << to_string(shifted_concat(parse_packed_word(product_left), parse_packed_word(product_right)))
                << '\n';
        } else if (*coproduct_cmd) {
            const PackedWord w = parse_packed_word(coproduct_word);
            detail::check_length(w, coproduct_max_len);
            out << to_string(coproduct(w)) << '\n';
        } else if (*antipode_cmd) {
            const PackedWord w = parse_packed_word(antipode_word);
            detail::check_length(w, antipode_max_len);
            out << to_string(antipode(w)) << '\n';
        } else if (*verify_cmd) {
            const std::vector<detail::CaseResult> results =
                detail::run_verification(verify_property, verify_max_len, threads);
            std::size_t failed = 0;
            for (const detail::CaseResult &r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << verify_property << ' ' << r.label << '\n';
                failed += r.passed ? 0 : 1;
            }
            out << verify_property << ": " << results.size() - failed << " passed, " << failed << " failed\n";
            return failed == 0 ? exit_ok : exit_verification_failed;
        } else if (*primitives_cmd) {
            const PrimitiveBasis basis = primitive_space(prim_n, PrimitiveOptions{prim_max_grade, threads});
            out << to_string(basis);
        } else if (*egf_cmd) {
            bool all = true;
            for (const EgfCheckRow &row : egf_check(egf_max_n)) {
                out << "n=" << row.n << "\td_n=" << row.expected.get_str()
                    << "\tegf=" << to_string(row.scaled_coefficient) << '\t' << (row.matches ? "MATCH" : "MISMATCH")
                    << '\n';
                all = all && row.matches;
            }
            const bool derivative = egf_derivative_identity(egf_max_n);
            out << "derivative identity\t" << (derivative ? "MATCH" : "MISMATCH") << '\n';
            return all && derivative ? exit_ok : exit_verification_failed;
        }
    } catch (const resource_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace wmat::cli

#endif
