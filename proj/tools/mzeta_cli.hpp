#pragma once

// Command-line front end: stats, dist, verify, zeta, conjecture.
// run() is kept separate from main() so the whole CLI can be driven
// in-process by tests.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mzeta/mzeta.hpp"

namespace mzeta::cli {

enum exit_code : int { ok = 0, identity_failure = 1, usage_error = 2, over_budget = 3 };

using ordered = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Input parsing

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
    if (text.empty()) throw invalid_input(std::string(what) + ": empty list");
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        int v = 0;
        const char* first = field.data();
        const char* last = field.data() + field.size();
        if (!field.empty() && *first == '+') throw invalid_input(std::string(what) + ": malformed entry '" + field + "'");
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (field.empty() || ec != std::errc() || ptr != last)
            throw invalid_input(std::string(what) + ": malformed entry '" + field + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

inline composition parse_composition(const std::string& text) {
    auto parts = parse_int_list(text, "eta");
    for (int p : parts)
        if (p < 1) throw invalid_input("eta: parts must be positive");
    return composition(std::move(parts));
}

/// "4232314141" (one digit per letter) or "4,2,3,...".
inline word parse_word(const std::string& text, const composition& shape) {
    if (text.find(',') != std::string::npos) return word(shape, parse_int_list(text, "word"));
    std::vector<int> letters;
    for (char c : text) {
        if (c < '0' || c > '9') throw invalid_input("word: malformed letter '" + std::string(1, c) + "'");
        letters.push_back(c - '0');
    }
    if (letters.empty()) throw invalid_input("word: empty");
    return word(shape, std::move(letters));
}

inline permutation parse_permutation(const std::string& text) {
    auto v = parse_int_list(text, "perm");
    for (int x : v)
        if (x < 1) throw invalid_input("perm: entries must be positive");
    return permutation(std::move(v));
}

inline rational parse_rational(const std::string& text, const char* what) {
    static const std::regex form("-?[0-9]+(/[0-9]+)?");
    if (!std::regex_match(text, form)) throw invalid_input(std::string(what) + ": malformed rational '" + text + "'");
    const auto slash = text.find('/');
    integer num(text.substr(0, slash));
    integer den = slash == std::string::npos ? integer(1) : integer(text.substr(slash + 1));
    if (den == 0) throw invalid_input(std::string(what) + ": zero denominator");
    return rational(num, den);
}

inline std::uint64_t parse_budget(const std::string& text, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v == 0)
        throw invalid_input(std::string(what) + ": budget must be a positive integer");
    return v;
}

// ---------------------------------------------------------------------------
// Output

/// Ordered key/value report rendered as "key: value" lines or one JSON object.
class record {
public:
    void add(std::string key, ordered value) { fields_.emplace_back(std::move(key), std::move(value)); }

    std::string render(bool json) const {
        if (json) {
            ordered o = ordered::object();
            for (const auto& [k, v] : fields_) o[k] = v;
            return o.dump(2) + "\n";
        }
        std::string s;
        for (const auto& [k, v] : fields_) s += k + ": " + text_of(v) + "\n";
        return s;
    }

private:
    static std::string text_of(const ordered& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
        if (v.is_array()) {
            std::string s = "{";
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k) s += ", ";
                const auto& e = v[k];
                if (e.is_array() && e.size() == 2) s += "(" + e[0].dump() + "," + e[1].dump() + ")";
                else s += text_of(e);
            }
            return s + "}";
        }
        return v.dump();
    }

    std::vector<std::pair<std::string, ordered>> fields_;
};

inline ordered cells_json(const grid_cell_set& cs) {
    ordered a = ordered::array();
    for (const cell& c : cs) a.push_back({c.row, c.col});
    return a;
}

inline ordered ints_json(std::span<const int> xs) { return ordered(std::vector<int>(xs.begin(), xs.end())); }

inline ordered poly_json(const bipoly& p) { return ordered::parse(to_json(p).dump()); }

// ---------------------------------------------------------------------------
// Commands

struct global_options {
    std::optional<std::string> budget;
    std::string format = "text";
    std::optional<std::string> out;
    std::uint64_t resolved_budget = default_budget;

    bool json() const { return format == "json"; }
};

struct stats_options {
    std::optional<std::string> eta, word_text, perm, signed_window;
    std::string type = "B";
    bool verbose = false;
    bool no_den = false;
};

inline record stats_word(const composition& shape, const word& w, bool verbose) {
    record r;
    r.add("eta", shape.to_string());
    r.add("word", w.to_string());
    r.add("des", des(w));
    r.add("maj", maj(w));
    r.add("inv", inv(w.letters()));
    r.add("imv", imv(w.letters()));
    r.add("exc", exc(w));
    r.add("denh", denh(w));
    if (verbose) {
        const auto parts = denh_decomposition(w);
        const auto e = exceeding_subword(w);
        const auto nn = nonexceeding_subword(w);
        r.add("Des", ints_json(descent_set(w)));
        r.add("Exc", ints_json(exc_set(w)));
        r.add("E", detail::join(e, ","));
        r.add("N", detail::join(nn, ","));
        r.add("denh_parts", std::to_string(parts.excedance_sum) + " + " + std::to_string(parts.exceeding_imv) +
                                " + " + std::to_string(parts.nonexceeding_inv));
        r.add("std", standardize(w).to_string());
        r.add("admissible_image", word_to_admissible(w).to_string());
    }
    return r;
}

inline record stats_perm(const composition& shape, const permutation& p, bool verbose, bool no_den) {
    const block_context ctx(shape);
    const bool adm = is_admissible(ctx, p);
    if (!adm && !no_den)
        throw invalid_input("permutation " + p.to_string() + " is not admissible for eta=(" + shape.to_string() +
                            "); den is undefined (pass --no-den for type A statistics only)");
    record r;
    r.add("eta", shape.to_string());
    r.add("perm", p.to_string());
    r.add("admissible", adm);
    r.add("des", des(p));
    r.add("maj", maj(p));
    r.add("inv", inv(p.one_line()));
    r.add("exc", exc(p));
    r.add("denh", denh(p));
    if (adm) {
        const auto d = den_decomposition(ctx, p);
        r.add("den", d.total());
        r.add("iexc", d.iexc);
        if (verbose) {
            const auto [weak, strict] = n_plus_split(ctx, p);
            r.add("Des", ints_json(descent_set(p)));
            r.add("I_sigma", ints_json(i_set(ctx, p)));
            r.add("sum_I_sigma", d.i_sum);
            r.add("|N+|", d.n_plus);
            r.add("|N-|", d.n_minus);
            r.add("|N+[<=]|", weak.size());
            r.add("|N+[>]|", strict.size());
            r.add("N+", cells_json(n_plus_set(ctx, p)));
            r.add("N-", cells_json(n_minus_set(ctx, p)));
            r.add("den_parts", std::to_string(d.i_sum) + " + " + std::to_string(d.n_plus) + " - " +
                                   std::to_string(d.n_minus) + " - " + std::to_string(d.iexc));
            r.add("word_image", admissible_to_word(ctx, p).to_string());
        }
    } else if (verbose) {
        r.add("Des", ints_json(descent_set(p)));
        r.add("eta_descents", ints_json(shape.descent_set()));
    }
    return r;
}

inline record stats_signed(const signed_permutation& s, bool type_d, bool verbose) {
    if (type_d && !s.is_even()) throw invalid_input("window has an odd number of negative entries; not in D_n");
    record r;
    r.add("window", s.to_string());
    r.add("type", type_d ? "D" : "B");
    const auto a = type_a_stats(s);
    const auto b = b_stats(s);
    r.add("des", a.des);
    r.add("maj", a.maj);
    r.add("neg", b.neg);
    r.add("ndes", b.ndes);
    r.add("nmaj", b.nmaj);
    r.add("fdes", b.fdes);
    r.add("fmaj", b.fmaj);
    r.add("excabs", excabs(s));
    r.add("nden", nden(s));
    r.add("nsp", nsp(s));
    if (type_d) {
        const auto d = d_stats(s);
        r.add("dneg", d.dneg);
        r.add("ddes", d.ddes);
        r.add("dmaj", d.dmaj);
        r.add("dexc", d.dexc);
        r.add("dden", d.dden);
    }
    if (verbose) {
        r.add("abs", s.absolute().to_string());
        r.add("Des", ints_json(descent_set(s.window())));
        if (type_d) r.add("DNeg", ints_json(dneg_set(s)));
    }
    return r;
}

inline record cmd_stats(const stats_options& o) {
    const int given = (o.word_text ? 1 : 0) + (o.perm ? 1 : 0) + (o.signed_window ? 1 : 0);
    if (given != 1) throw invalid_input("stats needs exactly one of --word, --perm, --signed");
    if (o.signed_window) {
        if (o.type != "B" && o.type != "D") throw invalid_input("--type must be B or D");
        return stats_signed(signed_permutation(parse_int_list(*o.signed_window, "signed")), o.type == "D", o.verbose);
    }
    if (o.word_text) {
        if (!o.eta) throw invalid_input("--word needs --eta");
        const composition shape = parse_composition(*o.eta);
        return stats_word(shape, parse_word(*o.word_text, shape), o.verbose);
    }
    const permutation p = parse_permutation(*o.perm);
    const composition shape = o.eta ? parse_composition(*o.eta) : composition(std::vector<int>(p.size(), 1));
    if (shape.size() != p.size()) throw invalid_input("permutation size does not match eta");
    return stats_perm(shape, p, o.verbose, o.no_den);
}

struct dist_options {
    std::string domain_name;
    std::optional<std::string> eta;
    std::optional<int> n;
    std::string pair;
};

inline domain parse_domain(const dist_options& o) {
    const auto& d = o.domain_name;
    if (d == "words" || d == "admissible") {
        if (!o.eta || o.n) throw invalid_input("--domain " + d + " needs --eta (and not --n)");
        auto c = parse_composition(*o.eta);
        return d == "words" ? domain::words(std::move(c)) : domain::admissible(std::move(c));
    }
    if (d == "B" || d == "D") {
        if (!o.n || o.eta) throw invalid_input("--domain " + d + " needs --n (and not --eta)");
        if (*o.n < 1 || *o.n > max_size) throw invalid_input("--n out of range");
        return d == "B" ? domain::hyperoctahedral(*o.n) : domain::even_signed(*o.n);
    }
    throw invalid_input("unknown domain '" + d + "' (words, admissible, B, D)");
}

inline std::string cmd_dist(const dist_options& o, const global_options& g) {
    const domain dom = parse_domain(o);
    const auto comma = o.pair.find(',');
    if (comma == std::string::npos || o.pair.find(',', comma + 1) != std::string::npos)
        throw invalid_input("--pair must be two statistics, e.g. denh,exc");
    const statistic s1 = parse_statistic(o.pair.substr(0, comma));
    const statistic s2 = parse_statistic(o.pair.substr(comma + 1));
    const bipoly p = joint_distribution(dom, s1, s2, g.resolved_budget);
    if (g.json()) return to_json(p).dump() + "\n";
    return p.to_string() + "\n";
}

struct verify_options {
    std::string check;
    std::optional<std::string> eta;
    std::optional<int> n;
    std::optional<int> all_up_to;
};

inline void add_report(record& r, const check_report& rep) {
    r.add("subject", rep.subject);
    r.add("objects", rep.objects);
    for (const auto& [k, v] : rep.details) r.add(k, v);
}

inline void add_failure(record& r, const counterexample& c) {
    r.add("counterexample", c.object);
    r.add("identity", c.identity);
    r.add("lhs", c.lhs);
    r.add("rhs", c.rhs);
}

inline std::pair<record, bool> cmd_verify(const verify_options& o, const global_options& g) {
    const check_kind kind = parse_check(o.check);
    const int given = (o.eta ? 1 : 0) + (o.n ? 1 : 0) + (o.all_up_to ? 1 : 0);
    if (given != 1) throw invalid_input("verify needs exactly one of --eta, --n, --all-eta-up-to");
    record r;
    r.add("check", std::string(to_string(kind)));
    if (o.all_up_to) {
        const auto sw = run_sweep(kind, *o.all_up_to, g.resolved_budget);
        r.add("sweep", takes_composition(kind) ? "all compositions of n <= " + std::to_string(sw.up_to)
                                               : "all n <= " + std::to_string(sw.up_to));
        r.add("subjects", sw.subjects);
        r.add("objects", sw.objects);
        r.add("counterexamples", sw.passed ? 0 : 1);
        if (sw.first_failure) {
            r.add("failing_subject", sw.first_failure->subject);
            add_failure(r, *sw.first_failure->failure);
        }
        r.add("status", sw.passed ? "pass" : "fail");
        return {std::move(r), sw.passed};
    }
    check_report rep;
    if (o.eta) {
        if (!takes_composition(kind)) throw invalid_input(o.check + " takes --n, not --eta");
        rep = run_check(kind, parse_composition(*o.eta), g.resolved_budget);
    } else {
        if (takes_composition(kind)) throw invalid_input(o.check + " takes --eta, not --n");
        if (*o.n < 1 || *o.n > max_size) throw invalid_input("--n out of range");
        rep = run_check(kind, *o.n, g.resolved_budget);
    }
    add_report(r, rep);
    if (rep.failure) add_failure(r, *rep.failure);
    r.add("status", rep.passed ? "pass" : "fail");
    return {std::move(r), rep.passed};
}

struct zeta_options {
    std::string eta;
    std::optional<std::string> q, t;
    std::optional<int> series_terms;
    bool hadamard = false;
};

inline std::string cmd_zeta(const zeta_options& o, const global_options& g) {
    if (o.q.has_value() != o.t.has_value()) throw invalid_input("--q and --t must be given together");
    if (!o.q && !o.series_terms) throw invalid_input("zeta needs --q/--t or --series-terms");
    if (o.series_terms && (*o.series_terms < 1 || *o.series_terms > 4 * max_size))
        throw invalid_input("--series-terms must be positive");
    if (o.hadamard && !o.series_terms) throw invalid_input("--hadamard-series needs --series-terms");
    const composition shape = parse_composition(o.eta);
    const rational_w w = rational_w::of(shape, g.resolved_budget);
    record r;
    r.add("eta", shape.to_string());
    if (o.q) {
        const rational q = parse_rational(*o.q, "--q");
        const rational t = parse_rational(*o.t, "--t");
        r.add("q", q.str());
        r.add("t", t.str());
        r.add("value", w.evaluate(q, t).str());
    }
    if (o.series_terms) {
        const y_series s = o.hadamard ? hadamard_series(shape, *o.series_terms) : w.series(*o.series_terms);
        r.add("series", o.hadamard ? "sum_k prod_i [eta_i+k choose k]_x y^k" : "W_eta(x, y) expanded in y");
        if (g.json()) {
            ordered coeffs = ordered::array();
            for (const auto& c : s) coeffs.push_back(poly_json(bipoly::from_x(c)));
            r.add("coefficients", std::move(coeffs));
        } else {
            for (std::size_t k = 0; k < s.size(); ++k) r.add("y^" + std::to_string(k), s[k].to_string());
        }
    }
    return r.render(g.json());
}

struct conjecture_options {
    std::optional<std::string> eta, rect;
    std::optional<int> max_a, max_b, max_d;
};

inline std::pair<record, bool> cmd_conjecture(const conjecture_options& o, const global_options& g) {
    if (o.eta.has_value() == o.rect.has_value()) throw invalid_input("conjecture needs exactly one of --eta, --rect");
    composition shape = [&] {
        if (o.eta) return parse_composition(*o.eta);
        const auto rm = parse_int_list(*o.rect, "rect");
        if (rm.size() != 2 || rm[0] < 1 || rm[1] < 1) throw invalid_input("--rect takes r,m with r, m >= 1");
        if (static_cast<long long>(rm[0]) * rm[1] > max_size) throw invalid_input("--rect too large");
        return composition::rectangle(rm[0], rm[1]);
    }();
    scan_bounds b = scan_bounds::defaults_for(shape.size());
    if (o.max_a) b.max_a = *o.max_a;
    if (o.max_b) b.max_b = *o.max_b;
    if (o.max_d) b.max_d = *o.max_d;
    if (b.max_a < 0 || b.max_b < 1 || b.max_d < 1) throw invalid_input("scan bounds must be positive");
    const auto rep = make_conjecture_report(shape, b, g.resolved_budget);

    record r;
    r.add("eta", shape.to_string());
    r.add("rectangle", rep.rectangle);
    if (rep.rectangle) {
        r.add("r", rep.rows);
        r.add("m", rep.width);
    }
    r.add("r_even_m_odd", rep.qualifies);
    r.add("numerator", g.json() ? poly_json(rep.numerator) : ordered(rep.numerator.to_string()));
    if (rep.probe_exponent) {
        const bipoly probe = bipoly::constant(1) + bipoly::term(*rep.probe_exponent, 1);
        r.add("probe", probe.to_string());
        r.add("divisible", rep.divisible);
        if (rep.residual) r.add("residual", g.json() ? poly_json(*rep.residual) : ordered(rep.residual->to_string()));
        if (rep.divisible) r.add("factor", probe.to_string());
    } else {
        r.add("probe", "none (n odd)");
        r.add("divisible", false);
    }
    r.add("scan_bounds", "max_a=" + std::to_string(b.max_a) + ", max_b=" + std::to_string(b.max_b) +
                             ", max_d=" + std::to_string(b.max_d));
    r.add("scanned", rep.divisible ? "residual" : "numerator");
    if (rep.factors.empty()) {
        r.add("unitary_factors", "none found within bounds");
    } else {
        ordered fs = ordered::array();
        for (const auto& f : rep.factors)
            fs.push_back("Phi_" + std::to_string(f.d) + "(x^" + std::to_string(f.a) + "*y^" + std::to_string(f.b) +
                         ") = " + f.factor.to_string());
        r.add("unitary_factors", std::move(fs));
    }
    const bool consistent = rep.verdict == conjecture_verdict::consistent;
    r.add("verdict", consistent ? "CONSISTENT" : "COUNTEREXAMPLE");
    return {std::move(r), consistent};
}

// ---------------------------------------------------------------------------
// Entry point

inline std::uint64_t resolve_budget(const global_options& g) {
    if (g.budget) return parse_budget(*g.budget, "--budget");
    if (const char* env = std::getenv("MZETA_BUDGET"); env && *env) return parse_budget(env, "MZETA_BUDGET");
    return default_budget;
}

/// Run the CLI on `args` (without the program name). Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact permutation statistics, genus zeta numerators and identity checks", "mzeta"};
    app.require_subcommand(1);
    app.fallthrough();
    global_options g;
    app.add_option("--budget", g.budget, "Maximum objects per enumeration (default 10000000, or MZETA_BUDGET)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out, "Write output to this file instead of standard output");

    stats_options so;
    auto* stats = app.add_subcommand("stats", "All statistics of one word, permutation or signed permutation");
    stats->add_option("--eta", so.eta, "Composition, e.g. 3,2,2,3");
    stats->add_option("--word", so.word_text, "Multiset permutation, e.g. 4232314141 or 4,2,3,...");
    stats->add_option("--perm", so.perm, "Permutation in one-line form, comma separated");
    stats->add_option("--signed", so.signed_window, "Signed permutation window, e.g. -2,1");
    stats->add_option("--type", so.type, "B or D (with --signed)");
    stats->add_flag("--verbose", so.verbose, "Also print intermediate sets");
    stats->add_flag("--no-den", so.no_den, "Allow non-admissible --perm; skip den");

    dist_options dopt;
    auto* dist = app.add_subcommand("dist", "Joint distribution of two statistics as a polynomial in x, y");
    dist->add_option("--domain", dopt.domain_name, "words | admissible | B | D")->required();
    dist->add_option("--eta", dopt.eta, "Composition (words, admissible)");
    dist->add_option("--n", dopt.n, "Size (B, D)");
    dist->add_option("--pair", dopt.pair, "Two statistics, e.g. denh,exc")->required();

    verify_options vo;
    auto* verify = app.add_subcommand("verify", "Exhaustively check an identity");
    verify->add_option("--check", vo.check, "euler-mahonian-a | euler-mahonian-den | lemma42 | lemma43 | "
                                            "b-equidistribution | d-equidistribution | hadamard | reciprocity")
        ->required();
    verify->add_option("--eta", vo.eta, "Composition");
    verify->add_option("--n", vo.n, "Size (signed checks)");
    verify->add_option("--all-eta-up-to", vo.all_up_to, "Sweep every composition (or size) up to N");

    zeta_options zo;
    auto* zeta = app.add_subcommand("zeta", "Evaluate or expand W_eta(x, y)");
    zeta->add_option("--eta", zo.eta, "Composition")->required();
    zeta->add_option("--q", zo.q, "Exact rational x value, e.g. 2");
    zeta->add_option("--t", zo.t, "Exact rational y value, e.g. 1/8");
    zeta->add_option("--series-terms", zo.series_terms, "Print the first K coefficients of the y-expansion");
    zeta->add_flag("--hadamard-series", zo.hadamard,
                   "Expand sum_k prod_i [eta_i+k choose k]_x y^k = W_eta / (1 - x^n y) instead");

    conjecture_options co;
    auto* conj = app.add_subcommand("conjecture", "Unitary-factor report for the numerator of W_eta");
    conj->add_option("--eta", co.eta, "Composition");
    conj->add_option("--rect", co.rect, "Rectangle r,m, i.e. eta = (m^r)");
    conj->add_option("--max-a", co.max_a, "Largest x exponent of candidate monomials (default n)");
    conj->add_option("--max-b", co.max_b, "Largest y exponent of candidate monomials (default n)");
    conj->add_option("--max-d", co.max_d, "Largest cyclotomic index (default 2n^2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "mzeta: " << e.what() << "\n";
        return usage_error;
    }

    try {
        g.resolved_budget = resolve_budget(g);
        std::string text;
        int code = ok;
        if (stats->parsed()) {
            text = cmd_stats(so).render(g.json());
        } else if (dist->parsed()) {
            text = cmd_dist(dopt, g);
        } else if (verify->parsed()) {
            auto [r, passed] = cmd_verify(vo, g);
            text = r.render(g.json());
            code = passed ? ok : identity_failure;
        } else if (zeta->parsed()) {
            text = cmd_zeta(zo, g);
        } else if (conj->parsed()) {
            auto [r, consistent] = cmd_conjecture(co, g);
            text = r.render(g.json());
            code = consistent ? ok : identity_failure;
        }
        if (g.out) {
            std::ofstream f(*g.out, std::ios::binary);
            if (!f) throw invalid_input("cannot open --out file '" + *g.out + "'");
            f << text;
            if (!f) throw invalid_input("cannot write --out file '" + *g.out + "'");
        } else {
            out << text;
        }
        return code;
    } catch (const invalid_input& e) {
        err << "mzeta: error: " << e.what() << "\n";
        return usage_error;
    } catch (const budget_exceeded& e) {
        err << "mzeta: budget exceeded: " << e.what() << "\n";
        return over_budget;
    } catch (const consistency_error& e) {
        err << "mzeta: consistency failure: " << e.what() << "\n";
        return identity_failure;
    }
}

} // namespace mzeta::cli
