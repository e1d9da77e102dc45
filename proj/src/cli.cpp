#include "hookdg/cli.hpp"

#include "hookdg/verifier.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace hookdg {

namespace {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<int, int> parse_range(const std::string& s, const char* what)
{
    auto dash = s.find('-');
    try {
        size_t used = 0;
        if (dash == std::string::npos) {
            int v = std::stoi(s, &used);
            if (used != s.size())
                throw usage_error("");
            return {v, v};
        }
        std::string a = s.substr(0, dash), b = s.substr(dash + 1);
        int lo = std::stoi(a, &used);
        if (used != a.size())
            throw usage_error("");
        int hi = std::stoi(b, &used);
        if (used != b.size() || hi < lo)
            throw usage_error("");
        return {lo, hi};
    }
    catch (const std::logic_error&) {
        throw usage_error(std::string("bad ") + what + " range '" + s + "' (want N or A-B)");
    }
}

std::string join(const std::vector<size_t>& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// writes to --out atomically, or to the stream
void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f)
            throw usage_error("cannot write " + path);
        f << text;
    }
    std::filesystem::rename(tmp, target);
}

/* resolve */

nlohmann::json complex_json(const complex_descriptor& c)
{
    nlohmann::json j{{"complex", kind_name(c.kind)}, {"n", c.n}, {"d", c.d}, {"ranks", c.ranks()}};
    j["ideal"] = nlohmann::json::array();
    for (const auto& g : c.ideal)
        j["ideal"].push_back(g.str());
    j["generators"] = c.labels;
    j["differentials"] = nlohmann::json::array();
    for (int k = 1; k <= c.length(); ++k) {
        const poly_matrix& m = c.diff[static_cast<size_t>(k)];
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jx = 0; jx < m.cols; ++jx)
                row.push_back(m.at(i, jx).str());
            rows.push_back(row);
        }
        j["differentials"].push_back({{"degree", k}, {"rows", m.rows}, {"cols", m.cols}, {"entries", rows}});
    }
    return j;
}

std::string complex_text(const complex_descriptor& c)
{
    std::ostringstream s;
    s << "complex " << kind_name(c.kind) << " n=" << c.n << " d=" << c.d << "\n";
    s << "ideal";
    for (const auto& g : c.ideal)
        s << " " << g.str();
    s << "\nranks " << join(c.ranks()) << "\n";
    for (int k = 0; k <= c.length(); ++k) {
        s << "F" << k << ":";
        for (const auto& l : c.labels[static_cast<size_t>(k)])
            s << " " << l;
        s << "\n";
    }
    for (int k = 1; k <= c.length(); ++k) {
        const poly_matrix& m = c.diff[static_cast<size_t>(k)];
        std::vector<size_t> width(static_cast<size_t>(m.cols), 1);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j)
                width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], m.at(i, j).str().size());
        s << "d" << k << " (" << m.rows << "x" << m.cols << "):\n";
        for (int i = 0; i < m.rows; ++i) {
            s << "  [";
            for (int j = 0; j < m.cols; ++j) {
                std::string e = m.at(i, j).str();
                s << (j ? "  " : " ") << std::string(width[static_cast<size_t>(j)] - e.size(), ' ') << e;
            }
            s << " ]\n";
        }
    }
    return s.str();
}

std::vector<monomial> parse_ideal(const std::string& text, int n)
{
    std::vector<monomial> gens;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto b = part.find_first_not_of(' '), e = part.find_last_not_of(' ');
        if (b == std::string::npos)
            throw usage_error("empty generator in --ideal");
        monomial m = monomial::parse(std::string_view(part).substr(b, e - b + 1), n);
        if (!m.is_nonnegative() || m.is_identity())
            throw usage_error("ideal generators must be non-unit monomials");
        gens.push_back(m);
    }
    if (gens.empty())
        throw usage_error("--ideal needs at least one generator");
    return gens;
}

/* multiply */

int key_d(complex_kind kind, const tableau& t)
{
    return static_cast<int>(t.row.size()) + (kind == complex_kind::L ? 1 : 0);
}

void validate_factor(const element& e, int n, int d, const char* side)
{
    std::set<tableau> known;
    int deg = -1;
    for (const auto& [t, c] : e.terms()) {
        int k = hdegree(e.kind(), t);
        if (k != deg) {
            deg = k;
            auto b = e.kind() == complex_kind::L ? l_basis(n, d, k) : ek_basis(n, d, k);
            known.insert(b.begin(), b.end());
        }
        if (!known.count(t))
            throw usage_error(std::string("--") + side + ": " + to_text(t) + " is not a basis tableau for n=" +
                              std::to_string(n) + " d=" + std::to_string(d));
        if (!c.is_polynomial())
            throw usage_error(std::string("--") + side + " needs polynomial coefficients");
    }
}

template <class Key>
nlohmann::json element_terms_json(const basic_element<Key>& e)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, k, c] : e.expanded()) {
        std::string key = basic_element<Key>::is_unit(k) ? "1" : to_text(k);
        terms.push_back({{"monomial", m.str()}, {"key", key}, {"coefficient", to_string(c)}});
    }
    return terms;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Minimal free resolutions of powers of the maximal ideal and their DG products", "hookdg"};
    app.require_subcommand(1);

    std::string format = "text", out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "write the output to this file");
    };

    int n = 0, d = 0;
    std::string which, ideal;
    auto* resolve = app.add_subcommand("resolve", "build resolutions and print ranks, generators and differentials");
    resolve->add_option("--n", n, "number of variables");
    resolve->add_option("--d", d, "power of the maximal ideal");
    resolve->add_option("--which", which, "l, ek, ek-classical or both")
        ->check(CLI::IsMember({"l", "ek", "ek-classical", "both"}));
    resolve->add_option("--ideal", ideal, "Borel ideal generators for ek-classical, e.g. \"x1,x2^2\"");
    add_common(resolve);

    std::string left, right;
    auto* multiply = app.add_subcommand("multiply", "multiply two elements");
    multiply->add_option("--which", which, "srinivasan, peeva or peeva-recursive")
        ->required()
        ->check(CLI::IsMember({"srinivasan", "peeva", "peeva-recursive"}));
    multiply->add_option("--left", left, "left factor")->required();
    multiply->add_option("--right", right, "right factor")->required();
    multiply->add_option("--n", n, "number of variables (default: largest entry)");
    multiply->add_option("--d", d, "power of the maximal ideal (default: read off the tableaux)");
    add_common(multiply);

    std::vector<std::string> suites;
    std::string n_range = "1-3", d_range = "1-2";
    int max_degree = 0;
    bool corrupt = false;
    auto* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--suite", suites, "suite name, repeatable (default: all)");
    check->add_option("--n", n_range, "N or A-B");
    check->add_option("--d", d_range, "N or A-B");
    check->add_option("--max-degree", max_degree, "highest internal degree for strands (default d+n+2)");
    check->add_flag("--corrupt", corrupt)->group("");
    add_common(check);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp& e) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const bool json = format == "json";
    try {
        if (resolve->parsed()) {
            if (which.empty())
                which = ideal.empty() ? "both" : "ek-classical";
            if (n < 1)
                throw usage_error("--n must be at least 1");
            std::vector<complex_descriptor> cs;
            if (!ideal.empty()) {
                if (which != "ek-classical")
                    throw usage_error("--ideal only applies to --which ek-classical");
                if (d != 0)
                    throw usage_error("--d does not apply with --ideal");
                std::vector<monomial> gens = minimalize(parse_ideal(ideal, n));
                if (!is_borel(gens))
                    throw usage_error("the ideal is not Borel-fixed");
                cs.push_back(ek_classical_build(gens));
            }
            else {
                if (d < 1)
                    throw usage_error("--d must be at least 1");
                if (which == "l" || which == "both")
                    cs.push_back(l_complex_build(n, d));
                if (which == "ek" || which == "both")
                    cs.push_back(ek_complex_build(n, d));
                if (which == "ek-classical")
                    cs.push_back(ek_classical_build(power_of_maximal_ideal(n, d)));
            }
            std::string text;
            if (json) {
                nlohmann::json j{{"schema", 1}, {"command", "resolve"}, {"complexes", nlohmann::json::array()}};
                for (const auto& c : cs)
                    j["complexes"].push_back(complex_json(c));
                text = j.dump(2) + "\n";
            }
            else
                for (size_t i = 0; i < cs.size(); ++i)
                    text += (i ? "\n" : "") + complex_text(cs[i]);
            emit(text, out_path, out);
            return 0;
        }

        if (multiply->parsed()) {
            bool symbolic = left.find('(') != std::string::npos || right.find('(') != std::string::npos;
            complex_kind kind = which == "srinivasan" ? complex_kind::L : complex_kind::EK;
            if (symbolic && kind == complex_kind::L)
                throw usage_error("symbol input (m; J) applies to the peeva products only");
            // parse once with room to spare to learn the largest index in use
            constexpr int probe = 64;
            auto max_entry = [&](const std::string& txt) {
                int m = 0;
                auto coeffs = [&](const auto& e) {
                    for (const auto& [k, c] : e.terms())
                        for (const auto& [mono, q] : c.terms())
                            if (!mono.is_identity())
                                m = std::max(m, mono.max_index());
                };
                if (symbolic) {
                    symbol_element e = parse_symbol_element(txt, probe);
                    coeffs(e);
                    for (const auto& [sy, c] : e.terms())
                        if (!sy.gen.is_identity())
                            m = std::max(m, sy.gen.max_index());
                }
                else {
                    element e = parse_element(txt, kind, probe);
                    coeffs(e);
                    for (const auto& [t, c] : e.terms())
                        for (int v : t.content())
                            m = std::max(m, v);
                }
                return m;
            };
            int need = std::max({1, max_entry(left), max_entry(right)});
            if (n == 0)
                n = need;
            if (n < need)
                throw usage_error("--n " + std::to_string(n) + " is smaller than an entry of the input");

            std::string result;
            nlohmann::json terms;
            if (symbolic) {
                symbol_element a = parse_symbol_element(left, n), b = parse_symbol_element(right, n);
                int dd = 0;
                for (const auto* e : {&a, &b})
                    for (const auto& [s, c] : e->terms())
                        if (!s.gen.is_identity()) {
                            if (dd && s.gen.degree() != dd)
                                throw usage_error("factors use different powers d");
                            dd = s.gen.degree();
                        }
                if (d == 0)
                    d = dd ? dd : 1;
                if (dd && dd != d)
                    throw usage_error("--d " + std::to_string(d) + " does not match the input");
                for (const auto* e : {&a, &b})
                    for (const auto& [s, c] : e->terms())
                        if (!s.gen.is_identity() && s.J.size() >= static_cast<size_t>(n))
                            throw usage_error("symbol " + to_text(s) + " is out of range");
                symbol_element p(complex_kind::EK_classical, n);
                if (which == "peeva")
                    p = audit_polynomial(peeva_product(a, b, d), "peeva product");
                else
                    p = eta(peeva_product_recursive(eta_inverse(a), eta_inverse(b)));
                result = p.str();
                terms = element_terms_json(p);
            }
            else {
                element a = parse_element(left, kind, n), b = parse_element(right, kind, n);
                int dd = 0;
                for (const auto* e : {&a, &b})
                    for (const auto& [t, c] : e->terms())
                        if (hdegree(kind, t) > 0) {
                            int here = key_d(kind, t);
                            if (dd && here != dd)
                                throw usage_error("factors use different powers d");
                            dd = here;
                        }
                if (d == 0)
                    d = dd ? dd : 1;
                if (dd && dd != d)
                    throw usage_error("--d " + std::to_string(d) + " does not match the input");
                validate_factor(a, n, d, "left");
                validate_factor(b, n, d, "right");
                element p = which == "srinivasan" ? srinivasan_product(a, b)
                            : which == "peeva"    ? peeva_product(a, b)
                                                  : peeva_product_recursive(a, b);
                result = p.str();
                terms = element_terms_json(p);
            }
            std::string text;
            if (json)
                text = nlohmann::json{{"schema", 1},   {"command", "multiply"}, {"product", which}, {"n", n},
                                      {"d", d},        {"left", left},          {"right", right},   {"result", result},
                                      {"terms", terms}}
                           .dump(2) +
                       "\n";
            else
                text = result + "\n";
            emit(text, out_path, out);
            return 0;
        }

        // check
        suite_config cfg;
        cfg.suites = suites.empty() ? suite_names() : suites;
        for (const auto& s : cfg.suites)
            if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                throw usage_error("unknown suite '" + s + "'");
        auto [n0, n1] = parse_range(n_range, "--n");
        auto [d0, d1] = parse_range(d_range, "--d");
        if (n0 < 1 || d0 < 1)
            throw usage_error("--n and --d must be at least 1");
        if (max_degree < 0)
            throw usage_error("--max-degree must be positive");
        for (int a = n0; a <= n1; ++a)
            for (int b = d0; b <= d1; ++b) {
                if (max_degree > 0 && max_degree < b)
                    throw usage_error("--max-degree is below d");
                cfg.grid.emplace_back(a, b);
            }
        cfg.max_degree = max_degree;
        cfg.corrupt = corrupt;
        std::vector<suite_report> reports = run_suite(cfg);
        bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
        std::string text;
        if (json) {
            nlohmann::json j{{"schema", 1}, {"command", "check"}, {"reports", nlohmann::json::array()}, {"pass", all}};
            for (const auto& r : reports)
                j["reports"].push_back(r.to_json());
            text = j.dump(2) + "\n";
        }
        else {
            std::ostringstream s;
            for (const auto& r : reports) {
                char secs[32];
                std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
                s << (r.pass() ? "PASS " : "FAIL ") << r.suite << " n=" << r.params.value("n", 0)
                  << " d=" << r.params.value("d", 0) << " cases=" << r.cases << " failures=" << r.failure_count << " ("
                  << secs << "s)" << (r.vacuous() ? " vacuous" : "") << "\n";
                for (const auto& f : r.failures)
                    s << "    " << f.input << ": " << f.lhs << " != " << f.rhs << "\n";
            }
            s << (all ? "all suites passed\n" : "some suites failed\n");
            text = s.str();
        }
        emit(text, out_path, out);
        return all ? 0 : 1;
    }
    catch (const laurent_leak& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hookdg
