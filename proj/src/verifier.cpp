#include "hookdg/verifier.hpp"

#include <chrono>
#include <set>

namespace hookdg {

namespace {

constexpr size_t kept_failures = 20;

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

element unit_of(complex_kind kind, int n, const tableau& t)
{
    return element::of(kind, n, t);
}

// runs one case, turning a Laurent leak into a recorded failure
template <class F>
void guarded(suite_report& r, const std::string& input, F&& body)
{
    ++r.cases;
    try {
        body();
    }
    catch (const laurent_leak& e) {
        r.fail(input, "laurent leak", e.what());
    }
}

}  // namespace

void suite_report::fail(std::string input, std::string lhs, std::string rhs)
{
    ++failure_count;
    if (failures.size() < kept_failures)
        failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
}

void suite_report::merge(const suite_report& o)
{
    cases += o.cases;
    failure_count += o.failure_count;
    for (const auto& f : o.failures)
        if (failures.size() < kept_failures)
            failures.push_back(f);
    seconds += o.seconds;
}

nlohmann::json suite_report::to_json() const
{
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : failures)
        f.push_back({{"input", x.input}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    return {{"suite", suite},         {"params", params}, {"cases", cases},  {"failure_count", failure_count},
            {"failures", f},          {"pass", pass()},   {"vacuous", vacuous()}, {"seconds", seconds}};
}

/* algebras */

algebra srinivasan_algebra(int n, int d)
{
    algebra a{"srinivasan", complex_kind::L, n, d, {}, srinivasan_product, diff_l};
    for (int k = 0; k <= n; ++k)
        a.basis.push_back(l_basis(n, d, k));
    return a;
}

algebra srinivasan_printed_algebra(int n, int d)
{
    algebra a = srinivasan_algebra(n, d);
    a.name = "srinivasan-printed";
    a.mul = srinivasan_product_printed;
    return a;
}

algebra peeva_algebra(int n, int d)
{
    algebra a{"peeva", complex_kind::EK, n, d, {}, [](const element& x, const element& y) { return peeva_product(x, y); },
              diff_ek};
    for (int k = 0; k <= n; ++k)
        a.basis.push_back(ek_basis(n, d, k));
    return a;
}

algebra peeva_recursive_algebra(int n, int d)
{
    algebra a = peeva_algebra(n, d);
    a.name = "peeva-recursive";
    a.mul = peeva_product_recursive;
    return a;
}

/* corruption */

void corrupt_matrix(complex_descriptor& c)
{
    if (c.length() < 1)
        return;
    poly_matrix& m = c.diff[static_cast<size_t>(std::min(2, c.length()))];
    for (int i = 0; i < m.rows; ++i)
        if (!m.at(i, 0).is_zero()) {
            m.at(i, 0) = -m.at(i, 0);
            return;
        }
}

void corrupt_product(algebra& a)
{
    if (a.basis.size() < 3)
        return;
    const auto& deg1 = a.basis[1];
    for (size_t i = 0; i < deg1.size(); ++i)
        for (size_t j = i + 1; j < deg1.size(); ++j) {
            element p = a.mul(unit_of(a.kind, a.n, deg1[i]), unit_of(a.kind, a.n, deg1[j]));
            if (p.is_zero())
                continue;
            tableau v1 = deg1[i], v2 = deg1[j];
            product_fn base = a.mul;
            complex_kind kind = a.kind;
            int n = a.n;
            a.mul = [=](const element& x, const element& y) {
                element r(kind, n);
                for (const auto& [t1, c1] : x.terms())
                    for (const auto& [t2, c2] : y.terms()) {
                        element q = base(unit_of(kind, n, t1), unit_of(kind, n, t2));
                        if (t1 == v1 && t2 == v2)
                            q = -q;
                        r += q * (c1 * c2);
                    }
                return r;
            };
            a.name += " (corrupted)";
            return;
        }
}

diff_fn corrupt_diff(diff_fn f, const tableau& victim)
{
    return [f = std::move(f), victim](const element& e) {
        element r(e.kind(), e.nvars());
        for (const auto& [t, c] : e.terms()) {
            element img = f(element::of(e.kind(), e.nvars(), t));
            if (t == victim && !img.is_zero()) {
                auto first = *img.terms().begin();
                img.add(first.first, first.second * rational(-2));
            }
            r += img * c;
        }
        return r;
    };
}

/* complexes */

suite_report check_d_squared(const complex_descriptor& c)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "d2";
    r.params = {{"complex", kind_name(c.kind)}, {"n", c.n}, {"d", c.d}};
    for (int k = 1; k <= c.length(); ++k) {
        ++r.cases;
        const poly_matrix& m = c.diff[static_cast<size_t>(k)];
        if (m.rows != static_cast<int>(c.labels[static_cast<size_t>(k - 1)].size()) ||
            m.cols != static_cast<int>(c.labels[static_cast<size_t>(k)].size()))
            r.fail("degree " + std::to_string(k), "matrix shape", "basis sizes");
        for (const auto& p : m.a)
            if (p.size() == 1 && p.terms().begin()->first.is_identity()) {
                r.fail("degree " + std::to_string(k), "unit entry " + p.str(), "entries in the maximal ideal");
                break;
            }
        if (k >= 2) {
            poly_matrix comp = c.diff[static_cast<size_t>(k - 1)] * m;
            if (!is_zero(comp))
                for (int j = 0; j < comp.cols; ++j)
                    for (int i = 0; i < comp.rows; ++i)
                        if (!comp.at(i, j).is_zero()) {
                            r.fail("junction " + std::to_string(k) + " at " + c.labels[static_cast<size_t>(k)][static_cast<size_t>(j)],
                                   comp.at(i, j).str(), "0");
                            j = comp.cols;
                            break;
                        }
        }
    }
    r.seconds = since(t0);
    return r;
}

namespace {

struct scalar_entry {
    int i, j;
    rational c;
};

// exponent vectors of total degree e in n variables
void exponents(int n, int e, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(e);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = e; a >= 0; --a) {
        cur.push_back(a);
        exponents(n, e - a, cur, out);
        cur.pop_back();
    }
}

struct strand_engine {
    const complex_descriptor& c;
    std::vector<std::vector<scalar_entry>> entries;  // per degree, fine-graded scalars
    std::vector<std::string> inhomogeneous;

    explicit strand_engine(const complex_descriptor& cx) : c(cx), entries(static_cast<size_t>(cx.length()) + 1)
    {
        for (int k = 1; k <= c.length(); ++k) {
            const poly_matrix& m = c.diff[static_cast<size_t>(k)];
            for (int i = 0; i < m.rows; ++i)
                for (int j = 0; j < m.cols; ++j) {
                    const polynomial& p = m.at(i, j);
                    if (p.is_zero())
                        continue;
                    monomial want = c.contents[static_cast<size_t>(k)][static_cast<size_t>(j)] /
                                    c.contents[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
                    auto it = p.terms().find(want);
                    if (p.size() != 1 || it == p.terms().end()) {
                        inhomogeneous.push_back(std::to_string(k) + ":" + std::to_string(i) + "," + std::to_string(j));
                        continue;
                    }
                    entries[static_cast<size_t>(k)].push_back({i, j, it->second});
                }
        }
    }

    std::vector<int> gens_below(int k, const monomial& alpha) const
    {
        std::vector<int> out;
        const auto& cs = c.contents[static_cast<size_t>(k)];
        for (size_t j = 0; j < cs.size(); ++j)
            if (cs[j].divides(alpha))
                out.push_back(static_cast<int>(j));
        return out;
    }

    qmatrix strand_matrix(int k, const std::vector<int>& rows, const std::vector<int>& cols) const
    {
        std::vector<int> ri(c.labels[static_cast<size_t>(k - 1)].size(), -1), ci(c.labels[static_cast<size_t>(k)].size(), -1);
        for (size_t a = 0; a < rows.size(); ++a)
            ri[static_cast<size_t>(rows[a])] = static_cast<int>(a);
        for (size_t b = 0; b < cols.size(); ++b)
            ci[static_cast<size_t>(cols[b])] = static_cast<int>(b);
        qmatrix m = qmatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (const auto& x : entries[static_cast<size_t>(k)]) {
            int a = ri[static_cast<size_t>(x.i)], b = ci[static_cast<size_t>(x.j)];
            if (a >= 0 && b >= 0)
                m(a, b) = x.c;
        }
        return m;
    }
};

}  // namespace

std::vector<size_t> strand_dimensions(const complex_descriptor& c, int e)
{
    std::vector<size_t> dims(static_cast<size_t>(c.length()) + 1, 0);
    for (int k = 0; k <= c.length(); ++k)
        for (const auto& g : c.contents[static_cast<size_t>(k)]) {
            int free = e - g.degree();
            if (free >= 0)
                dims[static_cast<size_t>(k)] += binomial(free + c.n - 1, c.n - 1);
        }
    return dims;
}

suite_report strand_exactness(const complex_descriptor& c, int max_e)
{
    if (max_e < c.d)
        throw std::invalid_argument("strand bound below the generator degree d");
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "strand";
    r.params = {{"complex", kind_name(c.kind)}, {"n", c.n}, {"d", c.d}, {"max_internal_degree", max_e}};
    strand_engine se(c);
    for (const auto& where : se.inhomogeneous)
        r.fail("entry " + where, "not multigraded", "monomial entry");
    const int top = c.length();
    for (int e = 0; e <= max_e; ++e) {
        std::vector<std::vector<int>> alphas;
        std::vector<int> cur;
        exponents(c.n, e, cur, alphas);
        size_t bad_before = r.failure_count;
        for (const auto& av : alphas) {
            monomial alpha(av);
            std::vector<std::vector<int>> gens;
            for (int k = 0; k <= top; ++k)
                gens.push_back(se.gens_below(k, alpha));
            std::vector<qmatrix> mats(static_cast<size_t>(top) + 2);
            std::vector<size_t> rank(static_cast<size_t>(top) + 2, 0);
            for (int k = 1; k <= top; ++k) {
                mats[static_cast<size_t>(k)] = se.strand_matrix(k, gens[static_cast<size_t>(k - 1)], gens[static_cast<size_t>(k)]);
                rank[static_cast<size_t>(k)] = exact_rank(mats[static_cast<size_t>(k)]);
            }
            std::string where = "e=" + std::to_string(e) + " alpha=" + alpha.str();
            for (int k = 1; k < top; ++k) {
                ++r.cases;
                const qmatrix& a = mats[static_cast<size_t>(k)];
                const qmatrix& b = mats[static_cast<size_t>(k + 1)];
                if (a.cols() > 0 && b.cols() > 0 && a.rows() > 0 && !(a * b).isZero(rational(0)))
                    r.fail(where + " degree " + std::to_string(k), "d*d != 0", "0");
            }
            for (int k = 1; k <= top; ++k) {
                ++r.cases;
                size_t dim = gens[static_cast<size_t>(k)].size();
                size_t kernel = dim - rank[static_cast<size_t>(k)];
                if (kernel != rank[static_cast<size_t>(k + 1)])
                    r.fail(where + " degree " + std::to_string(k), "kernel " + std::to_string(kernel),
                           "image " + std::to_string(rank[static_cast<size_t>(k + 1)]));
            }
            ++r.cases;
            size_t coker = gens[0].size() - rank[1];
            size_t want = in_ideal(alpha, c.ideal) ? 0 : 1;
            if (coker != want)
                r.fail(where + " degree 0", "cokernel " + std::to_string(coker), std::to_string(want));
        }
        (void)bad_before;
    }
    r.seconds = since(t0);
    return r;
}

/* DG axioms */

suite_report check_leibniz(const algebra& a)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "leibniz";
    r.params = {{"product", a.name}, {"n", a.n}, {"d", a.d}};
    for (int p = 1; p <= a.n; ++p)
        for (int q = 1; p + q <= a.n; ++q)
            for (const auto& t1 : a.basis[static_cast<size_t>(p)])
                for (const auto& t2 : a.basis[static_cast<size_t>(q)]) {
                    element x = unit_of(a.kind, a.n, t1), y = unit_of(a.kind, a.n, t2);
                    guarded(r, to_text(t1) + " * " + to_text(t2), [&] {
                        element xy = a.mul(x, y);
                        element lhs = xy.is_zero() ? element(a.kind, a.n) : a.diff(xy);
                        element rhs = a.mul(a.diff(x), y) + a.mul(x, a.diff(y)) * rational(p % 2 ? -1 : 1);
                        if (!(lhs == rhs))
                            r.fail(to_text(t1) + " * " + to_text(t2), lhs.str(), rhs.str());
                    });
                }
    r.seconds = since(t0);
    return r;
}

suite_report check_comm_assoc(const algebra& a, axiom mode)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = mode == axiom::commutativity ? "comm" : mode == axiom::odd_squares ? "odd" : "assoc";
    r.params = {{"product", a.name}, {"n", a.n}, {"d", a.d}};
    auto E = [&](const tableau& t) { return unit_of(a.kind, a.n, t); };
    const int n = a.n;
    if (mode == axiom::commutativity) {
        for (int p = 1; p <= n; ++p)
            for (int q = p; p + q <= n; ++q)
                for (const auto& t1 : a.basis[static_cast<size_t>(p)])
                    for (const auto& t2 : a.basis[static_cast<size_t>(q)]) {
                        std::string in = to_text(t1) + " * " + to_text(t2);
                        guarded(r, in, [&] {
                            element lhs = a.mul(E(t1), E(t2));
                            element rhs = a.mul(E(t2), E(t1)) * rational((p * q) % 2 ? -1 : 1);
                            if (!(lhs == rhs))
                                r.fail(in, lhs.str(), rhs.str());
                        });
                    }
    }
    else if (mode == axiom::odd_squares) {
        // squares of basis elements and of sums of two basis elements of one odd degree
        for (int p = 1; 2 * p <= n; p += 2) {
            const auto& b = a.basis[static_cast<size_t>(p)];
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i; j < b.size(); ++j) {
                    element x = i == j ? E(b[i]) : E(b[i]) + E(b[j]);
                    std::string in = i == j ? to_text(b[i]) : "(" + to_text(b[i]) + " + " + to_text(b[j]) + ")";
                    guarded(r, in + "^2", [&] {
                        element sq = a.mul(x, x);
                        if (!sq.is_zero())
                            r.fail(in + "^2", sq.str(), "0");
                    });
                }
        }
    }
    else {
        // the unit takes part so that short complexes still have triples
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q)
                for (int s = 0; p + q + s <= n; ++s)
                    for (const auto& t1 : a.basis[static_cast<size_t>(p)])
                        for (const auto& t2 : a.basis[static_cast<size_t>(q)])
                            for (const auto& t3 : a.basis[static_cast<size_t>(s)]) {
                                std::string in = to_text(t1) + " * " + to_text(t2) + " * " + to_text(t3);
                                guarded(r, in, [&] {
                                    element lhs = a.mul(a.mul(E(t1), E(t2)), E(t3));
                                    element rhs = a.mul(E(t1), a.mul(E(t2), E(t3)));
                                    if (!(lhs == rhs))
                                        r.fail(in, lhs.str(), rhs.str());
                                });
                            }
    }
    r.seconds = since(t0);
    return r;
}

/* the two comparison maps */

suite_report check_eta(int n, int d, bool corrupt)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "eta";
    r.params = {{"n", n}, {"d", d}};
    std::vector<monomial> gens = power_of_maximal_ideal(n, d);
    std::function<symbol_element(const symbol_element&)> dcl = [&gens](const symbol_element& e) {
        return diff_classical(e, gens);
    };
    if (corrupt && n >= 2) {
        ek_symbol victim = ek_symbols(gens, 2).front();
        auto base = dcl;
        dcl = [base, victim](const symbol_element& e) {
            symbol_element out(complex_kind::EK_classical, e.nvars());
            for (const auto& [s, c] : e.terms()) {
                symbol_element img = base(symbol_element::of(complex_kind::EK_classical, e.nvars(), s));
                if (s == victim && !img.is_zero()) {
                    auto first = *img.terms().begin();
                    img.add(first.first, first.second * rational(-2));
                }
                out += img * c;
            }
            return out;
        };
    }
    for (int k = 0; k <= n; ++k) {
        ++r.cases;
        std::vector<tableau> eb = ek_basis(n, d, k);
        std::vector<ek_symbol> cb = ek_symbols(gens, k);
        std::set<std::pair<std::vector<int>, std::vector<int>>> image, target;
        for (const auto& t : eb) {
            symbol_element img = eta(element::of(complex_kind::EK, n, t));
            for (const auto& term : img.terms())
                image.insert({term.first.gen.exponents(), term.first.J});
        }
        for (const auto& s : cb)
            target.insert({s.gen.exponents(), s.J});
        if (image != target || eb.size() != cb.size())
            r.fail("degree " + std::to_string(k), std::to_string(image.size()) + " images",
                   std::to_string(cb.size()) + " symbols");
        if (k == 0)
            continue;
        for (const auto& t : eb) {
            ++r.cases;
            element e = element::of(complex_kind::EK, n, t);
            symbol_element lhs = eta(diff_ek(e));
            symbol_element rhs = dcl(eta(e));
            if (!(lhs == rhs))
                r.fail(to_text(t), lhs.str(), rhs.str());
        }
    }
    r.seconds = since(t0);
    return r;
}

suite_report check_phi(int n, int d, bool corrupt)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "phi";
    phi_build b = build_phi(n, d);
    r.params = {{"n", n},
                {"d", d},
                {"sign", b.display_verified ? "display" : b.alternate_verified ? "alternate" : "none"}};
    diff_fn dl = diff_l;
    if (corrupt && n >= 2)
        dl = corrupt_diff(dl, l_basis(n, d, 2).front());
    for (int k = 1; k <= n; ++k)
        for (const auto& t : ek_basis(n, d, k)) {
            ++r.cases;
            element e = element::of(complex_kind::EK, n, t);
            element lhs = phi(diff_ek(e), b.map.sign);
            element rhs = dl(phi(e, b.map.sign));
            if (!(lhs == rhs))
                r.fail("chain map at " + to_text(t), lhs.str(), rhs.str());
        }
    for (int k = 0; k <= n; ++k) {
        ++r.cases;
        const qmatrix& m = b.map.degree[static_cast<size_t>(k)];
        std::string where = "degree " + std::to_string(k);
        if (m.rows() != m.cols()) {
            r.fail(where, "shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()), "square");
            continue;
        }
        rational det = exact_determinant(m);
        if (det != 1 && det != -1)
            r.fail(where, "determinant " + to_string(det), "+1 or -1");
        else {
            qmatrix inv = exact_inverse(m);
            if (!is_integral(inv))
                r.fail(where, "inverse has a denominator", "integral inverse");
            if (!(m * inv).isIdentity(rational(0)))
                r.fail(where, "phi * phi^-1 != 1", "identity");
        }
    }
    r.seconds = since(t0);
    return r;
}

suite_report verify_algebra_morphism(int n, int d, bool corrupt)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "iso";
    r.params = {{"n", n}, {"d", d}};
    algebra src = peeva_algebra(n, d);
    algebra tgt = srinivasan_algebra(n, d);
    if (corrupt)
        corrupt_product(tgt);
    phi_sign sign = build_phi(n, d).map.sign;
    // every ordered pair; past the length of the complex both sides must vanish
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            for (const auto& t1 : src.basis[static_cast<size_t>(p)])
                for (const auto& t2 : src.basis[static_cast<size_t>(q)]) {
                    std::string in = to_text(t1) + " * " + to_text(t2);
                    guarded(r, in, [&] {
                        element x = unit_of(complex_kind::EK, n, t1), y = unit_of(complex_kind::EK, n, t2);
                        element lhs = phi(src.mul(x, y), sign);
                        element rhs = tgt.mul(phi(x, sign), phi(y, sign));
                        if (!(lhs == rhs))
                            r.fail(in, lhs.str(), rhs.str());
                    });
                }
    r.seconds = since(t0);
    return r;
}

suite_report check_product_forms(int n, int d, bool corrupt)
{
    auto t0 = clock_type::now();
    suite_report r;
    r.suite = "forms";
    r.params = {{"n", n}, {"d", d}};
    algebra five = peeva_algebra(n, d);
    algebra rec = peeva_recursive_algebra(n, d);
    if (corrupt)
        corrupt_product(rec);
    for (int k = 1; 1 + k <= n; ++k)
        for (const auto& t1 : five.basis[1])
            for (const auto& t2 : five.basis[static_cast<size_t>(k)]) {
                std::string in = to_text(t1) + " * " + to_text(t2);
                guarded(r, in, [&] {
                    element x = unit_of(complex_kind::EK, n, t1), y = unit_of(complex_kind::EK, n, t2);
                    element lhs = five.mul(x, y);
                    element rhs = rec.mul(x, y);
                    if (!(lhs == rhs))
                        r.fail(in, lhs.str(), rhs.str());
                });
            }
    r.seconds = since(t0);
    return r;
}

/* driver */

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"d2",  "strand", "leibniz", "comm", "odd",
                                                "assoc", "eta",  "phi",     "iso",  "forms"};
    return names;
}

namespace {

std::vector<complex_descriptor> all_complexes(int n, int d, bool corrupt)
{
    std::vector<complex_descriptor> v{l_complex_build(n, d), ek_complex_build(n, d),
                                      ek_classical_build(power_of_maximal_ideal(n, d))};
    if (corrupt)
        for (auto& c : v)
            corrupt_matrix(c);
    return v;
}

std::vector<algebra> all_algebras(int n, int d, bool corrupt)
{
    std::vector<algebra> v{srinivasan_algebra(n, d), peeva_algebra(n, d), peeva_recursive_algebra(n, d)};
    if (corrupt)
        for (auto& a : v)
            corrupt_product(a);
    return v;
}

suite_report combine(const std::string& name, int n, int d, const std::vector<suite_report>& parts)
{
    suite_report r;
    r.suite = name;
    r.params = {{"n", n}, {"d", d}, {"parts", nlohmann::json::array()}};
    for (const auto& p : parts) {
        r.merge(p);
        r.params["parts"].push_back(p.params);
    }
    return r;
}

}  // namespace

std::vector<suite_report> run_suite(const suite_config& cfg)
{
    if (cfg.suites.empty())
        throw std::invalid_argument("no suite selected");
    for (const auto& s : cfg.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    std::vector<suite_report> out;
    for (const auto& s : cfg.suites)
        for (auto [n, d] : cfg.grid) {
            std::vector<suite_report> parts;
            if (s == "d2" || s == "strand") {
                int bound = cfg.max_degree > 0 ? cfg.max_degree : d + n + 2;
                for (const auto& c : all_complexes(n, d, cfg.corrupt))
                    parts.push_back(s == "d2" ? check_d_squared(c) : strand_exactness(c, bound));
            }
            else if (s == "leibniz" || s == "comm" || s == "odd" || s == "assoc") {
                for (const auto& a : all_algebras(n, d, cfg.corrupt))
                    parts.push_back(s == "leibniz" ? check_leibniz(a)
                                                   : check_comm_assoc(a, s == "comm"  ? axiom::commutativity
                                                                         : s == "odd" ? axiom::odd_squares
                                                                                      : axiom::associativity));
            }
            else if (s == "eta")
                parts.push_back(check_eta(n, d, cfg.corrupt));
            else if (s == "phi")
                parts.push_back(check_phi(n, d, cfg.corrupt));
            else if (s == "iso")
                parts.push_back(verify_algebra_morphism(n, d, cfg.corrupt));
            else
                parts.push_back(check_product_forms(n, d, cfg.corrupt));
            suite_report r = parts.size() == 1 ? parts.front() : combine(s, n, d, parts);
            if (cfg.corrupt)
                r.params["corrupted"] = true;
            out.push_back(std::move(r));
        }
    return out;
}

}  // namespace hookdg
