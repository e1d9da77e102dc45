#pragma once

#include "hookdg/iso_phi.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace hookdg {

struct failure {
    std::string input, lhs, rhs;
};

struct suite_report {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<failure> failures;  // the first few, in deterministic case order
    double seconds = 0;

    bool pass() const { return failure_count == 0; }
    // nothing to check at this size, e.g. products when n = 1
    bool vacuous() const { return cases == 0; }
    void fail(std::string input, std::string lhs, std::string rhs);
    void merge(const suite_report& o);
    nlohmann::json to_json() const;
};

using product_fn = std::function<element(const element&, const element&)>;
using diff_fn = std::function<element(const element&)>;

// a complex together with a product on it, as the DG suites see it
struct algebra {
    std::string name;
    complex_kind kind = complex_kind::L;
    int n = 0, d = 0;
    std::vector<std::vector<tableau>> basis;  // per homological degree
    product_fn mul;
    diff_fn diff;
};

algebra srinivasan_algebra(int n, int d);
algebra peeva_algebra(int n, int d);
algebra peeva_recursive_algebra(int n, int d);
algebra srinivasan_printed_algebra(int n, int d);

/* Negative controls: one sign flip in one place. */
void corrupt_matrix(complex_descriptor& c);
void corrupt_product(algebra& a);
diff_fn corrupt_diff(diff_fn f, const tableau& victim);

suite_report check_d_squared(const complex_descriptor& c);
suite_report strand_exactness(const complex_descriptor& c, int max_internal_degree);
// total strand dimension per homological degree in internal degree e
std::vector<size_t> strand_dimensions(const complex_descriptor& c, int e);

suite_report check_leibniz(const algebra& a);
enum class axiom { commutativity, odd_squares, associativity };
suite_report check_comm_assoc(const algebra& a, axiom mode);

suite_report check_eta(int n, int d, bool corrupt = false);
suite_report check_phi(int n, int d, bool corrupt = false);
suite_report verify_algebra_morphism(int n, int d, bool corrupt = false);
suite_report check_product_forms(int n, int d, bool corrupt = false);

struct suite_config {
    std::vector<std::string> suites;
    std::vector<std::pair<int, int>> grid;  // (n, d)
    int max_degree = 0;                     // 0: d + n + 2
    bool corrupt = false;
};

const std::vector<std::string>& suite_names();
// one report per suite and grid point, in config order
std::vector<suite_report> run_suite(const suite_config& cfg);

}  // namespace hookdg
