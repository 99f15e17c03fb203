// Command-line front end: exact evaluation, stage tracing, table output and
// grid verification of the Legendre power double integral I(b,l).

#include "legint/legint.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace legint;

std::string float17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Writes to stdout, or to the --out path when given.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw CLI::ValidationError("--out", "cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_eval(unsigned long b, unsigned long l, const std::string& source,
             unsigned long nodes, const std::string& out_path) {
    Output out(out_path);
    const IntegralSpec spec{b, l};
    if (source == "quadrature") {
        const unsigned long n = nodes != 0 ? nodes : b + l + 4;
        const QuadResult q =
            quad_double_integral(spec, gauss_legendre_rule(n), QuadForm::XY);
        if (!q.sufficient_nodes)
            std::cerr << "warning: " << n << " nodes are not exact for b=" << b
                      << " l=" << l << "\n";
        out.stream() << "b=" << b << " l=" << l << " I=" << float17(q.value)
                     << " source=quadrature nodes=" << n << "\n";
        return 0;
    }
    Rational value;
    if (source == "closed") {
        value = closed_form(spec);
    } else if (source == "oracle") {
        value = exact_double_integral(spec);
    } else {  // pipeline
        const DerivationTrace trace = derive(spec);
        if (!trace.consistent) {
            std::cerr << "stage mismatch: " << trace.mismatch() << "\n";
            return 2;
        }
        value = trace.final;
    }
    out.stream() << "b=" << b << " l=" << l << " I=" << to_string(value)
                 << " float=" << float17(to_double(value)) << " source=" << source
                 << "\n";
    return 0;
}

int run_table(unsigned long b_max, const std::string& format, bool include_zeros,
              const std::string& out_path) {
    Output out(out_path);
    std::ostream& os = out.stream();
    if (format == "csv") os << "b,l,numerator,denominator\r\n";
    for (unsigned long b = 0; b <= b_max; ++b) {
        const unsigned long l_max = include_zeros ? 2 * b : b;
        for (unsigned long l = 0; l <= l_max; ++l) {
            const Rational v = closed_form({b, l});
            if (format == "csv") {
                os << b << ',' << l << ',' << numerator(v) << ','
                   << denominator(v) << "\r\n";
            } else if (format == "json-lines") {
                os << "{\"b\":" << b << ",\"l\":" << l << ",\"num\":"
                   << numerator(v) << ",\"den\":" << denominator(v) << "}\n";
            } else {
                os << "b=" << b << " l=" << l << " I=" << to_string(v) << "\n";
            }
        }
    }
    return 0;
}

int run_trace(unsigned long b, unsigned long l, const std::string& out_path) {
    Output out(out_path);
    std::ostream& os = out.stream();
    const DerivationTrace trace = derive({b, l});
    os << "b=" << b << " l=" << l;
    if (inner_integral({b, l}).is_zero()) os << " (inner integral is the zero polynomial)";
    os << "\n";
    for (const auto& [label, value] : trace.stage_values)
        os << label << (std::string(14 - label.size(), ' ')) << ": "
           << to_string(value) << "\n";
    if (trace.consistent) {
        os << "CONSISTENT\n";
        return 0;
    }
    os << "MISMATCH (" << trace.mismatch() << ")\n";
    return 2;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string diagnostic;
};

double rel_or_scaled_error(double approx, const Rational& exact, double scale) {
    const double e = to_double(exact);
    if (exact == 0) return std::abs(approx) / std::max(scale, 1.0);
    return std::abs(approx - e) / std::abs(e);
}

std::vector<CheckResult> verify_case(unsigned long b, unsigned long l,
                                     unsigned long quad_nodes) {
    std::vector<CheckResult> results;
    const IntegralSpec spec{b, l};
    auto fail_msg = [&](const std::string& what) {
        std::ostringstream os;
        os << "b=" << b << " l=" << l << ": " << what;
        return os.str();
    };

    const DerivationTrace trace = derive(spec);
    const bool inner_ok = inner_integral(spec) == inner_integral_oracle(spec);
    results.push_back({"stage-equality", trace.consistent && inner_ok,
                       trace.consistent ? fail_msg("inner integral != binomial oracle")
                                        : fail_msg("stage mismatch " + trace.mismatch())});

    const Rational closed = closed_form(spec);
    results.push_back({"oracle-equality", closed == exact_double_integral(spec),
                       fail_msg("closed form != exact double integral")});

    if (l > 2 * b) {
        results.push_back({"vanishing-trivial", inner_integral(spec).is_zero(),
                           fail_msg("inner integral not the zero polynomial")});
    } else if (b < l) {
        const bool ok = moment_sum(spec) == 0 && gauss_form(spec) == 0;
        results.push_back(
            {"vanishing-strong", ok, fail_msg("cancellation region value not zero")});
    } else {
        const bool nonzero = closed != 0;
        const bool sign_ok = nonzero && ((l % 2 == 0) == (closed > 0));
        results.push_back({"sign", sign_ok, fail_msg("sign != (-1)^l")});
    }

    if (b <= 5 && l <= 8) {
        const unsigned long n = quad_nodes != 0 ? quad_nodes : b + l + 4;
        const QuadratureRule rule = gauss_legendre_rule(n);
        const Rational exact = exact_double_integral(spec);
        const QuadResult xy = quad_double_integral(spec, rule, QuadForm::XY);
        const QuadResult th = quad_double_integral(spec, rule, QuadForm::Theta);
        const bool xy_ok = rel_or_scaled_error(xy.value, exact, xy.max_abs_sample) <= 1e-10;
        const bool th_ok = rel_or_scaled_error(th.value, exact, th.max_abs_sample) <= 1e-10;
        const double denom = std::max({std::abs(xy.value), th.max_abs_sample, 1.0});
        const bool forms_ok = std::abs(th.value - xy.value) / denom <= 1e-9;
        results.push_back({"quadrature", xy_ok && th_ok && forms_ok,
                           fail_msg("quadrature disagrees with exact value")});
    }
    return results;
}

int run_verify(unsigned long b_max, unsigned long l_extra, unsigned long quad_nodes,
               unsigned long jobs, const std::string& out_path) {
    Output out(out_path);
    std::ostream& os = out.stream();

    std::vector<IntegralSpec> cases;
    for (unsigned long b = 0; b <= b_max; ++b)
        for (unsigned long l = 0; l <= 2 * b + l_extra; ++l)
            cases.push_back({b, l});

    std::vector<std::vector<CheckResult>> case_results(cases.size());
    if (jobs <= 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cases.size();
             i = next.fetch_add(1))
            case_results[i] = verify_case(cases[i].b, cases[i].l, quad_nodes);
    };
    std::vector<std::thread> threads;
    for (unsigned long t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    // Sum rule over l at fixed b, appended deterministically.
    std::vector<CheckResult> sum_rules;
    for (unsigned long b = 0; b <= b_max; ++b) {
        Rational sum = 0;
        for (unsigned long l = 0; l <= b; ++l)
            sum += Rational(BigInt(2 * l + 1)) * closed_form({b, l});
        const Rational expected = (b == 0) ? 4 : 0;
        std::ostringstream diag;
        diag << "b=" << b << ": sum rule value " << to_string(sum);
        sum_rules.push_back({"sum-rule", sum == expected, diag.str()});
    }

    const std::vector<std::string> order = {"stage-equality", "oracle-equality",
                                            "vanishing-trivial", "vanishing-strong",
                                            "sign", "quadrature", "sum-rule"};
    std::size_t total = 0, failures = 0;
    for (const std::string& name : order) {
        std::size_t run = 0, passed = 0;
        auto tally = [&](const CheckResult& r) {
            if (r.name != name) return;
            ++run;
            if (r.pass)
                ++passed;
            else
                std::cerr << "FAIL " << name << " " << r.diagnostic << "\n";
        };
        for (const auto& results : case_results)
            for (const auto& r : results) tally(r);
        for (const auto& r : sum_rules) tally(r);
        os << name << std::string(18 - name.size(), ' ') << ": " << passed << "/"
           << run << "\n";
        total += run;
        failures += run - passed;
    }
    os << "total checks      : " << total << " over " << cases.size()
       << " (b,l) cases\n";
    if (failures == 0) {
        os << "all checks passed\n";
        return 0;
    }
    os << "FAILURES: " << failures << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and verification of the double integral of "
                 "(x-y)^(2b) P_l(x) P_l(y) over [-1,1]^2"};
    app.require_subcommand(1);

    unsigned long b = 0, l = 0, b_max = 0, nodes = 0, l_extra = 3, jobs = 1;
    std::string source = "closed", format = "text", out_path;
    bool include_zeros = false;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate I(b,l)");
    eval->add_option("b", b, "half the power")->required();
    eval->add_option("l", l, "Legendre order")->required();
    eval->add_option("--source", source, "value route")
        ->check(CLI::IsMember({"closed", "pipeline", "oracle", "quadrature"}));
    eval->add_option("--nodes", nodes, "quadrature nodes (0 = b+l+4)");
    eval->add_option("--out", out_path, "write output to file");

    CLI::App* table = app.add_subcommand("table", "Tabulate I(b,l)");
    table->add_option("b_max", b_max, "largest b")->required();
    table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json-lines"}));
    table->add_flag("--include-zeros", include_zeros,
                    "extend rows to l <= 2b (cancellation region)");
    table->add_option("--out", out_path, "write output to file");

    CLI::App* trace = app.add_subcommand("trace", "Print all derivation stages");
    trace->add_option("b", b, "half the power")->required();
    trace->add_option("l", l, "Legendre order")->required();
    trace->add_option("--out", out_path, "write output to file");

    CLI::App* verify = app.add_subcommand("verify", "Run the verification grid");
    verify->add_option("--b-max", b_max, "largest b")->default_val(6);
    verify->add_option("--l-extra", l_extra, "extra l beyond 2b");
    verify->add_option("--quad-nodes", nodes, "quadrature nodes (0 = b+l+4)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", out_path, "write output to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(b, l, source, nodes, out_path);
        if (table->parsed()) return run_table(b_max, format, include_zeros, out_path);
        if (trace->parsed()) return run_trace(b, l, out_path);
        return run_verify(b_max, l_extra, nodes, jobs, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
