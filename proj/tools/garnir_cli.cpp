// Command-line surface for the symmetrized Garnir operator library:
// eigenvalue tables, zero scans, identity checks, presentation verification,
// and matrix export.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 size bound exceeded,
// 4 mathematical invariant violated.

#include <garnir/io.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitInvariant = 4;

// Data goes to stdout or --out PATH; status and progress go to stderr.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_)
                throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::optional<std::ofstream> file_;
};

int default_nm_bound() {
    if (const char* env = std::getenv("GARNIR_BOUND_NM")) {
        const int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return 14;
}

struct Args {
    int n = 0, m = 0, l = 0, i = -1;
    int n_max = 0;
    int max_cells = 10;
    bool ell_lt_m = false;
    bool summary = false;
    bool with_basis = false;
    std::string format;
    std::string out;
    std::string shape;
    std::string lhat;
    std::vector<int> two_col;
};

int run_omega(const Args& a) {
    const garnir::OmegaTable table(a.n, a.m);
    if (a.l < 1 || a.l > a.m)
        throw std::invalid_argument("omega: need 1 <= l <= m");
    Output out(a.out);
    if (a.i >= 0) {
        if (a.i > a.m) throw std::invalid_argument("omega: need i <= m");
        if (a.format == "json") {
            garnir::ordered_json j;
            j["n"] = a.n;
            j["m"] = a.m;
            j["l"] = a.l;
            j["i"] = a.i;
            j["omega"] = garnir::to_string(table.value(a.l, a.i));
            out.stream() << j.dump(2) << "\n";
        } else {
            out.stream() << table.value(a.l, a.i) << "\n";
        }
        return kExitOk;
    }
    if (a.format == "json") {
        out.stream() << garnir::omega_to_json(table, a.l).dump(2) << "\n";
    } else if (a.format == "csv") {
        out.stream() << "i,omega\n";
        for (int i = 0; i <= a.m; ++i)
            out.stream() << i << ',' << table.value(a.l, i) << "\n";
    } else {
        for (int i = 0; i <= a.m; ++i)
            out.stream() << i << ' ' << table.value(a.l, i) << "\n";
    }
    return kExitOk;
}

int run_scan(const Args& a) {
    const auto start = std::chrono::steady_clock::now();
    const garnir::ScanResult result =
        garnir::scan_zero_tuples(a.n_max, a.ell_lt_m);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "scanned " << result.total_triples << " triples (n <= "
              << a.n_max << ", " << (a.ell_lt_m ? "l < m" : "l <= m") << ") in "
              << elapsed.count() << " ms\n";

    Output out(a.out);
    if (a.summary) {
        out.stream() << garnir::scan_summary(result) << "\n";
    } else if (a.format == "json") {
        out.stream() << garnir::scan_to_json(result).dump(2) << "\n";
    } else {
        garnir::write_scan_csv(result, out.stream());
    }
    return kExitOk;
}

int run_trace(const Args& a) {
    const garnir::BinomialTable bt(2 * a.n_max);
    long long checked = 0;
    for (int n = 1; n <= a.n_max; ++n)
        for (int m = 1; m <= n; ++m)
            for (int l = 1; l <= m; ++l) {
                if (!garnir::trace_identity_check(bt, n, m, l)) {
                    std::cout << "trace identity FAILED at n=" << n
                              << " m=" << m << " l=" << l << "\n";
                    return kExitInvariant;
                }
                ++checked;
            }
    std::cout << "trace identity holds for all l <= m <= n <= " << a.n_max
              << " (" << checked << " triples)\n";
    return kExitOk;
}

int run_equiv(const Args& a) {
    const auto failures = garnir::condition_equivalence_failures(a.n_max);
    if (!failures.empty()) {
        for (const auto& f : failures)
            std::cout << "equivalence FAILED at n=" << f.n << " m=" << f.m
                      << " l=" << f.l << "\n";
        return kExitInvariant;
    }
    long long triples = 0;
    for (int n = 1; n <= a.n_max; ++n) triples += n * (n + 1) / 2;
    std::cout << "condition families agree for all l <= m <= n <= " << a.n_max
              << " (" << triples << " triples)\n";
    return kExitOk;
}

int run_verify(const Args& a) {
    garnir::VerifyOptions opts;
    opts.max_nm = default_nm_bound();
    opts.max_cells = a.max_cells;
    Output out(a.out);
    if (!a.two_col.empty()) {
        const int n = a.two_col[0];
        const int m = a.two_col[1];
        const garnir::PresentationVerdict v =
            garnir::verify_two_column(n, m, a.l, opts);
        const garnir::KernelCheckReport k =
            garnir::kernel_dimension_report(n, m, a.l, opts);
        garnir::ordered_json j;
        j["verdict"] = garnir::to_json(v);
        j["kernel"] = garnir::to_json(k);
        out.stream() << j.dump(2) << "\n";
        return (v.predicted == v.observed && k.ok) ? kExitOk : kExitInvariant;
    }
    const garnir::Partition shape = garnir::Partition::parse(a.shape);
    std::vector<int> lhat;
    if (!a.lhat.empty()) {
        std::istringstream in(a.lhat);
        std::string token;
        while (std::getline(in, token, ','))
            if (!token.empty()) lhat.push_back(std::stoi(token));
    }
    const garnir::PresentationVerdict v =
        garnir::verify_presentation(shape, lhat, opts);
    out.stream() << garnir::to_json(v).dump(2) << "\n";
    return v.predicted == v.observed ? kExitOk : kExitInvariant;
}

int run_matrix(const Args& a) {
    if (a.n + a.m > default_nm_bound())
        throw garnir::bound_error("matrix: n + m exceeds bound");
    const garnir::OperatorMatrix h =
        garnir::eta_matrix_closed_form(a.n, a.m, a.l);
    Output out(a.out);
    if (a.format == "json")
        out.stream() << garnir::matrix_to_json(h, a.with_basis).dump(2) << "\n";
    else
        garnir::write_matrix_triplets(h, out.stream());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetrized Garnir relations on column tabloids: "
                 "eigenvalues, zero scans, and Specht presentation checks"};
    app.require_subcommand(1);
    Args a;

    auto* omega = app.add_subcommand(
        "omega", "exact eigenvalues for a two-column shape");
    omega->add_option("--n", a.n, "first column length")->required();
    omega->add_option("--m", a.m, "second column length")->required();
    omega->add_option("--l", a.l, "exchange size")->required();
    omega->add_option("--i", a.i, "component index (default: all 0..m)");
    omega->add_option("--format", a.format, "plain|csv|json")
        ->default_val("plain");
    omega->add_option("--out", a.out, "output path (default stdout)");

    auto* scan = app.add_subcommand(
        "scan", "scan for parameters with vanishing eigenvalue");
    scan->add_option("--n-max", a.n_max, "largest first-column length")
        ->required()
        ->check(CLI::PositiveNumber);
    scan->add_flag("--l-lt-m", a.ell_lt_m, "restrict to l < m");
    auto* le = scan->add_flag("--l-le-m", "full domain l <= m (default)");
    scan->add_flag("--summary", a.summary, "print the triple summary only");
    scan->add_option("--format", a.format, "csv|json")->default_val("csv");
    scan->add_option("--out", a.out, "output path (default stdout)");
    le->excludes("--l-lt-m");

    auto* trace = app.add_subcommand(
        "trace", "check the trace identity for all l <= m <= n <= n-max");
    trace->add_option("--n-max", a.n_max)
        ->required()
        ->check(CLI::PositiveNumber);

    auto* equiv = app.add_subcommand(
        "equiv", "check the equivalence of the two condition families");
    equiv->add_option("--n-max", a.n_max)
        ->required()
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand(
        "verify", "compare predicted and observed presentation verdicts");
    verify->add_option("--two-col", a.two_col, "two-column shape: N M")
        ->expected(2);
    verify->add_option("--l", a.l, "exchange size (with --two-col)");
    auto* shape_opt =
        verify->add_option("--shape", a.shape, "partition, e.g. 2,2,1");
    verify->add_option("--lhat", a.lhat,
                       "exchange sizes per adjacent column pair, e.g. 1,2");
    verify->add_option("--max-cells", a.max_cells,
                       "size bound for --shape verification");
    verify->add_option("--out", a.out, "output path (default stdout)");
    shape_opt->excludes("--two-col");

    auto* matrix = app.add_subcommand(
        "matrix", "export the operator matrix on the two-column basis");
    matrix->add_option("--n", a.n)->required();
    matrix->add_option("--m", a.m)->required();
    matrix->add_option("--l", a.l)->required();
    matrix->add_option("--format", a.format, "triplet|json")
        ->default_val("triplet");
    matrix->add_flag("--with-basis", a.with_basis,
                     "include the tabloid basis in json output");
    matrix->add_option("--out", a.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (omega->parsed()) return run_omega(a);
        if (scan->parsed()) return run_scan(a);
        if (trace->parsed()) return run_trace(a);
        if (equiv->parsed()) return run_equiv(a);
        if (verify->parsed()) {
            if (a.two_col.empty() && a.shape.empty()) {
                std::cerr << "verify: need --two-col N M or --shape P\n";
                return kExitUsage;
            }
            if (!a.two_col.empty() && a.l == 0) {
                std::cerr << "verify: --two-col requires --l\n";
                return kExitUsage;
            }
            return run_verify(a);
        }
        if (matrix->parsed()) return run_matrix(a);
    } catch (const garnir::bound_error& e) {
        std::cerr << "size bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
