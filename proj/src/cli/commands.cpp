#include "skewmm/cli.hpp"

#include "skewmm/counters.hpp"
#include "skewmm/cyclotomic.hpp"
#include "skewmm/errors.hpp"
#include "skewmm/matmul.hpp"
#include "skewmm/matrix_io.hpp"
#include "skewmm/skewstructure.hpp"
#include "skewmm/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

namespace skewmm::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

long long parse_integer(std::string_view s)
{
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw UsageError("not an integer: \"" + std::string(s) + "\"");
    return v;
}

/// "3,5,7" or "1..5" or a mix such as "1..3,8".
std::vector<long long> parse_int_list(const std::string& text)
{
    std::vector<long long> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_integer(item));
        } else {
            const long long lo = parse_integer(item.substr(0, dots));
            const long long hi = parse_integer(item.substr(dots + 2));
            if (lo > hi)
                throw UsageError("empty range \"" + std::string(item) + "\"");
            for (long long v = lo; v <= hi; ++v)
                out.push_back(v);
        }
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

int require_prime(long long p)
{
    if (p < 3 || !is_prime(p) || p > 1'000'003)
        throw UsageError("--p must be an odd prime, got " + std::to_string(p));
    return static_cast<int>(p);
}

/// nullopt means "dense".
std::optional<LayerSet> parse_layers(const std::string& text, int p)
{
    if (text == "dense")
        return std::nullopt;
    LayerSet layers;
    for (long long e : parse_int_list(text)) {
        if (e < 0 || e > p - 2)
            throw UsageError("layer " + std::to_string(e) + " outside [0, " + std::to_string(p - 2) + "]");
        layers.insert(static_cast<int>(e));
    }
    if (layers.empty())
        throw UsageError("empty layer list");
    return layers;
}

void require_probability(double x, const char* flag)
{
    if (!(x > 0.0 && x < 1.0))
        throw UsageError(std::string(flag) + " must lie in (0,1)");
}

void emit_matrix(const std::string& path, int p, const RatMatrix& m, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << serialize_matrix(p, m);
    else
        write_matrix_file(path, p, m);
}

double to_ms(std::chrono::nanoseconds d)
{
    return std::chrono::duration<double, std::milli>(d).count();
}

json report_json(int p, const MulReport& r)
{
    return json{
        {"p", p},
        {"algorithm", std::string(to_string(r.algorithm))},
        {"t_used", r.t_used},
        {"iterations", r.iterations},
        {"rational_mul_count", r.rational_mul_count},
        {"eval_rational_mul_count", r.eval_rational_mul_count},
        {"fallback", r.fallback},
        {"wall_time_ms", to_ms(r.wall_time)},
    };
}

MulResult run_algorithm(Algorithm algo, const RatMatrix& a, const RatMatrix& b, double nu,
                        RngSeed seed)
{
    switch (algo) {
    case Algorithm::Naive: {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t before = rational_mul_total();
        MulResult r{naive_mul(a, b), {}};
        r.report.algorithm = Algorithm::Naive;
        r.report.rational_mul_count = rational_mul_total() - before;
        r.report.wall_time = std::chrono::steady_clock::now() - start;
        return r;
    }
    case Algorithm::Deterministic:
        return det_mul(a, b);
    case Algorithm::MonteCarlo:
        return mc_mul(a, b, nu, seed);
    }
    throw InternalError("unknown algorithm");
}

Algorithm parse_algorithm(const std::string& name)
{
    if (name == "naive")
        return Algorithm::Naive;
    if (name == "det")
        return Algorithm::Deterministic;
    if (name == "mc")
        return Algorithm::MonteCarlo;
    throw UsageError("unknown algorithm \"" + name + "\" (expected naive, det or mc)");
}

// ---------------------------------------------------------------------------

struct GenArgs {
    long long p = 0;
    std::string layers;
    std::uint64_t seed = 1;
    int coeff_range = 9;
    std::string output;
};

int cmd_gen(const GenArgs& args, std::ostream& out)
{
    const int p = require_prime(args.p);
    if (args.coeff_range < 1)
        throw UsageError("--coeff-range must be at least 1");
    const auto layers = parse_layers(args.layers, p);
    const RngSeed seed{args.seed};
    const RatMatrix m = layers ? random_layered(cyc_context(p), *layers, seed, args.coeff_range)
                               : random_dense(static_cast<std::size_t>(p - 1), seed, args.coeff_range);
    emit_matrix(args.output, p, m, out);
    return kOk;
}

struct MulArgs {
    std::string algo;
    std::string a_path;
    std::string b_path;
    double nu = 0.0;
    bool nu_given = false;
    std::uint64_t seed = 1;
    bool check = false;
    std::string output;
    std::string report_path;
};

int cmd_mul(const MulArgs& args, std::ostream& out, std::ostream& err)
{
    const Algorithm algo = parse_algorithm(args.algo);
    if (algo == Algorithm::MonteCarlo) {
        if (!args.nu_given)
            throw UsageError("--nu is required for --algo mc");
        require_probability(args.nu, "--nu");
    }
    const MatrixFile a = read_matrix_file(args.a_path);
    const MatrixFile b = read_matrix_file(args.b_path);
    if (a.p != b.p)
        throw UsageError("p mismatch: " + std::to_string(a.p) + " vs " + std::to_string(b.p));

    const MulResult result = run_algorithm(algo, a.matrix, b.matrix, args.nu, RngSeed{args.seed});
    json report = report_json(a.p, result.report);
    report["seed"] = args.seed;
    bool mismatch = false;
    if (args.check) {
        const bool correct = result.product == naive_mul(a.matrix, b.matrix);
        report["correct"] = correct;
        mismatch = !correct;
    } else {
        report["correct"] = nullptr;
    }
    emit_matrix(args.output, a.p, result.product, out);

    err << report.dump() << '\n';
    if (!args.report_path.empty()) {
        std::ofstream rep(args.report_path, std::ios::binary | std::ios::trunc);
        if (!(rep << report.dump() << '\n'))
            throw IoError("cannot write " + args.report_path);
    }
    if (mismatch && algo == Algorithm::Deterministic) {
        err << "check failed: product differs from the schoolbook product\n";
        return kNotEqual;
    }
    return kOk;
}

int cmd_analyze(const std::string& path, bool as_json, std::ostream& out)
{
    const MatrixFile file = read_matrix_file(path);
    const CycCtxPtr ctx = cyc_context(file.p);
    const SkewPoly f = mat_to_skew(ctx, file.matrix);

    std::vector<std::pair<int, Rational>> norms;
    for (const auto& [e, c] : f.terms()) {
        Rational sum;
        for (const auto& x : c.coeffs())
            sum += abs(x);
        norms.emplace_back(e, sum);
    }
    if (as_json) {
        json j{{"p", file.p}, {"skew_sparsity", f.sparsity()}, {"support", f.support()}};
        json jn = json::object();
        for (const auto& [e, n] : norms)
            jn[std::to_string(e)] = to_string(n);
        j["coefficient_norms"] = jn;
        out << j.dump() << '\n';
        return kOk;
    }
    out << "p=" << file.p << '\n';
    out << "skew-sparsity=" << f.sparsity() << '\n';
    out << "support={";
    bool first = true;
    for (int e : f.support()) {
        out << (first ? "" : ",") << e;
        first = false;
    }
    out << "}\n";
    for (const auto& [e, n] : norms)
        out << "norm[x^" << e << "]=" << to_string(n) << '\n';
    return kOk;
}

struct VerifyArgs {
    std::string m_path;
    std::string a_path;
    std::string b_path;
    double mu = 0.0;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out)
{
    require_probability(args.mu, "--mu");
    const MatrixFile m = read_matrix_file(args.m_path);
    const MatrixFile a = read_matrix_file(args.a_path);
    const MatrixFile b = read_matrix_file(args.b_path);
    if (m.p != a.p || a.p != b.p)
        throw UsageError("p mismatch between input files");
    const int rounds = freivalds_rounds(args.mu);
    const Verdict v = freivalds(m.matrix, a.matrix, b.matrix, args.mu, RngSeed{args.seed});
    out << "rounds=" << rounds << '\n';
    out << "verdict=" << (v == Verdict::Equal ? "equal" : "not-equal") << '\n';
    return v == Verdict::Equal ? kOk : kNotEqual;
}

struct BenchArgs {
    std::string p_list;
    std::string t_list;
    std::string algos = "det";
    std::string seeds = "1";
    std::string json_path;
    bool check = false;
    double nu = 0.05;
    int coeff_range = 9;
};

struct BenchCell {
    int p;
    int t;
    Algorithm algo;
    std::uint64_t seed;
};

json run_bench_cell(const BenchCell& cell, const BenchArgs& args)
{
    const CycCtxPtr ctx = cyc_context(cell.p);
    // I = {0} and K = {0, ..., t-1} give |I + K| = t with no sumset collisions.
    const LayerSet left{0};
    LayerSet right;
    for (int e = 0; e < cell.t; ++e)
        right.insert(e);
    SeededRng seeds(RngSeed{cell.seed});
    const RatMatrix a = random_layered(ctx, left, RngSeed{seeds.next_word()}, args.coeff_range);
    const RatMatrix b = random_layered(ctx, right, RngSeed{seeds.next_word()}, args.coeff_range);

    const MulResult r = run_algorithm(cell.algo, a, b, args.nu, RngSeed{cell.seed});
    json rec = report_json(cell.p, r.report);
    rec["t"] = cell.t;
    rec["I"] = left;
    rec["K"] = right;
    rec["layer_rule"] = "I={0}, K={0..t-1}";
    rec["seed"] = cell.seed;
    rec["rng"] = SeededRng::kName;
    if (args.check)
        rec["correct"] = r.product == naive_mul(a, b);
    else
        rec["correct"] = nullptr;
    return rec;
}

int bench_threads()
{
    const char* env = std::getenv("SKEWMM_THREADS");
    if (env == nullptr || *env == '\0')
        return 1;
    const long long n = parse_integer(env);
    if (n < 1)
        throw UsageError("SKEWMM_THREADS must be a positive integer");
    return static_cast<int>(std::min<long long>(n, 256));
}

int cmd_bench(const BenchArgs& args, std::ostream& out)
{
    std::vector<BenchCell> cells;
    std::vector<Algorithm> algos;
    {
        std::string_view rest = args.algos;
        while (true) {
            const auto comma = rest.find(',');
            algos.push_back(parse_algorithm(std::string(rest.substr(0, comma))));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
    }
    require_probability(args.nu, "--nu");
    if (args.coeff_range < 1)
        throw UsageError("--coeff-range must be at least 1");
    const auto seeds = parse_int_list(args.seeds);
    for (long long p_raw : parse_int_list(args.p_list)) {
        const int p = require_prime(p_raw);
        for (long long t : parse_int_list(args.t_list)) {
            if (t < 1 || t > p - 1)
                throw UsageError("t=" + std::to_string(t) + " outside [1, p-1] for p=" + std::to_string(p));
            for (Algorithm algo : algos)
                for (long long s : seeds) {
                    if (s < 0)
                        throw UsageError("seeds must be non-negative");
                    cells.push_back({p, static_cast<int>(t), algo, static_cast<std::uint64_t>(s)});
                }
        }
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!args.json_path.empty() && args.json_path != "-") {
        file.open(args.json_path, std::ios::binary | std::ios::trunc);
        if (!file)
            throw IoError("cannot open " + args.json_path + " for writing");
        sink = &file;
    }

    // Records are written in cell order by whichever worker completes the
    // next pending one, so a partial file is always a valid JSONL prefix.
    std::vector<std::optional<json>> done(cells.size());
    std::size_t next_to_write = 0;
    std::mutex mutex;
    std::atomic<std::size_t> next_cell{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next_cell.fetch_add(1);
            if (i >= cells.size())
                return;
            json rec;
            try {
                rec = run_bench_cell(cells[i], args);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure)
                    failure = std::current_exception();
                next_cell = cells.size();
                return;
            }
            std::lock_guard lock(mutex);
            done[i] = std::move(rec);
            while (next_to_write < done.size() && done[next_to_write]) {
                *sink << done[next_to_write]->dump() << '\n';
                sink->flush();
                done[next_to_write].reset();
                ++next_to_write;
            }
        }
    };

    const int threads = std::min<int>(bench_threads(), static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < threads; ++k)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    if (!*sink)
        throw IoError("error writing bench output");
    return kOk;
}

int cmd_selftest(std::ostream& out, std::ostream& err)
{
    const SelftestOutcome outcome = run_selftest(out);
    if (!outcome.passed) {
        err << "selftest failed: " << outcome.first_failure << '\n';
        return kSelftestFailed;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact (p-1)x(p-1) rational matrix multiplication via skew polynomials"};
    app.name("skewmm");
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random matrix, dense or on given layers");
    gen_cmd->add_option("--p", gen.p, "Odd prime; the matrix is (p-1)x(p-1)")->required();
    gen_cmd->add_option("--layers", gen.layers, "Comma-separated layer indices, ranges a..b, or 'dense'")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--coeff-range", gen.coeff_range, "Integer coordinates drawn from [-R, R]");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

    MulArgs mul;
    auto* mul_cmd = app.add_subcommand("mul", "Multiply two matrix files");
    mul_cmd->add_option("--algo", mul.algo, "naive, det or mc")->required();
    mul_cmd->add_option("A", mul.a_path, "Left factor")->required();
    mul_cmd->add_option("B", mul.b_path, "Right factor")->required();
    auto* nu_opt = mul_cmd->add_option("--nu", mul.nu, "Failure probability bound for mc");
    mul_cmd->add_option("--seed", mul.seed, "Random seed for mc");
    mul_cmd->add_flag("--check", mul.check, "Compare against the schoolbook product");
    mul_cmd->add_option("-o,--output", mul.output, "Output file (default: stdout)");
    mul_cmd->add_option("--report", mul.report_path, "Also write the JSON report to this file");

    std::string analyze_path;
    bool analyze_json = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report skew-sparsity and support of a matrix");
    analyze_cmd->add_option("M", analyze_path, "Matrix file")->required();
    analyze_cmd->add_flag("--json", analyze_json, "Emit one JSON object instead of key=value lines");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Freivalds test of M == A B");
    verify_cmd->add_option("M", verify.m_path, "Claimed product")->required();
    verify_cmd->add_option("A", verify.a_path, "Left factor")->required();
    verify_cmd->add_option("B", verify.b_path, "Right factor")->required();
    verify_cmd->add_option("--mu", verify.mu, "Error probability bound")->required();
    verify_cmd->add_option("--seed", verify.seed, "Random seed");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run layered multiplication benchmarks, JSONL output");
    bench_cmd->add_option("--p-list", bench.p_list, "Primes, e.g. 13,31")->required();
    bench_cmd->add_option("--t-list", bench.t_list, "Target sumset sizes, e.g. 1,2,4,8")->required();
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated subset of naive,det,mc");
    bench_cmd->add_option("--seeds", bench.seeds, "Seeds, e.g. 1..5");
    bench_cmd->add_option("--json", bench.json_path, "Output file (default: stdout)");
    bench_cmd->add_flag("--check", bench.check, "Cross-check every product against the schoolbook one");
    bench_cmd->add_option("--nu", bench.nu, "Failure probability bound for mc");
    bench_cmd->add_option("--coeff-range", bench.coeff_range, "Integer coordinates drawn from [-R, R]");

    auto* selftest_cmd = app.add_subcommand("selftest", "Check the library invariants");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("skewmm");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen_cmd->parsed())
            return cmd_gen(gen, out);
        if (mul_cmd->parsed()) {
            mul.nu_given = nu_opt->count() > 0;
            return cmd_mul(mul, out, err);
        }
        if (analyze_cmd->parsed())
            return cmd_analyze(analyze_path, analyze_json, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify, out);
        if (bench_cmd->parsed())
            return cmd_bench(bench, out);
        if (selftest_cmd->parsed())
            return cmd_selftest(out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return kFormatError;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return kUsage;
}

}  // namespace skewmm::cli
