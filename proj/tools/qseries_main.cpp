// qseries: command-line front end. Every run embeds its resolved
// configuration in the output header and is byte-reproducible.
//
// Exit codes: 0 success, 1 validation error, 2 precision/validity
// shortfall, 3 certified-but-not-holomorphic.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qseries/json_io.hpp"

namespace {

using namespace qseries;
using nlohmann::json;

struct Output {
    std::string format = "json";
    std::string path; // empty = stdout
};

void emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file: " + out.path);
        f << text;
    }
}

void emit_json(const Output& out, const json& config, const json& result) {
    json doc{{"config", config}, {"result", result}};
    emit(out, doc.dump(2) + "\n");
}

std::string csv_header(const json& config) {
    std::string line = "#";
    for (const auto& [k, v] : config.items()) {
        line += " " + k + "=";
        if (v.is_string()) {
            line += v.get<std::string>();
        } else {
            line += v.dump();
        }
    }
    return line + "\n";
}

int run_coeffs(const Output& out, const std::string& fn, long long t, std::size_t P,
               unsigned long long M, int workers) {
    json config{{"subcommand", "coeffs"}, {"fn", fn},      {"t", t},
                {"P", P},                 {"format", out.format}, {"workers", workers}};
    if (M != 0) config["M"] = M;

    json result;
    std::vector<std::string> values;
    if (M != 0) {
        SeriesMod s = (fn == "ct") ? coeffs_ct(ModRing(M), t, P) : coeffs_abar_mod(t, M, P);
        result = json{{"fn", fn}, {"t", t}, {"series", series_to_json(s)}};
        for (u64 v : s.coeffs()) values.push_back(std::to_string(v));
    } else {
        SeriesZ s = (fn == "ct") ? coeffs_ct(t, P) : coeffs_abar(t, P);
        result = json{{"fn", fn}, {"t", t}, {"series", series_to_json(s)}};
        for (const auto& v : s.coeffs()) values.push_back(v.get_str());
    }

    if (out.format == "csv") {
        std::string text = csv_header(config) + "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n) {
            text += std::to_string(n) + "," + values[n] + "\n";
        }
        emit(out, text);
    } else {
        emit_json(out, config, result);
    }
    return 0;
}

int run_certify(const Output& out, const std::string& family, int alpha, long long m, int k,
                const std::string& quotient_json, const std::string& quotient_file, long long level,
                bool with_cases, int workers) {
    json config{{"subcommand", "certify"}, {"format", out.format}, {"workers", workers}};
    if (out.format != "json") throw std::invalid_argument("certify supports json output only");

    EtaQuotient E({{1, 24}}); // placeholder, reassigned below
    std::optional<long long> level_opt;
    if (level > 0) level_opt = level;

    std::optional<Family> fam;
    if (!family.empty()) {
        config["family"] = family;
        config["alpha"] = alpha;
        config["m"] = m;
        config["k"] = k;
        if (family == "A") {
            E = build_A(alpha, m);
        } else if (family == "B") {
            E = build_B(alpha, m, k);
            fam = Family::B;
            if (!level_opt) level_opt = family_level(Family::B, alpha, m);
        } else if (family == "C") {
            E = build_C(alpha, m);
        } else {
            E = build_D(alpha, m, k);
            fam = Family::D;
            if (!level_opt) level_opt = family_level(Family::D, alpha, m);
        }
    } else {
        std::string text = quotient_json;
        if (!quotient_file.empty()) {
            std::ifstream f(quotient_file);
            if (!f) throw std::invalid_argument("cannot read quotient file: " + quotient_file);
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
            config["quotient_file"] = quotient_file;
        } else {
            config["quotient"] = json::parse(text);
        }
        E = eta_from_json(json::parse(text));
    }
    if (level_opt) config["level"] = *level_opt;

    Certificate cert = certify(E, level_opt);
    json result{{"certificate", certificate_to_json(cert)}};
    if (with_cases) {
        if (!fam) throw std::invalid_argument("--cases requires --family B or D");
        result["l_cases"] = lcases_to_json(verify_L_cases(*fam, alpha, m, k));
    }
    emit_json(out, config, result);
    return cert.holomorphic ? 0 : 3;
}

int run_density(const Output& out, long long t, unsigned long long M, unsigned long long r,
                std::vector<unsigned long long> checkpoints, bool big, const std::string& cache,
                int workers) {
    if (big) checkpoints.push_back(1000000ull);
    json cps = json::array();
    for (auto x : checkpoints) cps.push_back(x);
    json config{{"subcommand", "density"}, {"t", t},     {"M", M},
                {"r", r},                  {"checkpoints", cps}, {"big", big},
                {"format", out.format},    {"workers", workers}};
    if (!cache.empty()) config["cache"] = cache;

    u64 maxX = *std::max_element(checkpoints.begin(), checkpoints.end());
    std::optional<SeriesMod> stream;
    if (!cache.empty()) {
        stream = read_stream_cache(cache, t, M, static_cast<std::size_t>(maxX) + 1);
        if (!stream) {
            stream = coeffs_abar_mod(t, M, static_cast<std::size_t>(maxX) + 1);
            write_stream_cache(cache, t, *stream);
        }
    }
    std::vector<u64> cp(checkpoints.begin(), checkpoints.end());
    DensityReport rep = density_report(t, M, r, cp, stream ? &*stream : nullptr);

    if (out.format == "csv") {
        std::string text = csv_header(config) + "X,count,ratio\n";
        for (std::size_t i = 0; i < rep.checkpoints.size(); ++i) {
            text += std::to_string(rep.checkpoints[i]) + "," + std::to_string(rep.counts[i]) + "," +
                    decimal_string(rep.ratios[i], 6) + "\n";
        }
        emit(out, text);
    } else {
        emit_json(out, config, density_to_json(rep));
    }
    return 0;
}

int run_scan(const Output& out, long long t, unsigned long long M, unsigned long long A_max,
             unsigned long long X, int workers) {
    json config{{"subcommand", "scan"}, {"t", t},           {"M", M},
                {"A_max", A_max},       {"X", X},           {"format", out.format},
                {"workers", workers}};
    auto candidates = congruence_scan(t, M, A_max, X);
    if (out.format == "csv") {
        std::string text = csv_header(config) + "A,B,status,witness_n\n";
        for (const auto& c : candidates) {
            text += std::to_string(c.A) + "," + std::to_string(c.B) + "," +
                    (c.refuted ? "refuted-at-n" : "verified-up-to-X") + "," +
                    (c.refuted ? std::to_string(c.witness_n) : "") + "\n";
        }
        emit(out, text);
    } else {
        emit_json(out, config, scan_to_json(candidates));
    }
    return 0;
}

int run_hecke(const Output& out, const std::string& mode, int k, std::vector<unsigned long long> primes,
              int t_exp, int d, long long n_range, std::size_t P, int workers) {
    json ps = json::array();
    for (auto p : primes) ps.push_back(p);
    json config{{"subcommand", "hecke"}, {"mode", mode}, {"k", k},       {"primes", ps},
                {"P", P},                {"format", out.format}, {"workers", workers}};
    if (out.format != "json") throw std::invalid_argument("hecke supports json output only");
    std::vector<u64> pv(primes.begin(), primes.end());
    if (mode == "probe") {
        config["t_exp"] = t_exp;
        emit_json(out, config, nilpotency_to_json(nilpotency_probe(k, pv, t_exp, P)));
    } else {
        config["d"] = d;
        config["n_range"] = n_range;
        emit_json(out, config, cong1_to_json(verify_cong1_instance(pv, d, n_range, k, P)));
    }
    return 0;
}

int run_oracle(const Output& out, int count_n, long long t, std::vector<int> parts, int workers) {
    json config{{"subcommand", "oracle"}, {"format", out.format}, {"workers", workers}};
    if (!parts.empty()) {
        json jp = json::array();
        for (int p : parts) jp.push_back(p);
        config["parts"] = jp;
        if (t > 0) config["t"] = t;
        Partition p = Partition::of(parts);
        HookDiagram dia = hook_numbers(p);
        json result{{"hook_diagram", hook_diagram_to_json(dia)}};
        if (t > 0) result["is_t_core"] = is_t_core(p, t);
        if (out.format != "json") throw std::invalid_argument("hook diagrams support json output only");
        emit_json(out, config, result);
        return 0;
    }
    if (count_n < 0 || t < 2) throw std::invalid_argument("oracle needs --parts or --count-n with --t >= 2");
    config["count_n"] = count_n;
    config["t"] = t;
    std::vector<long long> counts;
    for (int n = 0; n <= count_n; ++n) counts.push_back(brute_tcore_count(n, t));
    if (out.format == "csv") {
        std::string text = csv_header(config) + "n,count\n";
        for (int n = 0; n <= count_n; ++n) text += std::to_string(n) + "," + std::to_string(counts[n]) + "\n";
        emit(out, text);
    } else {
        json arr = json::array();
        for (long long c : counts) arr.push_back(std::to_string(c));
        emit_json(out, config, json{{"t", t}, {"counts", arr}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series toolkit: t-core analogues, eta-quotient certification, Hecke probes, densities"};
    app.set_config("--config", "", "read options from a key=value file");
    app.require_subcommand(1);

    std::string format = "json";
    int workers = 1;
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--workers", workers, "parallel worker count (1 = serial)")->check(CLI::Range(1, 256));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* coeffs = app.add_subcommand("coeffs", "emit coefficient streams c_t(n) / abar_t(n)");
    std::string fn = "abar";
    long long t = 0;
    std::size_t P = 10;
    unsigned long long M = 0;
    coeffs->add_option("--fn", fn, "which stream")->check(CLI::IsMember({"ct", "abar"}));
    coeffs->add_option("--t", t, "t parameter")->required();
    coeffs->add_option("--P", P, "number of coefficients");
    coeffs->add_option("--M", M, "residue backend modulus (omit for exact)");

    auto* certify = app.add_subcommand("certify", "certify an eta-quotient as a holomorphic modular form");
    std::string family, quotient_json, quotient_file;
    int alpha = 0, kk = 1;
    long long fm = 1, level = 0;
    bool with_cases = false;
    certify->add_option("--family", family, "paper family")->check(CLI::IsMember({"A", "B", "C", "D"}));
    certify->add_option("--alpha", alpha, "family alpha >= 0");
    certify->add_option("--m", fm, "family m, gcd(m,6)=1");
    certify->add_option("--k", kk, "family k >= 1");
    certify->add_option("--quotient", quotient_json, "inline JSON eta-quotient {\"terms\":{\"24\":-2,...}}");
    certify->add_option("--quotient-file", quotient_file, "path to a JSON eta-quotient");
    certify->add_option("--level", level, "certify at this level instead of the resolved one");
    certify->add_flag("--cases", with_cases, "include the per-divisor L case report (families B/D)");

    auto* density = app.add_subcommand("density", "residue-class densities of abar_t(n)");
    long long dt = 3;
    unsigned long long dM = 2, dr = 0;
    std::vector<unsigned long long> checkpoints{1000, 10000, 100000};
    bool big = false;
    std::string cache;
    density->add_option("--t", dt, "t parameter")->required();
    density->add_option("--M", dM, "modulus")->required();
    density->add_option("--r", dr, "residue class");
    density->add_option("--checkpoints", checkpoints, "X checkpoints")->delimiter(',');
    density->add_flag("--big", big, "append the 10^6 checkpoint");
    density->add_option("--cache", cache, "binary stream cache file keyed by (t, M, P)");

    auto* scan = app.add_subcommand("scan", "scan arithmetic progressions An+B for congruences");
    long long st = 3;
    unsigned long long sM = 2, A_max = 24, X = 50000;
    scan->add_option("--t", st, "t parameter")->required();
    scan->add_option("--M", sM, "modulus")->required();
    scan->add_option("--A-max", A_max, "largest progression modulus A");
    scan->add_option("--X", X, "test indices up to X");

    auto* hecke = app.add_subcommand("hecke", "Hecke operator probes on B_{1,1,k}");
    std::string mode = "probe";
    int hk = 1, t_exp = 1, hd = 1;
    long long n_range = 500;
    std::size_t hP = 10000;
    std::vector<unsigned long long> primes;
    hecke->add_option("--mode", mode, "probe | cong1")->check(CLI::IsMember({"probe", "cong1"}));
    hecke->add_option("--k", hk, "family k");
    hecke->add_option("--primes", primes, "primes coprime to 6")->required()->delimiter(',');
    hecke->add_option("--t-exp", t_exp, "probe: target power of 2");
    hecke->add_option("--d", hd, "cong1: congruence exponent d");
    hecke->add_option("--n-range", n_range, "cong1: check n up to this bound");
    hecke->add_option("--P", hP, "expansion precision");

    auto* oracle = app.add_subcommand("oracle", "combinatorial oracles: hook diagrams, brute t-core counts");
    int count_n = -1;
    long long ot = 0;
    std::vector<int> parts;
    oracle->add_option("--count-n", count_n, "emit brute-force counts for n = 0..N");
    oracle->add_option("--t", ot, "t parameter");
    oracle->add_option("--parts", parts, "partition parts, non-increasing")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return 1;
    }

    qseries::kernels::set_workers(workers);
    Output out{format, out_path};

    try {
        if (coeffs->parsed()) return run_coeffs(out, fn, t, P, M, workers);
        if (certify->parsed()) {
            if (family.empty() == (quotient_json.empty() && quotient_file.empty())) {
                throw std::invalid_argument("certify needs exactly one of --family or --quotient/--quotient-file");
            }
            return run_certify(out, family, alpha, fm, kk, quotient_json, quotient_file, level, with_cases,
                               workers);
        }
        if (density->parsed()) return run_density(out, dt, dM, dr, checkpoints, big, cache, workers);
        if (scan->parsed()) return run_scan(out, st, sM, A_max, X, workers);
        if (hecke->parsed()) return run_hecke(out, mode, hk, primes, t_exp, hd, n_range, hP, workers);
        if (oracle->parsed()) return run_oracle(out, count_n, ot, parts, workers);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const qseries::PrecisionError& e) {
        std::cerr << "precision shortfall: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid JSON input: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
