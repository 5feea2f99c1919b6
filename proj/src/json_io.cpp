#include "qseries/json_io.hpp"

namespace qseries {

namespace {

json coeffs_to_json(const std::vector<mpz_class>& c) {
    json out = json::array();
    for (const auto& v : c) out.push_back(v.get_str());
    return out;
}

json coeffs_to_json(const std::vector<u64>& c) {
    json out = json::array();
    for (u64 v : c) out.push_back(std::to_string(v));
    return out;
}

long long parse_ll(const json& j, const char* what) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) return std::stoll(j.get<std::string>());
    throw std::invalid_argument(std::string("expected integer or decimal string for ") + what);
}

json rational_to_json(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

} // namespace

json series_to_json(const SeriesZ& s) {
    return json{{"e24", s.e24()},
                {"modulus", nullptr},
                {"precision", s.precision()},
                {"coeffs", coeffs_to_json(s.coeffs())}};
}

json series_to_json(const SeriesMod& s) {
    return json{{"e24", s.e24()},
                {"modulus", std::to_string(s.ring().m)},
                {"precision", s.precision()},
                {"coeffs", coeffs_to_json(s.coeffs())}};
}

SeriesZ seriesz_from_json(const json& j) {
    if (!j.at("modulus").is_null()) throw std::invalid_argument("expected an exact series (modulus null)");
    std::vector<mpz_class> c;
    for (const auto& v : j.at("coeffs")) c.emplace_back(v.get<std::string>());
    auto s = SeriesZ(ZRing{}, std::move(c), j.at("e24").get<long long>());
    if (s.precision() != j.at("precision").get<std::size_t>()) {
        throw std::invalid_argument("series precision field disagrees with coefficient count");
    }
    return s;
}

json eta_to_json(const EtaQuotient& E) {
    json terms = json::object();
    for (const auto& [delta, r] : E.terms()) terms[std::to_string(delta)] = r;
    json out{{"terms", terms}};
    if (E.level_candidate()) {
        out["level"] = *E.level_candidate();
    } else {
        out["level"] = nullptr;
    }
    return out;
}

EtaQuotient eta_from_json(const json& j) {
    std::vector<std::pair<long long, long long>> entries;
    for (const auto& [key, val] : j.at("terms").items()) {
        entries.emplace_back(std::stoll(key), parse_ll(val, "eta exponent"));
    }
    std::optional<long long> level;
    if (j.contains("level") && !j.at("level").is_null()) level = parse_ll(j.at("level"), "level");
    return EtaQuotient(entries, level);
}

json certificate_to_json(const Certificate& c) {
    json cusps = json::array();
    for (const auto& r : c.cusps) {
        cusps.push_back(json{{"d", std::to_string(r.d)},
                             {"order", rational_to_json(r.order)},
                             {"order24N", r.order24N.get_str()},
                             {"nonnegative", r.nonnegative}});
    }
    return json{{"quotient", eta_to_json(c.quotient)},
                {"weight_times_2", std::to_string(c.weight_times_2)},
                {"level", std::to_string(c.level)},
                {"character",
                 json{{"sign", c.character.sign},
                      {"s", rational_to_json(c.character.s)},
                      {"squarefree_kernel", std::to_string(c.character.squarefree_kernel)},
                      {"zero_radical", std::to_string(c.character.zero_radical)}}},
                {"cusps", cusps},
                {"holomorphic", c.holomorphic}};
}

json hook_diagram_to_json(const HookDiagram& d) {
    json rows = json::array();
    for (const auto& row : d.hooks) {
        json r = json::array();
        for (int h : row) r.push_back(std::to_string(h));
        rows.push_back(r);
    }
    json parts = json::array();
    for (int p : d.partition.parts) parts.push_back(p);
    return json{{"parts", parts}, {"n", d.partition.n}, {"hooks", rows}};
}

std::string decimal_string(const mpq_class& q, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = q.get_num() * scale / q.get_den(); // truncates toward zero
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (neg ? "-" : "") + s;
}

json density_to_json(const DensityReport& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.checkpoints.size(); ++i) {
        rows.push_back(json{{"X", std::to_string(r.checkpoints[i])},
                            {"count", std::to_string(r.counts[i])},
                            {"ratio", rational_to_json(r.ratios[i])},
                            {"ratio_decimal", decimal_string(r.ratios[i], 6)}});
    }
    return json{{"t", std::to_string(r.t)},
                {"M", std::to_string(r.M)},
                {"r", std::to_string(r.r)},
                {"checkpoints", rows},
                {"theorem_covered", r.theorem_covered},
                {"theorem_tag", r.theorem_tag}};
}

json scan_to_json(const std::vector<CongruenceCandidate>& cs) {
    json arr = json::array();
    for (const auto& c : cs) {
        json item{{"A", std::to_string(c.A)},
                  {"B", std::to_string(c.B)},
                  {"M", std::to_string(c.M)},
                  {"tested_through", std::to_string(c.tested_through)}};
        if (c.refuted) {
            item["status"] = "refuted-at-n";
            item["witness_n"] = std::to_string(c.witness_n);
        } else {
            item["status"] = "verified-up-to-X";
            item["witness_n"] = nullptr;
        }
        arr.push_back(item);
    }
    return arr;
}

json nilpotency_to_json(const NilpotencyReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        steps.push_back(json{{"prime", std::to_string(s.prime)},
                             {"nonzero_coeff_count", std::to_string(s.nonzero_count)},
                             {"valid_through", std::to_string(s.valid_through)}});
    }
    json primes = json::array();
    for (u64 p : r.primes) primes.push_back(std::to_string(p));
    return json{{"family_k", r.family_k},
                {"t_exp", r.t_exp},
                {"primes", primes},
                {"precision", std::to_string(r.precision)},
                {"steps", steps},
                {"reached_zero_at", r.reached_zero_at},
                {"window_exhausted", r.window_exhausted},
                {"verdict", r.verdict}};
}

json cong1_to_json(const Cong1Report& r) {
    json primes = json::array();
    for (u64 p : r.primes) primes.push_back(std::to_string(p));
    json witnesses = json::array();
    for (long long n : r.failure_witnesses) witnesses.push_back(std::to_string(n));
    return json{{"primes", primes},
                {"d", r.d},
                {"k", r.k},
                {"n_range", std::to_string(r.n_range)},
                {"precision", std::to_string(r.precision)},
                {"prime_product", std::to_string(r.prime_product)},
                {"n_max_checked", std::to_string(r.n_max_checked)},
                {"window_exhausted", r.window_exhausted},
                {"checked", std::to_string(r.checked)},
                {"failures", std::to_string(r.failures)},
                {"failure_witnesses", witnesses},
                {"checked_div24", std::to_string(r.checked_div24)},
                {"failures_div24", std::to_string(r.failures_div24)}};
}

json congruence_check_to_json(const CongruenceCheck& c) {
    json out{{"modulus", std::to_string(c.modulus)},
             {"through", std::to_string(c.through)},
             {"holds", c.holds}};
    if (c.first_mismatch) {
        out["first_mismatch"] = std::to_string(*c.first_mismatch);
    } else {
        out["first_mismatch"] = nullptr;
    }
    return out;
}

json lcases_to_json(const LCaseReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"d", std::to_string(row.d)},
                            {"r1", row.r1},
                            {"r2", row.r2},
                            {"tpart", std::to_string(row.tpart)},
                            {"case", row.case_id},
                            {"L", rational_to_json(row.L)},
                            {"order", rational_to_json(row.order)},
                            {"sign_agrees", row.sign_agrees},
                            {"proportional", row.proportional},
                            {"case_bound_ok", row.case_bound_ok},
                            {"predicted_zero", row.predicted_zero}});
    }
    return json{{"family", r.family == Family::B ? "B" : "D"},
                {"alpha", r.alpha},
                {"m", std::to_string(r.m)},
                {"k", r.k},
                {"level", std::to_string(r.level)},
                {"rows", rows},
                {"all_nonnegative", r.all_nonnegative},
                {"all_sign_agree", r.all_sign_agree},
                {"all_proportional", r.all_proportional},
                {"all_case_bounds_ok", r.all_case_bounds_ok},
                {"zero_set_matches", r.zero_set_matches},
                {"ok", r.ok()}};
}

} // namespace qseries
