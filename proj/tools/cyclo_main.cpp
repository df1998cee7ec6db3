// Command line driver: every library capability behind one binary with
// canonical JSON output (keys sorted, integers only). Exit codes:
// 0 ok, 2 usage/validation, 3 resource cap, 4 search exhausted,
// 5 internal cross-check failure.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/cyclo.hpp"

using json = nlohmann::json;
using namespace cyclo;

namespace {

using Clock = std::chrono::steady_clock;

json summary_json(const CoeffSummary& s) {
    json j;
    j["min"] = s.min;
    j["max"] = s.max;
    j["present"] = s.present;
    j["gaps"] = s.gaps;
    j["zero_included"] = s.zero_included;
    j["flat"] = s.flat;
    j["jump_one"] = s.jump_one;
    j["convex"] = s.convex;
    j["strongly_convex"] = s.strongly_convex;
    return j;
}

json coeff_array_json(const std::vector<i64>& c, bool rle) {
    if (!rle) return json(c);
    json out = json::array();
    std::size_t i = 0;
    while (i < c.size()) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        out.push_back(json::array({c[i], j - i}));
        i = j;
    }
    return out;
}

void emit_envelope(const std::string& command, const json& params, const json& result,
                   Clock::time_point t0) {
    json env;
    env["command"] = command;
    env["params"] = params;
    env["result"] = result;
    env["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << env.dump() << "\n";
}

struct KRange {
    i64 lo = 0;
    i64 hi = 0;
    bool is_range = false;
};

KRange parse_k(const std::string& text) {
    KRange kr;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            kr.lo = kr.hi = std::stoll(text);
        } else {
            kr.lo = std::stoll(text.substr(0, dots));
            kr.hi = std::stoll(text.substr(dots + 2));
            kr.is_range = true;
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid index argument '" + text + "' (expected K or LO..HI)");
    }
    if (kr.lo < 0 || kr.hi < kr.lo) {
        throw std::invalid_argument("invalid index range '" + text + "'");
    }
    return kr;
}

std::vector<i64> parse_gens(const std::string& text) {
    std::vector<i64> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            gens.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid generator '" + item + "'");
        }
    }
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    return gens;
}

std::string csv_join(const std::vector<i64>& v, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

struct ScanArgs {
    std::string mode;
    bool ternary = false;
    u64 max_n = 0;
    int factors = 3;
    bool distinct_odd = false;
    std::string which = "phi";
    i64 p = 0;
    i64 q_max = 0;
    i64 r_max = 0;
};

void run_scan(const ScanArgs& a, unsigned threads, const std::string& format, Clock::time_point t0) {
    const bool csv = format == "csv";
    json params;
    params["mode"] = a.mode;
    if (a.mode == "jump") {
        if (a.max_n < 1) throw std::invalid_argument("scan jump: --max-n required");
        params["max_n"] = a.max_n;
        params["ternary"] = true;
        JumpSweepResult res = ternary_jump_sweep(a.max_n, threads);
        if (csv) {
            std::cout << "n,first_k,jump\n";
            for (const auto& v : res.violations) {
                std::cout << v.n << "," << v.first_k << "," << v.jump << "\n";
            }
            std::cout << "# scanned=" << res.scanned << " violations=" << res.violations.size()
                      << "\n";
            return;
        }
        for (const auto& v : res.violations) {
            json finding;
            finding["n"] = v.n;
            finding["first_k"] = v.first_k;
            finding["jump"] = v.jump;
            std::cout << finding.dump() << "\n";
        }
        json result;
        result["scanned"] = res.scanned;
        result["violations"] = res.violations.size();
        emit_envelope("scan", params, result, t0);
        return;
    }
    if (a.mode == "convex") {
        if (a.max_n < 1) throw std::invalid_argument("scan convex: --max-n required");
        params["max_n"] = a.max_n;
        params["factors"] = a.factors;
        params["which"] = a.which;
        if (a.distinct_odd) params["distinct_odd"] = true;
        PolyKind kind = a.which == "psi" ? PolyKind::Psi : PolyKind::Phi;
        ConvexSweepResult res = convex_sweep(kind, a.max_n, a.factors, a.distinct_odd, threads);
        if (csv) {
            std::cout << "n,min,max,gaps\n";
            for (const auto& v : res.violations) {
                std::cout << v.n << "," << v.min << "," << v.max << "," << csv_join(v.gaps)
                          << "\n";
            }
            std::cout << "# scanned=" << res.scanned << " violations=" << res.violations.size()
                      << "\n";
            return;
        }
        for (const auto& v : res.violations) {
            json finding;
            finding["n"] = v.n;
            finding["min"] = v.min;
            finding["max"] = v.max;
            finding["gaps"] = v.gaps;
            std::cout << finding.dump() << "\n";
        }
        json result;
        result["scanned"] = res.scanned;
        result["violations"] = res.violations.size();
        emit_envelope("scan", params, result, t0);
        return;
    }
    if (a.mode == "optimal" || a.mode == "height") {
        if (a.p <= 0 || a.q_max <= 0 || a.r_max <= 0) {
            throw std::invalid_argument("scan " + a.mode + ": -p, --q-max, --r-max required");
        }
        params["p"] = a.p;
        params["q_max"] = a.q_max;
        params["r_max"] = a.r_max;
        if (a.mode == "optimal") {
            OptimalScanResult res = optimal_scan(a.p, a.q_max, a.r_max, threads);
            if (csv) {
                std::cout << "n,q,r,min,max\n";
                for (const auto& f : res.findings) {
                    std::cout << f.n << "," << f.q << "," << f.r << "," << f.min << "," << f.max
                              << "\n";
                }
                std::cout << "# pairs_scanned=" << res.pairs_scanned
                          << " optimal=" << res.findings.size() << "\n";
                return;
            }
            for (const auto& f : res.findings) {
                json finding;
                finding["n"] = f.n;
                finding["q"] = f.q;
                finding["r"] = f.r;
                finding["min"] = f.min;
                finding["max"] = f.max;
                std::cout << finding.dump() << "\n";
            }
            json result;
            result["pairs_scanned"] = res.pairs_scanned;
            result["optimal"] = res.findings.size();
            emit_envelope("scan", params, result, t0);
            return;
        }
        HeightScanResult res = height_scan(a.p, a.q_max, a.r_max, threads);
        if (csv) {
            std::cout << "q,r,k,max_abs\n";
            if (res.pairs_scanned > 0) {
                std::cout << res.q << "," << res.r << "," << res.k << "," << res.max_abs << "\n";
            }
            std::cout << "# pairs_scanned=" << res.pairs_scanned << " max_abs=" << res.max_abs
                      << "\n";
            return;
        }
        json result;
        result["max_abs"] = res.max_abs;
        result["q"] = res.q;
        result["r"] = res.r;
        result["k"] = res.k;
        result["pairs_scanned"] = res.pairs_scanned;
        emit_envelope("scan", params, result, t0);
        return;
    }
    throw std::invalid_argument("unknown scan mode '" + a.mode + "'");
}

json family_instance_json(const FamilyInstance& inst, const std::string& kind_token) {
    json j;
    j["kind"] = kind_token;
    j["p"] = inst.p;
    j["q"] = inst.q;
    j["r"] = inst.r;
    j["n"] = inst.n;
    j["k"] = inst.k;
    j["value_at_k"] = inst.value_at_k;
    j["value_at_k_minus_r"] = inst.value_at_k_minus_r;
    if (inst.lehmer_index) {
        j["lehmer_index"] = *inst.lehmer_index;
        j["lehmer_value"] = inst.lehmer_value;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclotomic and inverse-cyclotomic coefficient toolkit"};
    app.require_subcommand(1);

    unsigned threads = 0;
    std::string format = "json";
    bool rle = false;
    app.add_option("--threads", threads, "worker count for scans (0 = all cores)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--rle", rle, "run-length encode coefficient arrays");

    auto* cmd_coeff = app.add_subcommand("coeff", "per-index ternary coefficient");
    cmd_coeff->fallthrough();
    i64 cp = 0, cq = 0, cr = 0;
    std::string k_arg;
    bool verify_oracle = false;
    cmd_coeff->add_option("-p", cp, "smallest prime")->required();
    cmd_coeff->add_option("-q", cq, "middle prime")->required();
    cmd_coeff->add_option("-r", cr, "largest prime")->required();
    cmd_coeff->add_option("-k", k_arg, "index K or range LO..HI")->required();
    cmd_coeff->add_flag("--verify-oracle", verify_oracle, "cross-check against full expansion");

    auto* cmd_poly = app.add_subcommand("poly", "full expansion with summary");
    cmd_poly->fallthrough();
    u64 pn = 0;
    std::string which = "phi";
    cmd_poly->add_option("n", pn, "polynomial index")->required();
    cmd_poly->add_option("--which", which, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));

    auto* cmd_scan = app.add_subcommand("scan", "bulk structure scans");
    cmd_scan->fallthrough();
    ScanArgs sa;
    cmd_scan->add_option("mode", sa.mode, "jump, convex, optimal or height")
        ->required()
        ->check(CLI::IsMember({"jump", "convex", "optimal", "height"}));
    cmd_scan->add_flag("--ternary", sa.ternary, "restrict to three-prime n (jump mode always is)");
    cmd_scan->add_option("--max-n", sa.max_n, "upper bound on n");
    cmd_scan->add_option("--factors", sa.factors, "prime-factor budget for convex mode");
    cmd_scan->add_flag("--distinct-odd", sa.distinct_odd, "count distinct odd primes only");
    cmd_scan->add_option("--which", sa.which, "phi or psi for convex mode")
        ->check(CLI::IsMember({"phi", "psi"}));
    cmd_scan->add_option("-p", sa.p, "fixed smallest prime for optimal/height");
    cmd_scan->add_option("--q-max", sa.q_max, "bound on q");
    cmd_scan->add_option("--r-max", sa.r_max, "bound on r");

    auto* cmd_family = app.add_subcommand("family", "extreme-spread prime families");
    cmd_family->fallthrough();
    std::string kind_token;
    i64 fp = 0;
    i64 flimit = 2'000'000;
    cmd_family->add_option("kind", kind_token, "lemma4 or lemma6")
        ->required()
        ->check(CLI::IsMember({"lemma4", "lemma6"}));
    cmd_family->add_option("-p", fp, "family prime p (>= 5)")->required();
    cmd_family->add_option("--limit", flimit, "search bound for q and r");

    auto* cmd_semigroup = app.add_subcommand("semigroup", "numerical semigroup tools");
    cmd_semigroup->fallthrough();
    std::string action;
    std::string gens_arg;
    u64 indicator_n = 0;
    cmd_semigroup->add_option("action", action, "table, poly or indicator")
        ->check(CLI::IsMember({"table", "poly", "indicator"}));
    cmd_semigroup->add_option("--gens", gens_arg, "comma-separated generators");
    cmd_semigroup->add_option("--indicator", indicator_n, "index n for the indicator test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const u64 cap = default_degree_cap();
    const auto t0 = Clock::now();

    try {
        if (format == "csv" && !cmd_scan->parsed()) {
            throw std::invalid_argument("--format csv is only available for scan");
        }

        if (cmd_coeff->parsed()) {
            KRange kr = parse_k(k_arg);
            KaplanContext ctx = make_kaplan_context(cp, cq, cr);
            std::vector<i64> values = coeff_range(kr.lo, kr.hi, ctx);
            json params;
            params["p"] = cp;
            params["q"] = cq;
            params["r"] = cr;
            params["k"] = k_arg;
            if (verify_oracle) params["verify_oracle"] = true;
            json result;
            result["n"] = ctx.n;
            result["phi"] = ctx.phi;
            if (kr.is_range) {
                result["k_lo"] = kr.lo;
                result["k_hi"] = kr.hi;
                result["values"] = values;
            } else {
                result["k"] = kr.lo;
                result["value"] = values[0];
            }
            if (verify_oracle) {
                CoeffVector f = cyclotomic_poly(static_cast<u64>(ctx.n), cap);
                for (i64 k = kr.lo; k <= kr.hi; ++k) {
                    if (f.at(k) != values[static_cast<std::size_t>(k - kr.lo)]) {
                        throw CrossCheckFailure("coeff: expansion disagrees at k=" +
                                                std::to_string(k));
                    }
                }
                result["verified"] = true;
            }
            emit_envelope("coeff", params, result, t0);
            return 0;
        }

        if (cmd_poly->parsed()) {
            CoeffVector f = which == "psi" ? inverse_cyclotomic_poly(pn, cap)
                                           : cyclotomic_poly(pn, cap);
            json params;
            params["n"] = pn;
            params["which"] = which;
            if (rle) params["rle"] = true;
            json result;
            result["n"] = pn;
            result["degree"] = f.degree();
            result["coefficients"] = coeff_array_json(f.coeffs, rle);
            result["summary"] = summary_json(coeff_set(f));
            emit_envelope("poly", params, result, t0);
            return 0;
        }

        if (cmd_scan->parsed()) {
            run_scan(sa, threads, format, t0);
            return 0;
        }

        if (cmd_family->parsed()) {
            FamilyKind kind =
                kind_token == "lemma6" ? FamilyKind::MoellerMirror : FamilyKind::Moeller;
            FamilyInstance inst = find_family_instance(kind, fp, flimit);
            FamilyCheck chk = verify_family(inst, cap);
            json params;
            params["kind"] = kind_token;
            params["p"] = fp;
            params["limit"] = flimit;
            json result;
            result["instance"] = family_instance_json(inst, kind_token);
            json check;
            check["at_k"] = chk.at_k;
            check["at_k_minus_r"] = chk.at_k_minus_r;
            if (chk.at_lehmer) check["at_lehmer"] = *chk.at_lehmer;
            check["oracle_used"] = chk.oracle_used;
            check["ok"] = chk.ok;
            result["check"] = check;
            u64 phi = euler_phi(static_cast<u64>(inst.n));
            if (phi <= cap) {
                OptimalRangeCheck rng = verify_optimal_range(inst, cap);
                json range;
                range["min"] = rng.summary.min;
                range["max"] = rng.summary.max;
                range["gaps"] = rng.summary.gaps;
                range["window_present"] = rng.window_present;
                range["set_is_full_range"] = rng.set_is_full_range;
                range["window_covers"] = rng.window_covers;
                range["optimal"] = rng.optimal;
                result["range"] = range;
                if (!rng.set_is_full_range || !rng.window_covers || !rng.optimal) {
                    std::cout << json(result).dump() << "\n";
                    throw CrossCheckFailure("family: expansion does not match predicted range");
                }
            } else {
                result["range"] = nullptr;
            }
            if (!chk.ok) throw CrossCheckFailure("family: coefficient check failed");
            emit_envelope("family", params, result, t0);
            return 0;
        }

        if (cmd_semigroup->parsed()) {
            const bool indicator_given = cmd_semigroup->count("--indicator") > 0;
            if (indicator_given && !action.empty() && action != "indicator") {
                throw std::invalid_argument("--indicator conflicts with action '" + action + "'");
            }
            if (indicator_given) action = "indicator";
            if (action.empty()) throw std::invalid_argument("semigroup: action required");
            json params;
            json result;
            if (action == "indicator") {
                if (!indicator_given) {
                    throw std::invalid_argument("semigroup indicator: --indicator N required");
                }
                IndicatorResult ir = indicator_check(indicator_n, cap);
                params["indicator"] = indicator_n;
                result["n"] = indicator_n;
                result["ok"] = ir.ok;
                if (ir.ok) {
                    result["exponents"] = ir.exponents;
                } else {
                    i64 lo = 0, hi = 0;
                    for (i64 s : ir.partial_sums) {
                        lo = std::min(lo, s);
                        hi = std::max(hi, s);
                    }
                    result["sum_min"] = lo;
                    result["sum_max"] = hi;
                }
                emit_envelope("semigroup", params, result, t0);
                return 0;
            }
            if (gens_arg.empty()) {
                throw std::invalid_argument("semigroup " + action + ": --gens required");
            }
            std::vector<i64> gens = parse_gens(gens_arg);
            SemigroupTable table = build_table(gens);
            params["action"] = action;
            params["gens"] = gens_arg;
            if (action == "table") {
                result["generators"] = table.generators;
                result["numerical"] = table.numerical();
                result["bound"] = table.bound;
                if (table.numerical()) {
                    result["frobenius"] = *table.frobenius;
                    std::vector<i64> gaps;
                    for (i64 x = 0; x <= *table.frobenius; ++x) {
                        if (!table.contains(x)) gaps.push_back(x);
                    }
                    result["gaps"] = gaps;
                } else {
                    result["frobenius"] = nullptr;
                    i64 members = 0;
                    for (i64 x = 0; x <= table.bound; ++x) members += table.contains(x) ? 1 : 0;
                    result["member_count"] = members;
                }
                emit_envelope("semigroup", params, result, t0);
                return 0;
            }
            // action == "poly"
            CoeffVector f = semigroup_polynomial(table);
            if (rle) params["rle"] = true;
            result["generators"] = table.generators;
            result["frobenius"] = *table.frobenius;
            result["degree"] = f.degree();
            result["coefficients"] = coeff_array_json(f.coeffs, rle);
            result["summary"] = summary_json(coeff_set(f));
            emit_envelope("semigroup", params, result, t0);
            return 0;
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const CrossCheckFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const Overflow& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const InexactDivision& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
