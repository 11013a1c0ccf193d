// lcdlp — exact-arithmetic LP toolkit for LCD-code parameter feasibility.
//
// Subcommands: feasible, dmax, kmax, analyze, jwe, search, compare, molien,
// group, export-polytope.  Exit codes: 0 success (INFEASIBLE is a valid
// answer), 1 internal/consistency error, 2 usage error, 3 budget exceeded.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdlp/geometry.hpp"
#include "lcdlp/invariants.hpp"
#include "lcdlp/lp.hpp"

namespace {

using nlohmann::json;
using namespace lcdlp;

constexpr const char* kToolVersion = "1.0.0";

struct Options {
    std::string model = "joint";
    bool strict_paper = false;
    bool no_prop2 = false;
    int jobs = 1;
    std::string ledger_path;
    std::string out_path;
    std::string format = "text";
    long dim_threshold = 6;
    double budget = 0;  // seconds per LP solve; 0 = unlimited
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--model", opt.model, "constraint model")
        ->check(CLI::IsMember({"joint", "restricted"}));
    cmd->add_flag("--strict-paper", opt.strict_paper,
                  "drop the M(n,0,0,0)=1 normalization row");
    cmd->add_flag("--no-prop2", opt.no_prop2,
                  "drop the MacWilliams fixed-point equations");
    cmd->add_option("--jobs", opt.jobs, "worker threads for table generation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--ledger", opt.ledger_path,
                    "JSON-lines results ledger (default: $LCD_LEDGER)");
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd->add_option("--format", opt.format, "table output format")
        ->check(CLI::IsMember({"csv", "text", "json"}));
    cmd->add_option("--dim-threshold", opt.dim_threshold,
                    "max polytope dimension for geometry enumeration");
    cmd->add_option("--budget", opt.budget, "per-solve time budget in seconds");
}

std::string flags_string(const Options& opt) {
    std::string s = "normalization=";
    s += opt.strict_paper ? '0' : '1';
    s += ",prop2=";
    s += opt.no_prop2 ? '0' : '1';
    return s;
}

ConstraintSystem build_system(const Options& opt, int n, int k, int d) {
    if (opt.model == "restricted") return build_restricted_system(n, k, d);
    JointOptions jo;
    jo.use_prop2 = !opt.no_prop2;
    jo.use_normalization = !opt.strict_paper;
    return build_joint_system(n, k, d, jo);
}

SolveControl make_control(const Options& opt) {
    SolveControl ctl;
    if (opt.budget > 0)
        ctl.deadline = std::chrono::steady_clock::now() +
                       std::chrono::microseconds(static_cast<long long>(opt.budget * 1e6));
    return ctl;
}

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Writes command output to --out if given, else stdout.
void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
        f << text;
    }
}

// Append-only JSON-lines results ledger keyed by (model, flags, n, k, d).
// A re-run that disagrees with a stored status is a hard error.
class Ledger {
public:
    explicit Ledger(std::string path) : path_(std::move(path)) {
        std::ifstream f(path_);
        std::string line;
        while (f && std::getline(f, line)) {
            if (line.empty()) continue;
            json e = json::parse(line);
            const std::string key = make_key(e["model"], e["flags"], e["n"], e["k"], e["d"]);
            const bool feasible = e["status"] == "feasible";
            auto it = entries_.find(key);
            if (it != entries_.end() && it->second != feasible)
                throw std::runtime_error("ledger conflict for key " + key + " in " + path_);
            entries_[key] = feasible;
        }
    }

    std::optional<bool> lookup(const std::string& model, const std::string& flags, int n, int k,
                               int d) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find(make_key(model, flags, n, k, d));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void record(const std::string& model, const std::string& flags, int n, int k, int d,
                bool feasible, std::optional<long> dimension) {
        std::lock_guard<std::mutex> lock(mu_);
        const std::string key = make_key(model, flags, n, k, d);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (it->second != feasible)
                throw std::runtime_error("ledger conflict: stored status for " + key +
                                         " disagrees with this run");
            return;  // already recorded, append-only: keep the original line
        }
        entries_[key] = feasible;
        json e = {{"model", model},
                  {"flags", flags},
                  {"n", n},
                  {"k", k},
                  {"d", d},
                  {"status", feasible ? "feasible" : "infeasible"},
                  {"dimension", nullptr},
                  {"timestamp", iso_timestamp()},
                  {"tool_version", kToolVersion}};
        if (dimension) e["dimension"] = *dimension;
        std::ofstream f(path_, std::ios::app);
        if (!f) throw std::runtime_error("cannot open ledger: " + path_);
        f << e.dump() << "\n";
    }

private:
    static std::string make_key(const std::string& model, const std::string& flags, int n, int k,
                                int d) {
        return model + "|" + flags + "|" + std::to_string(n) + "," + std::to_string(k) + "," +
               std::to_string(d);
    }

    std::string path_;
    std::mutex mu_;
    std::map<std::string, bool> entries_;
};

std::unique_ptr<Ledger> open_ledger(const Options& opt) {
    std::string path = opt.ledger_path;
    if (path.empty()) {
        const char* env = std::getenv("LCD_LEDGER");
        if (env) path = env;
    }
    if (path.empty()) return nullptr;
    return std::make_unique<Ledger>(path);
}

// Decides feasibility of one triple, consulting and updating the ledger.
// Known-code shortcuts: d=1 always has an LCD code (rows e_1..e_k give
// G G^T = I); for odd n the [n, n-1, 2] parity-check code is LCD.
bool cell_feasible(const Options& opt, Ledger* ledger, int n, int k, int d) {
    check_parameters(n, k, d);
    const std::string flags = flags_string(opt);
    if (ledger)
        if (auto hit = ledger->lookup(opt.model, flags, n, k, d)) return *hit;
    bool feasible;
    if (d == 1) {
        feasible = true;
    } else if (d == 2 && k == n - 1 && n % 2 == 1) {
        feasible = true;
    } else {
        auto res = solve(build_system(opt, n, k, d), std::nullopt, Sense::Maximize,
                         make_control(opt));
        feasible = res.status != LpStatus::Infeasible;
    }
    if (ledger) ledger->record(opt.model, flags, n, k, d, feasible, std::nullopt);
    return feasible;
}

// Runs fn(0..ntasks-1) on a pool of `jobs` threads; rethrows the first
// exception (BudgetTimeout wins so callers can map it to exit code 3).
void run_pool(int jobs, std::size_t ntasks, const std::function<void(std::size_t)>& fn) {
    std::atomic<std::size_t> next{0};
    std::mutex emu;
    std::exception_ptr first_error;
    bool timed_out = false;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= ntasks) return;
            try {
                fn(i);
            } catch (const BudgetTimeout&) {
                std::lock_guard<std::mutex> lock(emu);
                timed_out = true;
                if (!first_error) first_error = std::current_exception();
            } catch (...) {
                std::lock_guard<std::mutex> lock(emu);
                if (!first_error || timed_out) {
                    first_error = std::current_exception();
                    timed_out = false;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::max(1, std::min<int>(jobs, static_cast<int>(ntasks)));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct BoundTable {
    std::string kind;  // "dmax" or "kmax"
    int n_max = 0;
    // dmax: (n,k) -> d_max; kmax: (n,d) -> k_max.  nullopt = UNKNOWN (budget).
    std::map<std::pair<int, int>, std::optional<int>> entries;
    std::vector<std::string> gaps;  // non-monotone k-feasibility patterns
};

BoundTable compute_dmax(const Options& opt, Ledger* ledger, int n_max) {
    BoundTable table;
    table.kind = "dmax";
    table.n_max = n_max;
    std::vector<std::pair<int, int>> tasks;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) tasks.emplace_back(n, k);
    std::mutex mu;
    run_pool(opt.jobs, tasks.size(), [&](std::size_t i) {
        const auto [n, k] = tasks[i];
        std::optional<int> best;
        try {
            for (int d = 1; d <= n; ++d) {
                if (!cell_feasible(opt, ledger, n, k, d)) break;
                best = d;
            }
        } catch (const BudgetTimeout&) {
            best = std::nullopt;
            std::lock_guard<std::mutex> lock(mu);
            table.entries[{n, k}] = best;
            throw;
        }
        std::lock_guard<std::mutex> lock(mu);
        table.entries[{n, k}] = best;
    });
    return table;
}

BoundTable compute_kmax(const Options& opt, Ledger* ledger, int n_max) {
    BoundTable table;
    table.kind = "kmax";
    table.n_max = n_max;
    std::vector<std::pair<int, int>> tasks;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 1; d <= n; ++d) tasks.emplace_back(n, d);
    std::mutex mu;
    run_pool(opt.jobs, tasks.size(), [&](std::size_t i) {
        const auto [n, d] = tasks[i];
        // Downward closedness in k is only conjectured: test every k.
        std::vector<bool> ok(n + 1, false);
        try {
            for (int k = 1; k <= n; ++k) ok[k] = cell_feasible(opt, ledger, n, k, d);
        } catch (const BudgetTimeout&) {
            std::lock_guard<std::mutex> lock(mu);
            table.entries[{n, d}] = std::nullopt;
            throw;
        }
        std::optional<int> best = 0;  // 0 = no feasible k; nullopt is reserved for UNKNOWN
        for (int k = 1; k <= n; ++k)
            if (ok[k]) best = k;
        std::lock_guard<std::mutex> lock(mu);
        table.entries[{n, d}] = best;
        for (int k = 1; k < n; ++k)
            for (int k2 = k + 1; k2 <= n; ++k2)
                if (!ok[k] && ok[k2])
                    table.gaps.push_back("n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                         ": k=" + std::to_string(k) + " infeasible but k=" +
                                         std::to_string(k2) + " feasible");
    });
    return table;
}

std::string cell_text(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("?");
}

std::string render_table(const BoundTable& t, const std::string& format) {
    const std::string col = t.kind == "dmax" ? "k" : "d";
    std::ostringstream out;
    if (format == "csv") {
        out << "n," << col << "," << t.kind << "\n";
        for (const auto& [key, v] : t.entries)
            out << key.first << "," << key.second << "," << cell_text(v) << "\n";
    } else if (format == "json") {
        json j;
        j["kind"] = t.kind;
        j["n_max"] = t.n_max;
        j["cells"] = json::array();
        for (const auto& [key, v] : t.entries) {
            json c = {{"n", key.first}, {col, key.second}};
            if (v)
                c[t.kind] = *v;
            else
                c[t.kind] = nullptr;
            j["cells"].push_back(c);
        }
        j["gaps"] = t.gaps;
        out << j.dump(2) << "\n";
    } else {
        out << "n\\" << col;
        for (int c = 1; c <= t.n_max; ++c) out << "\t" << c;
        out << "\n";
        for (int n = 1; n <= t.n_max; ++n) {
            out << n;
            for (int c = 1; c <= n; ++c) {
                auto it = t.entries.find({n, c});
                out << "\t" << (it == t.entries.end() ? "" : cell_text(it->second));
            }
            out << "\n";
        }
        if (!t.gaps.empty()) {
            out << "gaps:\n";
            for (const auto& g : t.gaps) out << "  " << g << "\n";
        }
    }
    return out.str();
}

int cmd_feasible(const Options& opt, int n, int k, int d, bool want_dim) {
    auto ledger = open_ledger(opt);
    const auto s = build_system(opt, n, k, d);
    const auto ctl = make_control(opt);
    auto res = solve(s, std::nullopt, Sense::Maximize, ctl);
    const bool feasible = res.status != LpStatus::Infeasible;
    std::ostringstream out;
    out << (feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
    std::optional<long> dim;
    if (want_dim && feasible) {
        auto sum = summarize(s, ctl);
        dim = sum.dimension;
        out << "dimension: " << sum.dimension << "\n";
    }
    if (ledger) ledger->record(opt.model, flags_string(opt), n, k, d, feasible, dim);
    emit(opt, out.str());
    return 0;
}

int cmd_table(const Options& opt, const std::string& kind, int n_max) {
    auto ledger = open_ledger(opt);
    int code = 0;
    BoundTable table;
    try {
        table = kind == "dmax" ? compute_dmax(opt, ledger.get(), n_max)
                               : compute_kmax(opt, ledger.get(), n_max);
    } catch (const BudgetTimeout&) {
        std::cerr << "budget exceeded; incomplete cells rendered as ?\n";
        return 3;
    }
    emit(opt, render_table(table, opt.format));
    return code;
}

int cmd_analyze(const Options& opt, int n, int k, int d) {
    const auto s = build_system(opt, n, k, d);
    const auto ctl = make_control(opt);
    auto sum = summarize(s, ctl);
    if (sum.empty) {
        std::cerr << "polytope empty: (" << n << "," << k << "," << d << ") is infeasible\n";
        return 2;
    }
    PolytopeGeometry geo;
    try {
        geo = double_description(s, sum, opt.dim_threshold, 100000, ctl);
    } catch (const DimensionTooHigh& e) {
        std::cerr << e.what() << "; raise --dim-threshold to analyze this polytope\n";
        return 2;
    }
    json j = geometry_report_json(s, geo);
    j["conjecture2_candidate"] = geo.integral_point_count == 0;
    emit(opt, j.dump(2) + "\n");
    return 0;
}

int cmd_jwe(const Options& opt, const std::string& file) {
    BinaryCode code = [&] {
        if (file == "-") return read_generator_matrix(std::cin);
        std::ifstream f(file);
        if (!f) throw std::invalid_argument("cannot open generator file: " + file);
        return read_generator_matrix(f);
    }();
    const int n = code.n;
    const auto je = joint_enumerator(code, dual(code));
    const CompositionIndex idx(n);
    std::ostringstream out;
    const int d_actual = std::min(min_distance(code), n);
    out << "n=" << n << " k=" << code.k << " d=" << d_actual << "\n";
    out << "LCD: " << (is_lcd(code) ? "true" : "false") << "\n";
    out << "joint weight enumerator (nonzero coefficients):\n";
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (je.coeffs[i] != 0) {
            const auto& c = idx.at(i);
            out << "  M(" << c.n00 << "," << c.n01 << "," << c.n10 << "," << c.n11
                << ") = " << je.coeffs[i].get_str() << "\n";
        }

    bool prop1 = true;
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx.at(i).n11 % 2 == 1 && je.coeffs[i] != 0) prop1 = false;
    out << "prop1 (odd-pair coefficients vanish): " << (prop1 ? "PASS" : "FAIL") << "\n";

    const RationalMatrix mw = macwilliams_monomial_matrix(n);
    bool prop2 = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational acc = 0;
        for (std::size_t j2 = 0; j2 < idx.size(); ++j2)
            if (mw(i, j2) != 0 && je.coeffs[j2] != 0) acc += mw(i, j2) * Rational(je.coeffs[j2]);
        if (acc != Rational(je.coeffs[i])) prop2 = false;
    }
    out << "prop2 (MacWilliams fixed point): " << (prop2 ? "PASS" : "FAIL") << "\n";

    if (n % 2 == 0)
        out << "prop3 (sign invariance, n even): PASS\n";
    else
        out << "prop3: SKIP (n odd)\n";

    Options joint_opt = opt;
    joint_opt.model = "joint";
    const auto s = build_system(joint_opt, n, code.k, d_actual);
    auto pt = enumerator_point(s, je);
    const bool member = pt && satisfies(s, *pt);
    out << "membership in K(" << n << "," << code.k << "," << d_actual
        << "): " << (member ? "PASS" : "FAIL") << "\n";
    emit(opt, out.str());
    return 0;
}

int cmd_search(const Options& opt, int n, int k, int d) {
    auto found = exhaustive_lcd_search(n, k, d);
    if (!found) {
        emit(opt, "none exists\n");
        return 0;
    }
    std::ostringstream out;
    write_generator_matrix(*found, out);
    emit(opt, out.str());
    // soundness cross-check: the LP relaxation must agree FEASIBLE
    auto res = solve(build_system(opt, n, k, d), std::nullopt, Sense::Maximize, make_control(opt));
    if (res.status == LpStatus::Infeasible) {
        std::cerr << "fatal: oracle found a code but the LP reports INFEASIBLE for (" << n << ","
                  << k << "," << d << ")\n";
        return 1;
    }
    return 0;
}

int cmd_compare(const Options& opt, int n_max) {
    auto ledger = open_ledger(opt);
    Options joint_opt = opt, res_opt = opt;
    joint_opt.model = "joint";
    res_opt.model = "restricted";
    BoundTable tj, tr;
    try {
        tj = compute_dmax(joint_opt, ledger.get(), n_max);
        tr = compute_dmax(res_opt, ledger.get(), n_max);
    } catch (const BudgetTimeout&) {
        std::cerr << "budget exceeded during table generation\n";
        return 3;
    }
    std::ostringstream out;
    bool violation = false;
    if (opt.format == "csv") {
        out << "n,k,dmax_joint,dmax_restricted\n";
        for (const auto& [key, vj] : tj.entries)
            out << key.first << "," << key.second << "," << cell_text(vj) << ","
                << cell_text(tr.entries[key]) << "\n";
    } else {
        out << "n\\k";
        for (int c = 1; c <= n_max; ++c) out << "\t" << c;
        out << "\n";
        for (int n = 1; n <= n_max; ++n) {
            out << n;
            for (int k = 1; k <= n; ++k) {
                const auto vj = tj.entries[{n, k}];
                const auto vr = tr.entries[{n, k}];
                out << "\t" << cell_text(vj);
                if (vj && vr && *vj != *vr) out << " (" << *vr << ")";
            }
            out << "\n";
        }
    }
    for (const auto& [key, vj] : tj.entries) {
        const auto vr = tr.entries[key];
        if (vj && vr && *vj > *vr) {
            violation = true;
            std::cerr << "violation: dmax_joint(" << key.first << "," << key.second << ") = "
                      << *vj << " > dmax_restricted = " << *vr << "\n";
        }
    }
    emit(opt, out.str());
    return violation ? 1 : 0;
}

int cmd_molien(const Options& opt, int max_degree) {
    auto g = close_group(make_group_generators());
    auto s = molien_series(g, max_degree);
    auto want = molien_closed_form(max_degree);
    std::ostringstream out;
    for (int d = 0; d <= max_degree; ++d) out << d << ": " << to_string(s.coefficients[d]) << "\n";
    out << "closed form (1+t^2+2t^4)/((1-t^2)^3(1-t^6)): " << (s == want ? "PASS" : "FAIL")
        << "\n";
    emit(opt, out.str());
    return s == want ? 0 : 1;
}

int cmd_group(const Options& opt) {
    auto g = close_group(make_group_generators());
    std::ostringstream out;
    out << "order: " << g.elements.size() << "\n";
    for (std::size_t e = 0; e < g.elements.size(); ++e) {
        out << "element " << e << ":\n";
        for (std::size_t i = 0; i < 4; ++i) {
            out << " ";
            for (std::size_t j = 0; j < 4; ++j) out << " " << to_string(g.elements[e](i, j));
            out << "\n";
        }
    }
    emit(opt, out.str());
    return 0;
}

int cmd_export(const Options& opt, int n, int k, int d) {
    const auto s = build_system(opt, n, k, d);
    std::ostringstream out;
    export_h_representation(s, out);
    emit(opt, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact LP feasibility toolkit for LCD-code parameters"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;
    int n = 0, k = 0, d = 0, n_max = 0, max_degree = 20;
    bool want_dim = false;
    std::string gen_file;

    auto add_nkd = [&](CLI::App* c) {
        c->add_option("--n", n, "code length")->required();
        c->add_option("--k", k, "code dimension")->required();
        c->add_option("--d", d, "minimum distance")->required();
    };

    auto* c_feasible = app.add_subcommand("feasible", "decide feasibility of one (n,k,d)");
    add_nkd(c_feasible);
    c_feasible->add_flag("--dim", want_dim, "also report the polytope dimension");
    add_common_flags(c_feasible, opt);

    auto* c_dmax = app.add_subcommand("dmax", "largest feasible d per (n,k)");
    c_dmax->add_option("--nmax", n_max, "largest length")->required();
    add_common_flags(c_dmax, opt);

    auto* c_kmax = app.add_subcommand("kmax", "largest feasible k per (n,d)");
    c_kmax->add_option("--nmax", n_max, "largest length")->required();
    add_common_flags(c_kmax, opt);

    auto* c_analyze = app.add_subcommand("analyze", "polytope geometry report");
    add_nkd(c_analyze);
    add_common_flags(c_analyze, opt);

    auto* c_jwe = app.add_subcommand("jwe", "joint weight enumerator of a generator matrix");
    c_jwe->add_option("file", gen_file, "generator matrix file ('-' for stdin)")->required();
    add_common_flags(c_jwe, opt);

    auto* c_search = app.add_subcommand("search", "exhaustive LCD code search");
    add_nkd(c_search);
    add_common_flags(c_search, opt);

    auto* c_compare = app.add_subcommand("compare", "dmax under both models");
    c_compare->add_option("--nmax", n_max, "largest length")->required();
    add_common_flags(c_compare, opt);

    auto* c_molien = app.add_subcommand("molien", "Molien series of the invariance group");
    c_molien->add_option("--max-degree", max_degree, "truncation degree");
    add_common_flags(c_molien, opt);

    auto* c_group = app.add_subcommand("group", "list the invariance group elements");
    add_common_flags(c_group, opt);

    auto* c_export = app.add_subcommand("export-polytope", "cdd-style H-representation");
    add_nkd(c_export);
    add_common_flags(c_export, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_feasible->parsed()) return cmd_feasible(opt, n, k, d, want_dim);
        if (c_dmax->parsed()) return cmd_table(opt, "dmax", n_max);
        if (c_kmax->parsed()) return cmd_table(opt, "kmax", n_max);
        if (c_analyze->parsed()) return cmd_analyze(opt, n, k, d);
        if (c_jwe->parsed()) return cmd_jwe(opt, gen_file);
        if (c_search->parsed()) return cmd_search(opt, n, k, d);
        if (c_compare->parsed()) return cmd_compare(opt, n_max);
        if (c_molien->parsed()) return cmd_molien(opt, max_degree);
        if (c_group->parsed()) return cmd_group(opt);
        if (c_export->parsed()) return cmd_export(opt, n, k, d);
    } catch (const BudgetTimeout&) {
        std::cerr << "budget exceeded\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
