#include "qcf/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <regex>
#include <sstream>

#include "qcf/json_io.hpp"

namespace qcf {

namespace {

// ---- flag parsing -----------------------------------------------------------

std::vector<Exponent> parse_list(const std::string& text, const std::string& flag) {
    std::vector<Exponent> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError(flag + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

/// Accepts q, -q, q^7, -q^(1/4), q^(-3/2).
Monomial parse_monomial(const std::string& text, const std::string& flag) {
    static const std::regex re(R"(\s*([+-]?)\s*q(?:\^(?:\((-?\d+)(?:/(\d+))?\)|(-?\d+)))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw DomainError(flag + ": cannot read monomial '" + text + "'");
    Monomial out{m[1] == "-" ? -1 : 1, 1, 1};
    if (m[2].matched) {
        out.num = std::stoll(m[2]);
        if (m[3].matched) out.denom = std::stoll(m[3]);
    } else if (m[4].matched) {
        out.num = std::stoll(m[4]);
    }
    if (out.denom <= 0) throw DomainError(flag + ": denominator must be positive");
    return out;
}

std::pair<Exponent, int> parse_class(const std::string& text) {
    const auto colon = text.find(':');
    auto values = parse_list(colon == std::string::npos ? text : text.substr(0, colon) + "," + text.substr(colon + 1),
                             "--class");
    if (values.size() == 1) values.push_back(1);
    if (values.size() != 2) throw DomainError("--class: expected residue:colors, got '" + text + "'");
    return {values[0], static_cast<int>(values[1])};
}

Family parse_family(const std::string& s) {
    if (s == "X" || s == "x") return Family::X;
    if (s == "Y" || s == "y") return Family::Y;
    throw DomainError("--family: expected X or Y, got '" + s + "'");
}

/// Default series order in whole powers of q, overridable from the environment.
Exponent env_order(Exponent fallback) {
    if (const char* env = std::getenv("QCF_DEFAULT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

// ---- reporting --------------------------------------------------------------

struct CaseResult {
    std::string module;
    std::string id;
    std::string status;  // pass, fail, refuted-as-printed, error
    std::string summary;
    Json details;

    bool ok() const { return status == "pass"; }
};

std::string q_window(Exponent num, Exponent denom) {
    if (denom == 1 || num % denom == 0) return "q^" + std::to_string(num / denom);
    return "q^(" + std::to_string(num) + "/" + std::to_string(denom) + ")";
}

std::string mismatch_text(const std::optional<Mismatch>& m, Exponent denom) {
    if (!m) return "";
    return "first mismatch at " + q_window(m->exp_num, denom) + ": " + m->lhs.get_str() + " vs " + m->rhs.get_str();
}

class Reporter {
public:
    Reporter(std::string command, bool json, bool timing) : command_(std::move(command)), json_(json), timing_(timing) {}

    void add(CaseResult r) { cases_.push_back(std::move(r)); }
    void set_default(const std::string& key, Json value) { defaults_[key] = std::move(value); }

    int finish(std::ostream& out) const {
        bool all_ok = true, only_refuted = true;
        for (const auto& c : cases_) {
            if (c.ok()) continue;
            all_ok = false;
            if (c.status != "refuted-as-printed") only_refuted = false;
        }
        const std::string status = all_ok ? "pass" : (only_refuted ? "refuted-as-printed" : "fail");
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
        if (json_) {
            Json cases = Json::array();
            for (const auto& c : cases_)
                cases.push_back({{"module", c.module}, {"id", c.id}, {"status", c.status}, {"details", c.details}});
            Json j{{"schema_version", kReportSchemaVersion},
                   {"command", command_},
                   {"status", status},
                   {"defaults", defaults_},
                   {"case_count", cases_.size()},
                   {"cases", std::move(cases)}};
            if (timing_) j["timing_ms"] = elapsed;
            out << j.dump(2) << '\n';
        } else {
            std::size_t passed = 0;
            for (const auto& c : cases_) {
                passed += c.ok();
                out << (c.ok() ? "PASS " : "FAIL ") << c.module << ' ' << c.id;
                if (!c.ok() && c.status != "fail") out << " [" << c.status << ']';
                if (!c.summary.empty()) out << "  " << c.summary;
                out << '\n';
            }
            out << status << ": " << passed << '/' << cases_.size() << " cases passed";
            if (timing_) out << " in " << elapsed << " ms";
            out << '\n';
        }
        return all_ok ? 0 : 1;
    }

private:
    std::string command_;
    bool json_;
    bool timing_;
    Json defaults_ = Json::object();
    std::vector<CaseResult> cases_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CaseResult theta_result(const IdentityReport& r, bool expect_failure = false) {
    const bool ok = expect_failure ? (!r.error && !r.holds()) : r.holds();
    std::string summary = r.error ? *r.error
                                  : (r.holds() ? "exact through " + q_window(r.order, r.lattice)
                                               : mismatch_text(r.comparison.first_mismatch, r.lattice));
    if (expect_failure) summary = "negative control: " + summary;
    return {"identity", r.id, r.error ? "error" : (ok ? "pass" : "fail"), summary, to_json(r)};
}

CaseResult cf_result(const CFCertificate& c) {
    std::string summary = c.certified ? "depth " + std::to_string(*c.depth) + " matches through " +
                                            q_window(c.order, c.denom)
                                      : "no depth up to " + std::to_string(c.agreement.size() - 1) + " matches; " +
                                            mismatch_text(c.first_mismatch, c.denom);
    return {"cf", c.id, c.certified ? "pass" : "fail", summary, to_json(c)};
}

CaseResult row_result(const RowReport& r) {
    std::string summary = r.status + " mod " + std::to_string(r.row.modulus) + " residue " +
                          std::to_string(r.row.residue);
    if (r.vanishing_orientation)
        summary += r.label_consistent ? ", orientation matches the label" : ", orientation contradicts the label";
    if (r.vanishing_orientation && !r.passed()) summary += ", routes disagree";
    return {"vanishing", r.row.label, r.passed() ? "pass" : (r.vanishing_orientation ? "fail" : "refuted-as-printed"),
            summary, to_json(r)};
}

CaseResult dissection_result(const Dissection& d, bool with_terms) {
    std::ostringstream id;
    id << "x=" << d.spec.x << ",y=" << d.spec.y << ",z=" << d.spec.z << ",w=" << d.spec.w;
    std::string summary = d.identity.equal() ? std::to_string(d.terms.size()) + " terms, exact through q^" +
                                                   std::to_string(d.identity.window)
                                             : mismatch_text(d.identity.first_mismatch, 1);
    return {"dissection", id.str(), d.identity.equal() ? "pass" : "fail", summary, to_json(d, with_terms)};
}

CaseResult partition_result(const PartitionReport& r) {
    std::string summary;
    if (!r.failures.empty()) summary = "nonzero at n=" + std::to_string(r.failures.front().n);
    for (const auto& s : r.series)
        if (!s.holds() && summary.empty()) summary = "series check failed: " + s.id;
    if (summary.empty()) summary = "zero for n <= " + std::to_string(r.n_max) + ", " + std::to_string(r.series.size()) +
                                   " series checks exact";
    return {"partition", r.name, r.holds() ? "pass" : "fail", summary, to_json(r)};
}

CaseResult modular_result(const ModularReport& r) {
    std::ostringstream id, summary;
    id << (r.family == Family::X ? "X" : "Y") << r.index << " n=" << r.n;
    summary << "sign stated " << r.stated_sign << " derived " << r.derived_sign << "; series "
            << (r.series.equal() ? "equal" : mismatch_text(r.series.first_mismatch, 1));
    if (r.negated_argument_check)
        summary << "; negated-argument pairing " << (r.negated_argument_check->equal() ? "equal" : "differs");
    return {"modular", id.str(), r.holds() ? "pass" : "fail", summary.str(), to_json(r)};
}

// ---- suites -------------------------------------------------------------

struct Orders {
    Exponent theta_q;   // whole powers of q for identities and certificates
    Exponent y_theta_q;
    Exponent dissection;
    Exponent bound;
    Exponent n_max;
};

void run_theta(Reporter& rep, const std::vector<std::string>& ids, std::optional<Exponent> order_q, bool negative) {
    std::vector<std::string> todo = ids;
    if (todo.empty())
        for (const auto& c : theorem_cases()) todo.push_back(c.id);
    for (const auto& id : todo) {
        const auto& c = theorem_case(id);
        const Exponent order = order_q ? *order_q * c.lattice : c.default_order;
        rep.add(theta_result(verify_identity(c, order)));
        if (negative) rep.add(theta_result(verify_identity(negative_control(id), order), true));
    }
}

void run_cf(Reporter& rep, const std::vector<std::string>& ids, Exponent order_q, int max_depth, bool corrupt) {
    std::vector<std::string> todo = ids;
    if (todo.empty())
        for (const auto& c : named_cfs()) todo.push_back(c.id);
    for (const auto& id : todo) {
        NamedCF cf = named_cf(id);
        if (corrupt) {
            cf.cf.beta_num += 1;
            cf.id += "/beta+1";
        }
        rep.add(cf_result(certify_cf(cf, order_q * cf.lattice(), max_depth)));
    }
}

void run_tables(Reporter& rep, const std::string& which, Exponent bound) {
    std::vector<TableRow> rows;
    if (which == "theorems" || which == "all") rows = theorem_rows();
    if (which == "X" || which == "all") {
        auto r = table_rows(Table::X);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    if (which == "Y" || which == "all") {
        auto r = table_rows(Table::Y);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    if (rows.empty()) throw DomainError("--table: expected X, Y, theorems or all");
    for (const auto& row : rows) rep.add(row_result(verify_row(row, bound)));
}

int resolve_partition_theorem(const std::string& s) {
    if (s == "D" || s == "4.1" || s == "1") return 1;
    if (s == "K" || s == "4.2" || s == "2") return 2;
    throw DomainError("--theorem: expected D (4.1) or K (4.2), got '" + s + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series workbench: products, theta functions, continued fractions, identities, "
                 "vanishing coefficients and colored partitions."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string command_line;
    for (int i = 1; i < argc; ++i) command_line += (i > 1 ? " " : "") + std::string(argv[i]);

    bool json = false, timing = false;
    std::function<int()> action;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "Machine-readable output");
        sub->add_flag("--timing", timing, "Include wall-clock time (makes output nondeterministic)");
    };

    // expand
    auto* expand = app.add_subcommand("expand", "Print a product, theta function or named fraction as a JSON series");
    std::string e_num, e_den, e_theta, e_cf;
    bool e_text = false, e_num_set = false;
    Exponent e_mod = 0, e_denom = 1;
    std::optional<Exponent> e_order;
    expand->add_option("--num", e_num, "Numerator exponents a of (q^a; q^mod)")->each([&](const std::string&) {
        e_num_set = true;
    });
    expand->add_option("--den", e_den, "Denominator exponents");
    expand->add_option("--mod", e_mod, "Common modulus of the product");
    expand->add_option("--denom", e_denom, "Lattice denominator of --num/--den/--mod exponents");
    expand->add_option("--theta", e_theta, "Theta function f(a, b) given as 'a;b', e.g. '-q^8;-q^26'");
    expand->add_option("--cf", e_cf, "Named fraction X1..X8 or Y1..Y8 (closed form with prefactor)");
    expand->add_option("--order", e_order, "Exact through q^order (whole powers of q)");
    expand->add_flag("--text", e_text, "Human-readable rendering instead of JSON");
    expand->callback([&] {
        action = [&]() -> int {
            const Exponent order_q = e_order.value_or(env_order(40));
            LatticeSeries s = LatticeSeries::zero(1, 0);
            const int picked = (e_num_set || !e_den.empty() || e_mod != 0) + !e_theta.empty() + !e_cf.empty();
            if (picked != 1) throw DomainError("expand: give exactly one of --num/--den/--mod, --theta or --cf");
            if (!e_cf.empty()) {
                const auto& cf = named_cf(e_cf);
                s = named_cf_product(cf, order_q * cf.lattice());
            } else if (!e_theta.empty()) {
                const auto semi = e_theta.find(';');
                if (semi == std::string::npos) throw DomainError("--theta: expected 'a;b'");
                ThetaSpec t{parse_monomial(e_theta.substr(0, semi), "--theta"),
                            parse_monomial(e_theta.substr(semi + 1), "--theta")};
                const Exponent d = std::lcm(t.a.denom, t.b.denom);
                s = theta_sum(t, d, order_q * d);
            } else {
                if (e_mod <= 0) throw DomainError("--mod: must be positive");
                if (e_denom <= 0) throw DomainError("--denom: must be positive");
                auto spec = ProductSpec::quotient(parse_list(e_num, "--num"), parse_list(e_den, "--den"), e_mod, e_denom);
                s = pochhammer(spec, order_q * e_denom);
            }
            if (e_text)
                out << to_string(s, 1000) << '\n';
            else
                out << to_json(s).dump() << '\n';
            return 0;
        };
    });

    // verify-theta
    auto* vtheta = app.add_subcommand("verify-theta", "Verify the 32 identities for 1/X_i +- X_i and 1/Y_i +- Y_i");
    std::vector<std::string> vt_cases;
    std::optional<Exponent> vt_order;
    bool vt_negative = false;
    vtheta->add_option("--case", vt_cases, "Case id T2.1-a..T2.1-p or T2.2-a..T2.2-p (repeatable; default all)");
    vtheta->add_option("--order", vt_order, "Window in whole powers of q (default 60 for X, 120 for Y)");
    vtheta->add_flag("--negative-control", vt_negative, "Also run each case with phi's argument negated");
    common(vtheta);
    vtheta->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            rep.set_default("order_x_q", env_order(60));
            rep.set_default("order_y_q", env_order(120));
            run_theta(rep, vt_cases, vt_order, vt_negative);
            return rep.finish(out);
        };
    });

    // verify-cf
    auto* vcf = app.add_subcommand("verify-cf", "Certify continued-fraction convergents against the closed forms");
    std::vector<std::string> vc_ids;
    std::optional<Exponent> vc_order;
    int vc_depth = 80;
    bool vc_corrupt = false;
    vcf->add_option("--id", vc_ids, "X1..X8, Y1..Y8 (repeatable; default all)");
    vcf->add_option("--order", vc_order, "Window in whole powers of q (default 60)");
    vcf->add_option("--max-depth", vc_depth, "Largest depth tried")->check(CLI::NonNegativeNumber);
    vcf->add_flag("--corrupt-beta", vc_corrupt, "Negative control: shift beta by one lattice step");
    common(vcf);
    vcf->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            const Exponent order_q = vc_order.value_or(env_order(60));
            rep.set_default("order_q", order_q);
            rep.set_default("max_depth", vc_depth);
            run_cf(rep, vc_ids, order_q, vc_depth, vc_corrupt);
            return rep.finish(out);
        };
    });

    // verify-proof-steps
    auto* vps = app.add_subcommand("verify-proof-steps", "Verify the square-root-free intermediate identities");
    std::optional<Exponent> vp_order;
    vps->add_option("--order", vp_order, "Window in whole powers of q (default 60 for X, 120 for Y)");
    common(vps);
    vps->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            for (const auto& r : verify_proof_steps(vp_order)) rep.add(theta_result(r));
            return rep.finish(out);
        };
    });

    // verify-modular
    auto* vmod = app.add_subcommand("verify-modular", "Check the q -> -q relations for X_i and Y_i");
    std::string vm_family;
    std::vector<int> vm_index, vm_n;
    std::optional<Exponent> vm_order;
    vmod->add_option("--family", vm_family, "X or Y (default both)");
    vmod->add_option("--index", vm_index, "i in 1..8 (repeatable; default all)");
    vmod->add_option("--n", vm_n, "Exponent n (repeatable; default 4,8 for X and 1,2,3 for Y)");
    vmod->add_option("--order", vm_order, "Window in whole powers of q (default 60 for X, 100 for Y)");
    common(vmod);
    vmod->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            std::vector<Family> fams;
            if (vm_family.empty())
                fams = {Family::X, Family::Y};
            else
                fams = {parse_family(vm_family)};
            std::vector<int> idx = vm_index;
            if (idx.empty()) idx = {1, 2, 3, 4, 5, 6, 7, 8};
            for (Family f : fams) {
                std::vector<int> ns = vm_n;
                if (ns.empty()) ns = f == Family::X ? std::vector<int>{4, 8} : std::vector<int>{1, 2, 3};
                const Exponent order = vm_order.value_or(env_order(f == Family::X ? 60 : 100));
                for (int i : idx)
                    for (int n : ns) rep.add(modular_result(verify_modular_relation(f, i, n, order)));
            }
            return rep.finish(out);
        };
    });

    // dissect
    auto* dis = app.add_subcommand("dissect", "Expand both sides of the w-dissection formula");
    DissectionSpec d_spec;
    std::optional<Exponent> d_order;
    bool d_terms = false;
    dis->add_option("--x", d_spec.x)->required();
    dis->add_option("--y", d_spec.y)->required();
    dis->add_option("--z", d_spec.z)->required();
    dis->add_option("--w", d_spec.w)->required();
    dis->add_option("--order", d_order, "Window in powers of q (default 300)");
    dis->add_flag("--show-terms", d_terms, "Include every right-hand product in the JSON");
    common(dis);
    dis->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            rep.add(dissection_result(dissect(d_spec, d_order.value_or(env_order(300))), d_terms));
            return rep.finish(out);
        };
    });

    // scan-vanishing
    auto* scan = app.add_subcommand("scan-vanishing", "Check that coefficients along m*n + r vanish");
    std::string s_num, s_den, s_prog;
    Exponent s_mod = 0, s_bound = 600;
    scan->add_option("--num", s_num, "Numerator exponents")->required();
    scan->add_option("--den", s_den, "Denominator exponents")->required();
    scan->add_option("--mod", s_mod, "Modulus of the product")->required();
    scan->add_option("--progression", s_prog, "m,r")->required();
    scan->add_option("--bound", s_bound, "Largest exponent scanned");
    common(scan);
    scan->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            auto prog = parse_list(s_prog, "--progression");
            if (prog.size() != 2) throw DomainError("--progression: expected m,r");
            if (s_mod <= 0) throw DomainError("--mod: must be positive");
            VanishingClaim claim{"scan", ProductSpec::quotient(parse_list(s_num, "--num"), parse_list(s_den, "--den"), s_mod),
                                 prog[0], prog[1], s_bound};
            auto r = scan_vanishing(claim);
            std::string summary = r.vanishes() ? std::to_string(r.checked) + " positions zero"
                                               : "coefficient " + r.violations.front().coefficient.get_str() +
                                                     " at q^" + std::to_string(r.violations.front().exponent) +
                                                     " (n=" + std::to_string(r.violations.front().n) + ")";
            if (r.per_term) summary += r.consistent() ? "; per-term route agrees" : "; per-term route disagrees";
            rep.add({"vanishing", claim.series.to_string(), r.vanishes() && r.consistent() ? "pass" : "fail", summary,
                     to_json(r)});
            return rep.finish(out);
        };
    });

    // verify-table
    auto* vtab = app.add_subcommand("verify-table", "Scan every printed vanishing statement, resolving orientation");
    std::string t_which = "all";
    Exponent t_bound = 600;
    vtab->add_option("--table", t_which, "X, Y, theorems or all");
    vtab->add_option("--bound", t_bound, "Largest exponent scanned");
    common(vtab);
    vtab->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            rep.set_default("bound", t_bound);
            run_tables(rep, t_which, t_bound);
            return rep.finish(out);
        };
    });

    // count-partitions
    auto* cnt = app.add_subcommand("count-partitions", "Count colored partitions");
    Exponent c_mod = 1, c_n = 40;
    std::vector<std::string> c_classes;
    int c_all = 0;
    bool c_oracle = false;
    std::string c_policy = "doubled";
    cnt->add_option("--mod", c_mod, "Modulus m");
    cnt->add_option("--class", c_classes, "+-s:colors (repeatable), e.g. 1:2");
    cnt->add_option("--all-parts", c_all, "Every part allowed with this many colors");
    cnt->add_option("--n", c_n, "Largest n");
    cnt->add_flag("--oracle", c_oracle, "Also count by enumeration and compare");
    cnt->add_option("--self-paired", c_policy, "doubled or single: colors of a class with 2s = m");
    common(cnt);
    cnt->callback([&] {
        action = [&]() -> int {
            ColoredPartitionSpec spec;
            if (c_all > 0) {
                spec = ColoredPartitionSpec::all_parts(c_all);
            } else {
                std::vector<std::pair<Exponent, int>> pm;
                for (const auto& c : c_classes) pm.push_back(parse_class(c));
                if (c_policy != "doubled" && c_policy != "single")
                    throw DomainError("--self-paired: expected doubled or single");
                spec = ColoredPartitionSpec::from_pm(c_mod, pm,
                                                     c_policy == "single" ? SelfPairedPolicy::Single
                                                                          : SelfPairedPolicy::Doubled);
            }
            auto gf = count_gf(spec, c_n);
            std::optional<std::vector<Integer>> en;
            if (c_oracle) en = count_enumerate(spec, c_n);
            const bool agree = !en || *en == gf;
            if (json) {
                Json counts = Json::array();
                for (const auto& c : gf) counts.push_back(c.get_str());
                Json j{{"schema_version", kReportSchemaVersion},
                       {"command", command_line},
                       {"status", agree ? "pass" : "fail"},
                       {"spec", to_json(spec)},
                       {"counts", std::move(counts)}};
                if (en) j["oracle_agrees"] = agree;
                out << j.dump(2) << '\n';
            } else {
                out << spec.to_string() << '\n';
                for (std::size_t n = 0; n < gf.size(); ++n) {
                    out << n << ' ' << gf[n].get_str();
                    if (en) out << ' ' << (*en)[n].get_str();
                    out << '\n';
                }
                if (en) out << (agree ? "enumeration agrees" : "ENUMERATION DISAGREES") << '\n';
            }
            return agree ? 0 : 1;
        };
    });

    // verify-partitions
    auto* vpart = app.add_subcommand("verify-partitions", "Verify the two colored-partition identities");
    std::vector<std::string> p_theorems;
    Exponent p_nmax = 200;
    std::string p_policy = "doubled";
    vpart->add_option("--theorem", p_theorems, "D (D1/D2/D3 identity) or K (K1/K2/K3 identity); default both");
    vpart->add_option("--n-max", p_nmax, "Largest n");
    vpart->add_option("--self-paired", p_policy, "doubled or single");
    common(vpart);
    vpart->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            if (p_policy != "doubled" && p_policy != "single")
                throw DomainError("--self-paired: expected doubled or single");
            const auto policy = p_policy == "single" ? SelfPairedPolicy::Single : SelfPairedPolicy::Doubled;
            std::vector<std::string> which = p_theorems;
            if (which.empty()) which = {"D", "K"};
            for (const auto& t : which)
                rep.add(partition_result(verify_partition_identity(partition_theorem(resolve_partition_theorem(t), policy),
                                                                   p_nmax)));
            return rep.finish(out);
        };
    });

    // verify-all
    auto* all = app.add_subcommand("verify-all", "Run the whole verification suite");
    bool a_negative = false;
    std::optional<Exponent> a_order_x, a_order_y;
    Exponent a_bound = 600, a_dis = 300, a_nmax = 200;
    all->add_flag("--negative-control", a_negative, "Inject corrupted fixtures; the run must then fail");
    all->add_option("--order-x", a_order_x, "Window for quarter-lattice cases, whole powers of q (default 60)");
    all->add_option("--order-y", a_order_y, "Window for integer-lattice cases, whole powers of q (default 120)");
    all->add_option("--dissection-order", a_dis, "Window for the dissections");
    all->add_option("--bound", a_bound, "Vanishing scan bound");
    all->add_option("--n-max", a_nmax, "Partition identity range");
    common(all);
    all->callback([&] {
        action = [&] {
            Reporter rep(command_line, json, timing);
            const Exponent ox = a_order_x.value_or(env_order(60)), oy = a_order_y.value_or(env_order(120));
            rep.set_default("order_x_q", ox);
            rep.set_default("order_y_q", oy);
            rep.set_default("cf_order_q", env_order(60));
            rep.set_default("dissection_order", a_dis);
            rep.set_default("bound", a_bound);
            rep.set_default("n_max", a_nmax);
            for (const auto& c : theorem_cases())
                rep.add(theta_result(verify_identity(c, (c.lattice == 1 ? oy : ox) * c.lattice)));
            for (const auto& c : proof_step_cases())
                rep.add(theta_result(verify_identity(c, (c.lattice == 1 ? oy : ox) * c.lattice)));
            run_cf(rep, {}, env_order(60), 80, false);
            rep.add(dissection_result(dissect({34, 9, 17, 17}, a_dis), false));
            rep.add(dissection_result(dissect({68, 3, 34, 34}, a_dis), false));
            run_tables(rep, "all", a_bound);
            rep.add(partition_result(verify_partition_identity(partition_theorem(1), a_nmax)));
            rep.add(partition_result(verify_partition_identity(partition_theorem(2), a_nmax)));
            if (a_negative) {
                auto bad = negative_control("T2.1-a");
                rep.add(theta_result(verify_identity(bad, ox * bad.lattice)));
                run_cf(rep, {"X1"}, env_order(60), 80, true);
            }
            return rep.finish(out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qcf
