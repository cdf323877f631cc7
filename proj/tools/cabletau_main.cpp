// Command-line front end: invariant reports, CFD dumps, cable computations by
// formula and/or tensor with crosschecking, table generation, and the
// acceptance selftest.
//
// Exit codes: 0 success, 1 mathematical or crosscheck failure, 2 input error.
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cabletau/acceptance.hpp"
#include "cabletau/errors.hpp"
#include "cabletau/formulas.hpp"
#include "cabletau/io.hpp"
#include "cabletau/pairing.hpp"

namespace {

using namespace cabletau;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitInput = 2;

struct Source {
    std::string builtin;  // knot expression
    std::string input;    // file path
};

CfkComplex load_source(const Source& src) {
    if (!src.builtin.empty() && !src.input.empty())
        throw Error("choose either --builtin or --input, not both");
    CfkComplex c;
    if (!src.input.empty())
        c = load_complex_file(src.input);
    else if (!src.builtin.empty())
        c = parse_knot_expression(src.builtin);
    else
        throw Error("no input: pass --builtin EXPR or --input FILE");
    ValidationReport rep = validate(c);
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    if (!rep.ok()) {
        std::ostringstream os;
        os << "invalid complex:";
        for (const auto& e : rep.errors) os << "\n  " << e;
        throw Error(os.str());
    }
    if (!rep.reduced())
        std::cerr << "note: input is not reduced; cancelling "
                  << rep.not_reduced.size() << " filtration-preserving arrow(s)\n";
    return c;
}

std::string format_poly(const std::map<int, long long>& poly) {
    if (poly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        auto [exp, coeff] = *it;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        long long mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1 || exp == 0) os << mag;
        if (exp != 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (exp != 1) os << "^" << exp;
        }
    }
    return os.str();
}

int cmd_invariants(const Source& src, const std::string& format) {
    CfkComplex c = load_source(src);
    CfkComplex r = reduce(c);
    ConcordanceInvariants inv = invariants(r);
    std::optional<std::string> poly;
    ordered_json poly_json = ordered_json::array();
    if (r.all_maslov()) {
        auto p = alexander_polynomial(r);
        poly = format_poly(p);
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            poly_json.push_back({it->first, it->second});
    }
    if (format == "machine") {
        ordered_json j;
        j["name"] = c.name;
        j["generators"] = r.gens.size();
        j["tau"] = inv.tau;
        j["nu"] = inv.nu;
        j["nu_prime"] = inv.nu_prime;
        j["epsilon"] = inv.epsilon;
        if (poly) j["alexander_polynomial"] = poly_json;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "knot: " << c.name << "\n"
                  << "generators: " << r.gens.size() << "\n"
                  << "tau: " << inv.tau << "\n"
                  << "nu: " << inv.nu << "\n"
                  << "nu_prime: " << inv.nu_prime << "\n"
                  << "epsilon: " << inv.epsilon << "\n";
        if (poly) std::cout << "alexander_polynomial: " << *poly << "\n";
    }
    return kExitOk;
}

int cmd_cfd(const Source& src, int framing, const std::string& format) {
    CfkComplex c = load_source(src);
    auto [simplified, roles] = simplify_both(reduce(c));
    TypeDStructure d = cfd_from_cfk({simplified, roles, framing});
    auto bad = d.check();
    if (!bad.empty()) {
        for (const auto& b : bad) std::cerr << "error: " << b << "\n";
        return kExitMath;
    }
    if (format == "machine") {
        ordered_json j;
        j["name"] = c.name;
        j["framing"] = framing;
        j["generators"] = ordered_json::array();
        for (const auto& g : d.gens)
            j["generators"].push_back({{"id", g.id}, {"idempotent", to_string(g.iota)}});
        j["edges"] = ordered_json::array();
        for (const auto& e : d.edges)
            j["edges"].push_back({{"from", d.gens[e.src].id},
                                  {"label", to_string(e.label)},
                                  {"to", d.gens[e.tgt].id}});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "generators:\n";
        for (const auto& g : d.gens)
            std::cout << "  " << g.id << " " << to_string(g.iota) << "\n";
        std::cout << "edges:\n" << d.dump();
    }
    return kExitOk;
}

int cmd_cable(const Source& src, int p, std::optional<int> q_opt, std::optional<int> n_opt,
              const std::string& method, const std::string& format) {
    CfkComplex c = load_source(src);
    if (!q_opt && !n_opt) throw Error("pass -q or --framing");
    int q = q_opt ? *q_opt : q_from_framing(p, *n_opt);
    CableSpec spec{p, q};
    validate_spec(spec);
    std::optional<int> framing = framing_from_q(p, q);
    const bool want_tensor = method == "tensor" || method == "both";
    const bool want_formula = method == "formula" || method == "both";
    if (want_tensor && !framing)
        throw Error("tensor route needs q = p*n + 1 (q = " + std::to_string(q) +
                    " is not 1 mod " + std::to_string(p) + ")");

    ConcordanceInvariants inv = invariants(reduce(c));
    KnotInvariantPair kp{inv.tau, inv.epsilon};

    std::optional<int> tau_formula, eps_formula, tau_tensor;
    if (want_formula) {
        tau_formula = cable_tau_formula(kp, spec);
        eps_formula = cable_epsilon_formula(kp, spec);
    }
    std::string tensor_note;
    int exit_code = kExitOk;
    if (want_tensor) {
        try {
            CableTensorResult r = cable_tau_tensor(c, p, *framing);
            tau_tensor = r.tau;
            std::ostringstream os;
            os << "survivor " << r.diagnostics.survivor_pattern_gen << "|"
               << r.diagnostics.survivor_companion_gen;
            if (r.diagnostics.symmetry_unique)
                os << ", pinned by symmetry";
            else
                os << ", pinned by survivor identity (" << r.diagnostics.anchor << ")";
            tensor_note = os.str();
        } catch (const AmbiguousPinning& e) {
            std::ostringstream os;
            os << "ambiguous pinning, tau candidates:";
            for (int t : e.candidates) os << " " << t;
            tensor_note = os.str();
            exit_code = kExitMath;
        }
    }
    bool agree = true;
    if (tau_formula && tau_tensor && *tau_formula != *tau_tensor) agree = false;
    if (method == "both" && !tau_tensor) agree = false;
    if (!agree) exit_code = kExitMath;

    if (format == "machine") {
        ordered_json j;
        j["name"] = c.name;
        j["p"] = p;
        j["q"] = q;
        j["companion_tau"] = kp.tau;
        j["companion_epsilon"] = kp.epsilon;
        if (tau_formula) j["tau_formula"] = *tau_formula;
        if (eps_formula) j["epsilon_formula"] = *eps_formula;
        if (tau_tensor) j["tau_tensor"] = *tau_tensor;
        if (!tensor_note.empty()) j["tensor_note"] = tensor_note;
        if (method == "both") j["crosscheck"] = agree ? "ok" : "mismatch";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "knot: " << c.name << "   cable: (" << p << "," << q << ")";
        if (framing) std::cout << "   [framing " << *framing << "]";
        std::cout << "\ncompanion: tau " << kp.tau << ", epsilon " << kp.epsilon << "\n";
        if (tau_formula) std::cout << "tau_formula: " << *tau_formula << "\n";
        if (eps_formula) std::cout << "epsilon_formula: " << *eps_formula << "\n";
        if (tau_tensor) std::cout << "tau_tensor: " << *tau_tensor << "\n";
        if (!tensor_note.empty()) std::cout << "tensor: " << tensor_note << "\n";
        if (method == "both")
            std::cout << "crosscheck: " << (agree ? "ok" : "MISMATCH") << "\n";
    }
    return exit_code;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

int cmd_witness_table(const std::string& ns_arg, const std::string& format) {
    bool all_ok = true;
    if (format != "machine")
        std::cout << "n\tplus\ttau+\teps+\tminus\ttau-\teps-\tstatus\n";
    for (int n : parse_int_list(ns_arg)) {
        auto [wp, wm] = corollary_witnesses(n);
        bool ok = wp.invariants.tau == n && wm.invariants.tau == n &&
                  wp.invariants.epsilon == 1 && wm.invariants.epsilon == -1;
        all_ok = all_ok && ok;
        if (format == "machine") {
            ordered_json j;
            j["n"] = n;
            j["plus"] = wp.description;
            j["plus_tau"] = wp.invariants.tau;
            j["plus_epsilon"] = wp.invariants.epsilon;
            j["minus"] = wm.description;
            j["minus_tau"] = wm.invariants.tau;
            j["minus_epsilon"] = wm.invariants.epsilon;
            j["status"] = ok ? "ok" : "mismatch";
            std::cout << j.dump() << "\n";
        } else {
            std::cout << n << "\t" << wp.description << "\t" << wp.invariants.tau
                      << "\t" << wp.invariants.epsilon << "\t" << wm.description
                      << "\t" << wm.invariants.tau << "\t" << wm.invariants.epsilon
                      << "\t" << (ok ? "ok" : "mismatch") << "\n";
        }
    }
    return all_ok ? kExitOk : kExitMath;
}

int cmd_table(const std::string& knots_arg, const std::string& ps_arg,
              const std::string& qs_arg, const std::string& format) {
    std::vector<std::string> knots;
    {
        std::stringstream ss(knots_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) knots.push_back(item);
    }
    std::vector<int> ps = parse_int_list(ps_arg);
    std::vector<int> qs = parse_int_list(qs_arg);

    bool all_ok = true;
    if (format != "machine")
        std::cout << "knot\tp\tq\ttau_formula\teps_formula\ttau_tensor\tstatus\n";
    for (const auto& name : knots) {
        CfkComplex c;
        ConcordanceInvariants inv;
        try {
            c = parse_knot_expression(name);
            inv = invariants(reduce(c));
        } catch (const Error& e) {
            std::cerr << "error: " << name << ": " << e.what() << "\n";
            return kExitInput;
        }
        KnotInvariantPair kp{inv.tau, inv.epsilon};
        for (int p : ps)
            for (int q : qs) {
                if (std::gcd(p, q) != 1) continue;
                std::string status = "ok";
                std::optional<int> tf, ef, tt;
                try {
                    tf = cable_tau_formula(kp, {p, q});
                    ef = cable_epsilon_formula(kp, {p, q});
                    if (auto n = framing_from_q(p, q)) {
                        tt = cable_tau_tensor(c, p, *n).tau;
                        if (*tt != *tf) status = "mismatch";
                    }
                } catch (const Error& e) {
                    status = std::string("error: ") + e.what();
                }
                if (status != "ok") all_ok = false;
                if (format == "machine") {
                    ordered_json j;
                    j["knot"] = name;
                    j["p"] = p;
                    j["q"] = q;
                    if (tf) j["tau_formula"] = *tf;
                    if (ef) j["epsilon_formula"] = *ef;
                    if (tt) j["tau_tensor"] = *tt;
                    j["status"] = status;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << name << "\t" << p << "\t" << q << "\t"
                              << (tf ? std::to_string(*tf) : "-") << "\t"
                              << (ef ? std::to_string(*ef) : "-") << "\t"
                              << (tt ? std::to_string(*tt) : "-") << "\t" << status
                              << "\n";
                }
            }
    }
    return all_ok ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot Floer concordance invariants and cable tau calculator"};
    app.require_subcommand(1);

    Source src;
    std::string format = "human";

    auto add_source = [&src, &format](CLI::App* cmd) {
        cmd->add_option("--builtin", src.builtin,
                        "built-in knot expression (name, mirror(expr), expr#expr)");
        cmd->add_option("--input", src.input, "complex JSON file");
        cmd->add_option("--format", format, "human or machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    auto* inv_cmd = app.add_subcommand("invariants", "tau, nu, nu', epsilon of a complex");
    add_source(inv_cmd);

    auto* cfd_cmd = app.add_subcommand("cfd", "Type D structure of the framed complement");
    add_source(cfd_cmd);
    int framing = 0;
    cfd_cmd->add_option("--framing", framing, "framing of the complement")->required();

    auto* cable_cmd = app.add_subcommand("cable", "tau of a cable by formula and/or tensor");
    add_source(cable_cmd);
    int cable_p = 2;
    std::optional<int> cable_q, cable_n;
    std::string method = "both";
    cable_cmd->add_option("-p", cable_p, "longitudinal winding, p > 1")->required();
    cable_cmd->add_option("-q", cable_q, "meridional winding");
    cable_cmd->add_option("--framing", cable_n, "framing n (q = p*n + 1)");
    cable_cmd->add_option("--method", method, "formula, tensor, or both")
        ->check(CLI::IsMember({"formula", "tensor", "both"}));

    auto* table_cmd = app.add_subcommand("table", "invariant table over a (knot, p, q) grid");
    std::string knots = "unknot,trefoil_rh,trefoil_lh,figure8";
    std::string ps = "2", qs = "-5,-3,-1,1,3,5", witness_ns;
    table_cmd->add_option("--knots", knots, "comma-separated knot expressions");
    table_cmd->add_option("-p", ps, "comma-separated p values");
    table_cmd->add_option("-q", qs, "comma-separated q values");
    table_cmd->add_option("--witnesses", witness_ns,
                          "emit the equal-tau witness pairs for these n instead");
    table_cmd->add_option("--format", format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (app.got_subcommand(inv_cmd)) return cmd_invariants(src, format);
        if (app.got_subcommand(cfd_cmd)) return cmd_cfd(src, framing, format);
        if (app.got_subcommand(cable_cmd))
            return cmd_cable(src, cable_p, cable_q, cable_n, method, format);
        if (app.got_subcommand(table_cmd))
            return witness_ns.empty() ? cmd_table(knots, ps, qs, format)
                                      : cmd_witness_table(witness_ns, format);
        if (app.got_subcommand(selftest_cmd))
            return run_acceptance(std::cout) ? kExitOk : kExitMath;
    } catch (const AmbiguousPinning& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const NotAKnotComplex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMath;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
