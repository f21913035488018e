// z2lab - command-line front end.
//
//   z2lab z2 --set sets/pow2.txt
//   z2lab fock --n 2 --verify --format text
//   z2lab ratio --poly witness10.json
//   z2lab audit --set myset.txt --tol 1e-7
//
// Reports are JSON by default (machine-first); --format text/csv for humans
// and spreadsheets.  Exit codes: 0 ok, 2 input error, 3 theorem-contradiction
// sentinel, 64 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "z2lab/serial.hpp"

namespace {

using z2lab::json;

struct CommonOpts {
    double tol = 1e-7;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--tol", c.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "random seed for seeded stages");
    cmd->add_option("--format", c.format, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", c.out, "write the report to this file instead of stdout");
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array() && j.size() <= 16 && std::all_of(j.begin(), j.end(), [](const json& v) {
                   return v.is_number() || v.is_string() || v.is_boolean();
               })) {
        std::ostringstream os;
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << j[i].dump();
        rows.emplace_back(prefix, os.str());
    } else if (j.is_array()) {
        rows.emplace_back(prefix, "[" + std::to_string(j.size()) + " entries]");
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void emit(const json& report, const CommonOpts& c) {
    std::ostringstream os;
    if (c.format == "json") {
        os << report.dump(2) << '\n';
    } else {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(report, "", rows);
        if (c.format == "csv") {
            os << "key,value\n";
            for (const auto& [k, v] : rows) os << k << "," << v << '\n';
        } else {
            std::size_t width = 0;
            for (const auto& [k, v] : rows) width = std::max(width, k.size());
            for (const auto& [k, v] : rows)
                os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
        }
    }
    if (c.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(c.out);
        if (!f) throw z2lab::InputError("cannot open output file: " + c.out);
        f << os.str();
    }
}

z2lab::PatternKind parse_kind(const std::string& s) {
    if (s == "FivePairs" || s == "five-pairs") return z2lab::PatternKind::FivePairs;
    if (s == "ThreeAPs" || s == "three-aps") return z2lab::PatternKind::ThreeAPs;
    if (s == "AP5" || s == "ap5") return z2lab::PatternKind::AP5;
    throw z2lab::InputError("unknown pattern kind: " + s);
}

z2lab::AbelianCase parse_case(const std::string& s) {
    if (s == "torus" || s == "torus_products") return z2lab::AbelianCase::Torus;
    if (s == "z2" || s == "z2_products") return z2lab::AbelianCase::Z2Products;
    throw z2lab::InputError("unknown abelian case: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"z2lab: Z2 sets, Fock isometries, rc-norm brackets and Khintchine ratios"};
    app.require_subcommand(1);

    // ---- z2 ----
    CommonOpts z2c;
    std::string z2_set;
    bool z2_hist = false;
    auto* cmd_z2 = app.add_subcommand("z2", "Z2 constant of a set file");
    cmd_z2->add_option("--set", z2_set, "set file")->required();
    cmd_z2->add_flag("--histogram", z2_hist, "include the full difference histogram");
    add_common(cmd_z2, z2c);

    // ---- zp ----
    CommonOpts zpc;
    std::string zp_set;
    int zp_p = 2;
    auto* cmd_zp = app.add_subcommand("zp", "Z_p constant (alternating p-fold sums)");
    cmd_zp->add_option("--set", zp_set, "set file")->required();
    cmd_zp->add_option("--p", zp_p, "order p >= 2")->required();
    add_common(cmd_zp, zpc);

    // ---- pattern ----
    CommonOpts patc;
    std::string pat_set, pat_kind = "FivePairs";
    auto* cmd_pat = app.add_subcommand("pattern", "search for a forbidden pattern");
    cmd_pat->add_option("--set", pat_set, "set file")->required();
    cmd_pat->add_option("--kind", pat_kind, "FivePairs | ThreeAPs | AP5");
    add_common(cmd_pat, patc);

    // ---- generate ----
    CommonOpts genc;
    std::string gen_kind;
    std::int64_t gen_base = 2, gen_limit = 100, gen_k = 25;
    int gen_count = 10;
    auto* cmd_gen = app.add_subcommand("generate", "generate an example set (writes set-file lines)");
    cmd_gen->add_option("--kind", gen_kind, "powers | furstenberg | circle | primes | greedy_sidon")->required();
    cmd_gen->add_option("--base", gen_base, "base for powers");
    cmd_gen->add_option("--count", gen_count, "count for powers/greedy_sidon");
    cmd_gen->add_option("--limit", gen_limit, "limit for furstenberg/primes");
    cmd_gen->add_option("--k", gen_k, "radius^2 for circle");
    add_common(cmd_gen, genc);

    // ---- fock ----
    CommonOpts fockc;
    int fock_n = 2, fock_trials = 50;
    bool fock_verify = false, fock_fixture = false;
    auto* cmd_fock = app.add_subcommand("fock", "Haagerup-Itoh partial isometry family");
    cmd_fock->add_option("--n", fock_n, "family parameter (2n+1 operators)");
    cmd_fock->add_flag("--fixture", fock_fixture, "use the explicit n=2 fixture");
    cmd_fock->add_flag("--verify", fock_verify, "run the verification report");
    cmd_fock->add_option("--trials", fock_trials, "random unit-combination trials");
    add_common(cmd_fock, fockc);

    // ---- norm-s1rc ----
    CommonOpts s1c;
    std::string s1_poly;
    auto* cmd_s1 = app.add_subcommand("norm-s1rc", "certified S1(l2_rc) bracket of a tuple");
    cmd_s1->add_option("--poly", s1_poly, "tuple JSON file")->required();
    add_common(cmd_s1, s1c);

    // ---- norm-sinf ----
    CommonOpts sic;
    std::string si_poly;
    auto* cmd_si = app.add_subcommand("norm-sinf", "S_inf(l2_rc) norm of a tuple");
    cmd_si->add_option("--poly", si_poly, "tuple JSON file")->required();
    add_common(cmd_si, sic);

    // ---- l1 ----
    CommonOpts l1c;
    std::string l1_poly;
    auto* cmd_l1 = app.add_subcommand("l1", "L1(T; S1) norm by adaptive quadrature");
    cmd_l1->add_option("--poly", l1_poly, "polynomial JSON file (frequencies required)")->required();
    add_common(cmd_l1, l1c);

    // ---- ratio ----
    CommonOpts ratc;
    std::string rat_poly;
    auto* cmd_rat = app.add_subcommand("ratio", "Khintchine ratio interval of a polynomial");
    cmd_rat->add_option("--poly", rat_poly, "polynomial JSON file")->required();
    add_common(cmd_rat, ratc);

    // ---- moments ----
    CommonOpts momc;
    std::string mom_poly;
    auto* cmd_mom = app.add_subcommand("moments", "exact trace moments m1, m2 of a polynomial");
    cmd_mom->add_option("--poly", mom_poly, "polynomial JSON file")->required();
    add_common(cmd_mom, momc);

    // ---- profile ----
    CommonOpts profc;
    std::string prof_kind = "complex_gaussian", prof_set;
    int prof_d = 4;
    std::int64_t prof_samples = 0;
    auto* cmd_prof = app.add_subcommand("profile", "moment profile (N1, N2, Z2x, alpha)");
    cmd_prof->add_option("--kind", prof_kind, "complex_gaussian | real_gaussian | group_characters");
    cmd_prof->add_option("--d", prof_d, "family size");
    cmd_prof->add_option("--set", prof_set, "set file for group_characters");
    cmd_prof->add_option("--mc", prof_samples, "also run a Monte Carlo cross-check with this many samples");
    add_common(cmd_prof, profc);

    // ---- audit ----
    CommonOpts audc;
    std::string aud_set;
    auto* cmd_aud = app.add_subcommand("audit", "converse-theorem audit of a set");
    cmd_aud->add_option("--set", aud_set, "set file")->required();
    add_common(cmd_aud, audc);

    // ---- abelian ----
    CommonOpts abc;
    int ab_m = 1;
    std::string ab_case = "torus";
    bool ab_numeric = false;
    auto* cmd_ab = app.add_subcommand("abelian", "abelian product-group ratios A_m, B_m");
    cmd_ab->add_option("--m", ab_m, "construction parameter")->required();
    cmd_ab->add_option("--case", ab_case, "torus | z2");
    cmd_ab->add_flag("--numeric-check", ab_numeric, "re-derive A_m (and torus B_m) numerically");
    add_common(cmd_ab, abc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    }

    try {
        if (cmd_z2->parsed()) {
            json rep;
            if (z2lab::file_looks_lattice(z2_set))
                rep = to_json(z2lab::z2_constant(z2lab::load_lattice_set(z2_set)), z2_hist);
            else
                rep = to_json(z2lab::z2_constant(z2lab::load_integer_set(z2_set)), z2_hist);
            emit(rep, z2c);
        } else if (cmd_zp->parsed()) {
            const auto v = z2lab::load_integer_set(zp_set);
            emit(json{{"p", zp_p}, {"zp", z2lab::zp_constant(v, zp_p)}}, zpc);
        } else if (cmd_pat->parsed()) {
            const auto v = z2lab::load_integer_set(pat_set);
            const auto w = z2lab::find_pattern(v, parse_kind(pat_kind));
            json rep{{"kind", pat_kind}, {"found", w.has_value()}};
            if (w) rep["witness"] = to_json(*w);
            emit(rep, patc);
        } else if (cmd_gen->parsed()) {
            std::ostringstream os;
            if (gen_kind == "powers")
                z2lab::write_integer_set(os, z2lab::generate_powers(gen_base, gen_count));
            else if (gen_kind == "furstenberg")
                z2lab::write_integer_set(os, z2lab::generate_furstenberg(gen_limit));
            else if (gen_kind == "circle")
                z2lab::write_lattice_set(os, z2lab::generate_circle(gen_k));
            else if (gen_kind == "primes")
                z2lab::write_integer_set(os, z2lab::generate_primes(gen_limit));
            else if (gen_kind == "greedy_sidon")
                z2lab::write_integer_set(os, z2lab::generate_greedy_sidon(gen_count));
            else
                throw z2lab::InputError("unknown generator kind: " + gen_kind);
            if (genc.out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(genc.out);
                if (!f) throw z2lab::InputError("cannot open output file: " + genc.out);
                f << os.str();
            }
        } else if (cmd_fock->parsed()) {
            const z2lab::IsometryFamily fam =
                fock_fixture ? z2lab::fixture_n2() : z2lab::build_family(fock_n);
            if (fock_verify) {
                const auto rep = z2lab::verify_family(fam, fockc.tol, fock_trials, fockc.seed);
                emit(to_json(rep), fockc);
            } else {
                emit(to_json(fam), fockc);
            }
        } else if (cmd_s1->parsed()) {
            const auto t = z2lab::tuple_from_json(z2lab::load_json_file(s1_poly));
            z2lab::AscentOptions opt;
            opt.seed = s1c.seed;
            emit(to_json(z2lab::s1_rc_norm(t, s1c.tol, opt)), s1c);
        } else if (cmd_si->parsed()) {
            const auto t = z2lab::tuple_from_json(z2lab::load_json_file(si_poly));
            emit(json{{"sinfty_rc", z2lab::sinfty_rc_norm(t)}}, sic);
        } else if (cmd_l1->parsed()) {
            const auto p = z2lab::poly_from_json(z2lab::load_json_file(l1_poly));
            emit(to_json(z2lab::l1_s1_norm(p, l1c.tol)), l1c);
        } else if (cmd_rat->parsed()) {
            const auto p = z2lab::poly_from_json(z2lab::load_json_file(rat_poly));
            z2lab::AscentOptions opt;
            opt.seed = ratc.seed;
            emit(to_json(z2lab::khintchine_ratio(p, ratc.tol, opt)), ratc);
        } else if (cmd_mom->parsed()) {
            const auto p = z2lab::poly_from_json(z2lab::load_json_file(mom_poly));
            const auto tm = z2lab::tau_moments(p);
            emit(json{{"m1", to_json(tm.m1)}, {"m2", to_json(tm.m2)}}, momc);
        } else if (cmd_prof->parsed()) {
            json rep;
            if (prof_kind == "complex_gaussian")
                rep = to_json(z2lab::profile_complex_gaussian(prof_d));
            else if (prof_kind == "real_gaussian")
                rep = to_json(z2lab::profile_real_gaussian(prof_d));
            else if (prof_kind == "group_characters") {
                if (prof_set.empty()) throw z2lab::InputError("profile group_characters needs --set");
                if (z2lab::file_looks_lattice(prof_set))
                    rep = to_json(z2lab::profile_group_characters(z2lab::load_lattice_set(prof_set)));
                else
                    rep = to_json(z2lab::profile_group_characters(z2lab::load_integer_set(prof_set)));
            } else {
                throw z2lab::InputError("unknown profile kind: " + prof_kind);
            }
            if (prof_samples > 0 && prof_kind != "group_characters") {
                const auto kind = prof_kind == "complex_gaussian" ? z2lab::GaussianKind::Complex
                                                                  : z2lab::GaussianKind::Real;
                rep = json{{"exact", rep},
                           {"monte_carlo",
                            to_json(z2lab::monte_carlo_profile(kind, prof_d, prof_samples, profc.seed))}};
            }
            emit(rep, profc);
        } else if (cmd_aud->parsed()) {
            const auto v = z2lab::load_integer_set(aud_set);
            z2lab::AscentOptions opt;
            opt.seed = audc.seed;
            emit(to_json(z2lab::converse_audit(v, audc.tol, opt)), audc);
        } else if (cmd_ab->parsed()) {
            const auto which = parse_case(ab_case);
            if (ab_numeric)
                emit(to_json(z2lab::abelian_ratio_numeric_check(ab_m, which, abc.tol)), abc);
            else
                emit(to_json(z2lab::abelian_ratio(ab_m, which)), abc);
        }
    } catch (const z2lab::TheoremContradictionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const z2lab::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
