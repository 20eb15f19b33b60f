// lgl: exact computations in the twisted gl(n)-module of Laurent polynomials.
//
// Subcommands: classify, generator, act, ladder, hw, oracle-sweep,
// filtration-check, figure. All JSON output is deterministic (sorted keys,
// lexicographic term order). Exit codes: 0 success/verified, 1 verification
// failure, 2 usage error.

#include "lgl/figures.hpp"
#include "lgl/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using lgl::io::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<lgl::gaussian_rational> parse_alpha_list(const std::string& text, int n) {
    std::vector<lgl::gaussian_rational> out;
    for (const std::string& part : split(text, ','))
        out.push_back(lgl::gaussian_rational::parse(part));
    if (static_cast<int>(out.size()) != n)
        throw usage_error("--alpha needs exactly " + std::to_string(n) + " entries");
    return out;
}

lgl::exponent parse_exponent(const std::string& text, int n, const char* flag) {
    std::vector<std::int64_t> entries;
    for (const std::string& part : split(text, ',')) {
        try {
            entries.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw usage_error(std::string(flag) + ": bad integer '" + part + "'");
        }
    }
    if (static_cast<int>(entries.size()) != n)
        throw usage_error(std::string(flag) + " needs exactly " + std::to_string(n) + " entries");
    return lgl::exponent(std::move(entries));
}

lgl::index_set parse_index_set(const std::string& text) {
    lgl::index_set out;
    if (text.empty()) return out;
    for (const std::string& part : split(text, ',')) {
        try {
            out.insert(std::stoi(part));
        } catch (const std::exception&) {
            throw usage_error("--J: bad index '" + part + "'");
        }
    }
    return out;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open input file '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw usage_error("bad JSON in '" + path + "': " + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw usage_error("cannot open output file '" + output_path + "'");
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

void emit(const json& j, const std::string& output_path) { emit(j.dump(2), output_path); }

struct alpha_args {
    lgl::alpha_param alpha = lgl::alpha_param::zero(1);
    lgl::exponent shift = lgl::exponent::zero(1);
};

alpha_args resolve_alpha(const std::string& text, int n) {
    alpha_args out;
    if (text.empty()) {
        out.alpha = lgl::alpha_param::zero(n);
        out.shift = lgl::exponent::zero(n);
        return out;
    }
    auto [alpha, shift] = lgl::alpha_param::normalize(parse_alpha_list(text, n));
    out.alpha = std::move(alpha);
    out.shift = std::move(shift);
    return out;
}

std::string classify_text(const json& r) {
    std::ostringstream os;
    os << "module " << r["module"].dump() << "\n";
    os << "case " << r["case"].get<std::string>() << "\n";
    if (!r["generator"].is_null()) os << "generator " << r["generator"].dump() << "\n";
    if (r["zero_module"].get<bool>()) os << "zero module\n";
    if (!r["equals_module"].is_null()) os << "equals " << r["equals_module"].dump() << "\n";
    os << "finite_dimensional " << (r["finite_dimensional"].get<bool>() ? "yes" : "no") << "\n";
    os << "dimension " << r["dimension"].dump() << "\n";
    if (r["highest_weight"].is_null()) {
        os << "highest_weight none\n";
    } else {
        lgl::weight wt;
        for (const json& v : r["highest_weight"]["weight"]) wt.push_back(lgl::io::gr_from_json(v));
        os << "highest_weight " << lgl::weight_str(wt)
           << (r["highest_weight"]["verified"].get<bool>() ? " (verified)" : " (FAILED)") << "\n";
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact gl(n)-module computations on Laurent polynomials"};
    app.require_subcommand(1);

    int n = 2;
    std::string alpha_text, J_text, p_text, q_text, unit_text, word_path;
    std::string input_path, output_path, format = "json", mode, m_range_text;
    std::int64_t m = 0, bound = 6;
    int j_level = -1;

    auto add_common = [&](CLI::App* cmd, bool with_alpha = true) {
        cmd->add_option("--n", n, "number of variables")->required();
        if (with_alpha) cmd->add_option("--alpha", alpha_text, "twist entries, e.g. 1/2,i,0");
        cmd->add_option("--output", output_path, "write output to a file instead of stdout");
        cmd->add_option("--format", format, "json|dot|tikz|text");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify V(m,J): generator case, "
                                                        "dimension, highest weight");
    add_common(classify);
    classify->add_option("--m", m, "degree")->required();
    classify->add_option("--J", J_text, "index set, e.g. 1,2 (default empty)");

    CLI::App* generator = app.add_subcommand("generator", "canonical generator of V(m,J)");
    add_common(generator);
    generator->add_option("--m", m, "degree")->required();
    generator->add_option("--J", J_text, "index set");

    CLI::App* act_cmd = app.add_subcommand("act", "apply a matrix unit or word to a polynomial");
    add_common(act_cmd);
    act_cmd->add_option("--unit", unit_text, "matrix unit a,b");
    act_cmd->add_option("--word", word_path, "JSON file with a word (or ladder certificate)");
    act_cmd->add_option("--input", input_path, "polynomial JSON file")->required();

    CLI::App* ladder = app.add_subcommand("ladder", "certificate mapping x^p to x^q");
    add_common(ladder);
    ladder->add_option("--p", p_text, "source exponent, e.g. 4,0,0")->required();
    ladder->add_option("--q", q_text, "target exponent")->required();

    CLI::App* hw = app.add_subcommand("hw", "highest-weight certificate for W(m,J)");
    add_common(hw);
    hw->add_option("--m", m, "degree")->required();
    hw->add_option("--J", J_text, "index set");

    CLI::App* sweep = app.add_subcommand("oracle-sweep", "run the reachability/partition sweep");
    sweep->add_option("--input", input_path, "sweep config JSON (defaults to the desk sweep)");
    sweep->add_option("--output", output_path, "write report to a file");
    sweep->add_option("--n", n, "restrict to a single n");
    sweep->add_option("--m", m, "restrict to a single degree");
    sweep->add_option("--B", bound, "override the coordinate bound");
    sweep->add_option("--J", J_text, "keep only cases with this index set");
    sweep->add_option("--j", j_level, "keep only cases with this level");

    CLI::App* filt = app.add_subcommand("filtration-check", "filtration axioms and graded pieces");
    filt->add_option("--n", n, "number of variables")->required();
    filt->add_option("--m", m_range_text, "degree range lo:hi (default -3:3)");
    filt->add_option("--B", bound, "coordinate bound");
    filt->add_option("--output", output_path, "write report to a file");
    filt->add_option("--mode", mode, "serial|parallel (default parallel)");

    CLI::App* figure = app.add_subcommand("figure", "emit the sign-region or lattice digraph");
    add_common(figure);
    figure->add_option("--m", m, "degree")->required();
    figure->add_option("--B", bound, "coordinate bound (lattice mode)");
    figure->add_option("--mode", mode, "sign-regions|lattice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify || *generator) {
            alpha_args a = resolve_alpha(alpha_text, n);
            lgl::index_set J = parse_index_set(J_text);
            json report = lgl::io::classification_report(a.alpha, a.shift, m, J);
            if (*generator) {
                json small{{"case", report["case"]},
                           {"generator", report["generator"]},
                           {"zero_module", report["zero_module"]},
                           {"equals_module", report["equals_module"]},
                           {"alpha", report["alpha"]},
                           {"alpha_shift", report["alpha_shift"]},
                           {"m", m},
                           {"J", report["J"]}};
                if (format == "text") {
                    std::ostringstream os;
                    os << "case " << small["case"].get<std::string>() << "\n";
                    if (!small["generator"].is_null())
                        os << "generator " << small["generator"].dump() << "\n";
                    if (small["zero_module"].get<bool>()) os << "zero module\n";
                    if (!small["equals_module"].is_null())
                        os << "equals " << small["equals_module"].dump() << "\n";
                    emit(os.str(), output_path);
                } else {
                    emit(small, output_path);
                }
            } else if (format == "text") {
                emit(classify_text(report), output_path);
            } else {
                emit(report, output_path);
            }
            return 0;
        }

        if (*act_cmd) {
            alpha_args a = resolve_alpha(alpha_text, n);
            lgl::laurent_poly f = lgl::io::poly_from_json(read_json(input_path));
            if (f.var_count() != n) throw usage_error("--input polynomial has a different n");
            lgl::laurent_poly out(n);
            if (!unit_text.empty()) {
                std::vector<std::string> parts = split(unit_text, ',');
                if (parts.size() != 2) throw usage_error("--unit expects a,b");
                out = lgl::act(lgl::matrix_unit{std::stoi(parts[0]), std::stoi(parts[1])}, f,
                               a.alpha);
            } else if (!word_path.empty()) {
                out = lgl::act(lgl::io::uword_from_json(read_json(word_path)), f, a.alpha);
            } else {
                throw usage_error("act needs --unit or --word");
            }
            if (format == "text")
                emit(out.str(), output_path);
            else
                emit(lgl::io::to_json(out), output_path);
            return 0;
        }

        if (*ladder) {
            alpha_args a = resolve_alpha(alpha_text, n);
            lgl::exponent p = parse_exponent(p_text, n, "--p");
            lgl::exponent q = parse_exponent(q_text, n, "--q");
            lgl::ladder_certificate cert = lgl::ladder_word(p, q, a.alpha);
            bool replay = lgl::act(cert.word, lgl::laurent_poly::monomial(p), a.alpha) ==
                          lgl::laurent_poly::monomial(q);
            if (format == "text") {
                std::ostringstream os;
                os << "x^" << cert.source.str() << " -> x^" << cert.target.str() << "\n";
                for (const lgl::ladder_step& s : cert.steps)
                    os << "E" << s.unit.row << s.unit.col << "  coeff " << s.coeff.str()
                       << "  -> x^" << s.after.str() << "\n";
                os << "prefactor " << cert.word.prefactor().str() << "\n";
                os << "replay " << (replay ? "ok" : "FAILED") << "\n";
                emit(os.str(), output_path);
            } else {
                json out = lgl::io::to_json(cert);
                out["alpha"] = lgl::io::to_json(a.alpha);
                out["alpha_shift"] = lgl::io::to_json(a.shift);
                out["replay_ok"] = replay;
                emit(out, output_path);
            }
            return replay ? 0 : 1;
        }

        if (*hw) {
            alpha_args a = resolve_alpha(alpha_text, n);
            lgl::index_set J = parse_index_set(J_text);
            std::optional<lgl::hw_certificate> cert = lgl::classify_hw(a.alpha, m, J);
            json out{{"alpha", lgl::io::to_json(a.alpha)},
                     {"m", m},
                     {"J", lgl::io::to_json(J)}};
            if (!cert) {
                out["certificate"] = nullptr;
                out["verified"] = nullptr;
                emit(out, output_path);
                return 0;
            }
            bool ok = lgl::verify_hw(*cert, a.alpha);
            if (format == "text") {
                std::ostringstream os;
                os << "vector x^" << cert->vec.str() << "\n";
                os << "weight " << lgl::weight_str(cert->wt) << "\n";
                os << "verified " << (ok ? "yes" : "NO") << "\n";
                emit(os.str(), output_path);
                return ok ? 0 : 1;
            }
            out["certificate"] = lgl::io::hw_to_json(*cert, a.alpha);
            out["verified"] = ok;
            emit(out, output_path);
            return ok ? 0 : 1;
        }

        if (*sweep) {
            lgl::sweep_config config = input_path.empty()
                                           ? lgl::sweep_config::desk_default()
                                           : lgl::io::sweep_config_from_json(read_json(input_path));
            if (sweep->count("--n")) config.ns = {n};
            if (sweep->count("--m")) {
                config.m_lo = m;
                config.m_hi = m;
            }
            if (sweep->count("--B")) config.bound = bound;
            lgl::sweep_report report = lgl::run_sweep(config);
            if (sweep->count("--J") || sweep->count("--j")) {
                lgl::index_set only_J = parse_index_set(J_text);
                std::vector<lgl::sweep_case> kept;
                for (const lgl::sweep_case& c : report.cases) {
                    if (sweep->count("--J") && !(c.J && *c.J == only_J)) continue;
                    if (sweep->count("--j") && !(c.j && *c.j == j_level)) continue;
                    kept.push_back(c);
                }
                report.cases = std::move(kept);
                report.passed = report.failed = 0;
                for (const lgl::sweep_case& c : report.cases)
                    (c.verdict ? report.passed : report.failed)++;
                report.all_pass = report.failed == 0;
            }
            emit(lgl::io::to_json(report), output_path);
            return report.all_pass ? 0 : 1;
        }

        if (*filt) {
            lgl::filtration_window w;
            w.n = n;
            w.bound = bound;
            if (!m_range_text.empty()) {
                std::vector<std::string> parts = split(m_range_text, ':');
                if (parts.size() != 2) throw usage_error("--m expects lo:hi");
                w.m_lo = std::stoll(parts[0]);
                w.m_hi = std::stoll(parts[1]);
            }
            lgl::run_mode rm = mode == "serial" ? lgl::run_mode::serial : lgl::run_mode::parallel;
            lgl::axiom_report axioms = lgl::check_filtration_axioms(w, rm);
            json iso = json::array();
            bool iso_ok = true;
            for (std::int64_t mm = w.m_lo; mm <= w.m_hi; ++mm) {
                for (unsigned mask = 0; mask < (1u << w.n); ++mask) {
                    lgl::poset_index idx{mm, {}};
                    for (int l = 1; l <= w.n; ++l)
                        if (mask & (1u << (l - 1))) idx.J.insert(l);
                    bool ok = lgl::graded_iso_check(w.n, idx, w.bound);
                    iso_ok = iso_ok && ok;
                    iso.push_back(json{{"m", mm}, {"J", lgl::io::to_json(idx.J)}, {"ok", ok}});
                }
            }
            json out{{"n", w.n},
                     {"m_range", json::array({w.m_lo, w.m_hi})},
                     {"B", w.bound},
                     {"axioms", lgl::io::to_json(axioms)},
                     {"graded_iso", iso},
                     {"all_pass", axioms.all_pass() && iso_ok}};
            emit(out, output_path);
            return (axioms.all_pass() && iso_ok) ? 0 : 1;
        }

        if (*figure) {
            lgl::fig_format ff;
            if (format == "dot" || format == "json")
                ff = lgl::fig_format::dot;
            else if (format == "tikz")
                ff = lgl::fig_format::tikz;
            else
                throw usage_error("figure supports --format dot|tikz");
            std::string out;
            if (mode.empty() || mode == "sign-regions") {
                out = lgl::sign_region_figure(n, m, ff);
            } else if (mode == "lattice") {
                alpha_args a = resolve_alpha(alpha_text, n);
                out = lgl::action_lattice_figure(n, m, bound, a.alpha, ff);
            } else {
                throw usage_error("--mode must be sign-regions or lattice");
            }
            emit(out, output_path);
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
