#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "liftobs/abelian.hpp"
#include "liftobs/engine.hpp"
#include "liftobs/error.hpp"
#include "liftobs/grpcoh.hpp"
#include "liftobs/matrix.hpp"
#include "liftobs/scenario.hpp"
#include "liftobs/verify.hpp"

namespace {

using namespace liftobs;
using ojson = nlohmann::ordered_json;

std::string read_file_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ReportFormat format_of(const std::string& s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "json-like-machine" || s == "machine") return ReportFormat::Machine;
    throw input_error("--format: expected text or json-like-machine, got \"" + s + "\"");
}

ojson matrix_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (int r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_compute(const std::string& path, ReportFormat fmt, bool sign_ledger) {
    ScenarioConfig cfg = parse_scenario(path);
    ObstructionReport rep = run_compute(cfg);
    std::cout << emit_report(rep, fmt, sign_ledger || cfg.options.sign_ledger);
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, ReportFormat fmt) {
    VerifyResult res = run_suite(suite, opts);
    if (fmt == ReportFormat::Machine) {
        ojson doc;
        doc["format"] = "liftobs-verify-1";
        doc["suite"] = res.suite;
        doc["pass"] = res.pass;
        doc["checked"] = res.checked;
        doc["counterexamples"] = res.counterexamples;
        doc["notes"] = res.notes;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "suite " << res.suite << ": " << (res.pass ? "pass" : "FAIL") << ", "
                  << res.checked << " cases checked\n";
        for (const auto& n : res.notes) std::cout << "note: " << n << "\n";
        if (!res.pass) {
            std::cout << "counterexamples (" << res.counterexamples.size() << " shown):\n";
            for (const auto& c : res.counterexamples) std::cout << c << "\n";
        }
    }
    return res.pass ? 0 : 1;
}

int cmd_snf(const std::string& path, ReportFormat fmt) {
    IntMatrix m;
    try {
        m = parse_matrix_text(read_file_or_throw(path));
    } catch (const Error& e) {
        if (e.kind() == ErrKind::Internal) throw;
        throw input_error(path + ": " + e.what());
    }
    SnfResult f = smith_normal_form(m);
    if (fmt == ReportFormat::Machine) {
        ojson doc;
        doc["format"] = "liftobs-snf-1";
        doc["rank"] = f.rank;
        doc["s"] = matrix_json(f.s);
        doc["u"] = matrix_json(f.u);
        doc["v"] = matrix_json(f.v);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "rank " << f.rank << "\n";
        std::cout << "s:\n" << format_matrix_text(f.s);
        std::cout << "u:\n" << format_matrix_text(f.u);
        std::cout << "v:\n" << format_matrix_text(f.v);
    }
    return 0;
}

int cmd_ext(const std::string& a_spec, const std::string& b_spec, ReportFormat fmt) {
    FgAbGroup a, b;
    try {
        a = parse_group_spec(a_spec);
    } catch (const Error& e) {
        throw input_error(std::string("argument A: ") + e.what());
    }
    try {
        b = parse_group_spec(b_spec);
    } catch (const Error& e) {
        throw input_error(std::string("argument B: ") + e.what());
    }
    FgAbGroup ext = ext_group(a, b);
    if (fmt == ReportFormat::Machine) {
        ojson doc;
        doc["format"] = "liftobs-group-1";
        doc["group"] = ext.to_string();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "Ext(" << a.to_string() << ", " << b.to_string() << ") = " << ext.to_string()
                  << "\n";
    }
    return 0;
}

CoeffModule parse_coeff_spec(const std::string& spec) {
    // "Q/Z", "(Q/Z)^m", "Q", "Q^m", or any parse_group_spec string.
    auto power_of = [&](const std::string& rest) -> int {
        if (rest.empty()) return 1;
        if (rest[0] != '^') throw input_error("argument M: cannot parse \"" + spec + "\"");
        int m = 0;
        try {
            size_t used = 0;
            m = std::stoi(rest.substr(1), &used);
            if (used != rest.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw input_error("argument M: cannot parse \"" + spec + "\"");
        }
        if (m < 0) throw input_error("argument M: negative power in \"" + spec + "\"");
        return m;
    };
    std::string s;
    for (char c : spec)
        if (c != ' ') s.push_back(c);
    if (s.rfind("(Q/Z)", 0) == 0) return CoeffModule::qmodz(power_of(s.substr(5)));
    if (s.rfind("Q/Z", 0) == 0) return CoeffModule::qmodz(power_of(s.substr(3)));
    if (s.rfind("Q", 0) == 0) return CoeffModule::rational(power_of(s.substr(1)));
    try {
        return CoeffModule::of_group(parse_group_spec(spec));
    } catch (const Error& e) {
        throw input_error(std::string("argument M: ") + e.what());
    }
}

int cmd_grpcoh(const std::string& g_spec, const std::string& m_spec, int degree,
               ReportFormat fmt) {
    FiniteGroup g = FiniteGroup::trivial();
    try {
        g = FiniteGroup::from_spec(g_spec);
    } catch (const Error& e) {
        throw input_error(std::string("argument G: ") + e.what());
    }
    CoeffModule coeff = parse_coeff_spec(m_spec);
    FgAbGroup h = cohomology_group(g, coeff, degree);
    if (fmt == ReportFormat::Machine) {
        ojson doc;
        doc["format"] = "liftobs-group-1";
        doc["group"] = h.to_string();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "H^" << degree << "(" << g_spec << "; " << m_spec << ") = " << h.to_string()
                  << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lifting-obstruction calculator for principal bundles"};
    app.require_subcommand(1);

    std::string format_name = "text";
    bool sign_ledger = false;
    app.add_option("--format", format_name, "output format: text | json-like-machine")
        ->capture_default_str();
    app.add_flag("--sign-ledger", sign_ledger, "append the table of leading sign conventions");

    auto* compute = app.add_subcommand("compute", "evaluate one scenario file");
    std::string scenario_path;
    compute->add_option("scenario", scenario_path, "scenario file (JSON)")->required();

    auto* verify = app.add_subcommand("verify", "run one verification suite");
    std::string suite;
    VerifyOptions vopts;
    int n_opt = -1;
    std::string gamma_spec;
    verify->add_option("suite", suite, "suite name (see `verify list`)")->required();
    verify->add_option("--n", n_opt, "dimension / order bound, where the suite has one");
    verify->add_option("--gamma", gamma_spec, "coefficient group, e.g. Z/3");
    verify->add_option("--jobs", vopts.jobs, "worker count (suites run serially; accepted for compatibility)");
    verify->add_flag("--fault", vopts.fault_stilde,
                     "test hook: break the alternating signs of the top evaluation");

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
    std::string matrix_path;
    snf->add_option("matrix", matrix_path, "matrix file (first line \"rows cols\")")->required();

    auto* ext = app.add_subcommand("ext", "Ext group of two finitely generated abelian groups");
    std::string a_spec, b_spec;
    ext->add_option("A", a_spec, "group spec, e.g. \"Z/4\" or \"Z^2 x Z/6\"")->required();
    ext->add_option("B", b_spec, "group spec")->required();

    auto* grpcoh = app.add_subcommand("grpcoh", "group cohomology of a finite group");
    std::string g_spec, coeff_spec;
    int degree = 2;
    grpcoh->add_option("G", g_spec, "finite group spec, e.g. \"Z/4\", \"Z/2 x Z/2\", \"Q8\"")
        ->required();
    grpcoh->add_option("M", coeff_spec, "trivial coefficient module: \"Z\", \"Z/m\", \"Q/Z\", \"Q\"")
        ->required();
    grpcoh->add_option("degree", degree, "cohomology degree, 0..3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        ReportFormat fmt = format_of(format_name);
        if (*compute) return cmd_compute(scenario_path, fmt, sign_ledger);
        if (*verify) {
            if (suite == "list") {
                for (const auto& s : suite_names()) std::cout << s << "\n";
                return 0;
            }
            if (n_opt >= 0) vopts.n = n_opt;
            if (!gamma_spec.empty()) {
                try {
                    vopts.gamma = parse_group_spec(gamma_spec);
                } catch (const Error& e) {
                    throw input_error(std::string("--gamma: ") + e.what());
                }
            }
            return cmd_verify(suite, vopts, fmt);
        }
        if (*snf) return cmd_snf(matrix_path, fmt);
        if (*ext) return cmd_ext(a_spec, b_spec, fmt);
        if (*grpcoh) return cmd_grpcoh(g_spec, coeff_spec, degree, fmt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrKind::Input ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal invariant breach: " << e.what() << "\n";
        return 3;
    }
}
