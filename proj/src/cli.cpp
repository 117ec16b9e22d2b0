#include "lieforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieforge/analysis.hpp"
#include "lieforge/classical.hpp"
#include "lieforge/liealg.hpp"

namespace lieforge {

namespace {

BinaryCode load_code(const std::string& name, const std::string& file) {
    if (!name.empty()) return builtin(name);
    std::ifstream in(file);
    if (!in) throw input_error("cannot open code file '" + file + "'");
    return BinaryCode::parse(in);
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw input_error("cannot open output file '" + out_path + "'");
    f << text << '\n';
}

std::string vector_string(const std::vector<long long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

int cmd_code_info(const std::string& name, const std::string& file, const std::string& format,
                  const std::string& out_path, std::ostream& out) {
    const BinaryCode code = load_code(name, file);
    const std::string shown = name.empty() ? file : name;
    const auto enumerator = code.weight_enumerator();
    std::string text;
    if (format == "json") {
        nlohmann::json j;
        j["name"] = shown;
        j["n"] = code.length();
        j["k"] = code.dimension();
        j["d"] = code.min_distance();
        j["weight_enumerator"] = enumerator;
        j["generator"] = nlohmann::json::array();
        for (const auto& row : code.generator()) j["generator"].push_back(row.str());
        text = j.dump();
    } else {
        std::ostringstream os;
        os << "name: " << shown << '\n'
           << "parameters: [" << code.length() << ',' << code.dimension() << ','
           << code.min_distance() << "]\n"
           << "weight_enumerator: " << vector_string(enumerator);
        text = os.str();
    }
    write_output(text, out_path, out);
    return 0;
}

int cmd_lattice_roots(const std::string& name, const std::string& file,
                      const std::string& format, const std::string& out_path,
                      std::ostream& out) {
    const BinaryCode code = load_code(name, file);
    const auto roots = roots_of_code_lattice(code);
    const auto report = identify_root_system(roots);
    std::string text;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::parse(root_system_report_json(report));
        j["code"] = name.empty() ? file : name;
        j["count"] = roots.size();
        j["roots"] = nlohmann::json::array();
        for (const auto& r : roots) j["roots"].push_back(r.coords);
        text = j.dump();
    } else {
        std::ostringstream os;
        os << "code: " << (name.empty() ? file : name) << '\n'
           << "roots: " << roots.size() << '\n'
           << "type: " << report.dynkin_type << '\n';
        for (const auto& r : roots) {
            os << '(';
            for (int i = 0; i < r.size(); ++i) os << (i ? "," : "") << r.coords[i];
            os << ")\n";
        }
        text = os.str();
        text.pop_back();
    }
    write_output(text, out_path, out);
    return 0;
}

int cmd_algebra_build(const std::string& type, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
    const LieAlgebra algebra = build_exceptional(algebra_kind_from_name(type));
    err << "built " << type << ": dim " << algebra.dim() << '\n';
    write_output(algebra.to_json(), out_path, out);
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& checks_arg,
               const std::string& format, std::ostream& out, std::ostream& err) {
    std::ifstream in(in_path);
    if (!in) throw input_error("cannot open structure-constant file '" + in_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const LieAlgebra algebra = LieAlgebra::from_json(buffer.str());

    std::vector<std::string> checks;
    std::string token;
    std::istringstream split(checks_arg);
    while (std::getline(split, token, ','))
        if (!token.empty()) checks.push_back(token);
    if (checks.empty()) throw input_error("no checks requested");

    const VerificationReport report = run_checks(algebra, checks);
    if (format == "json") {
        out << verification_report_json(report) << '\n';
    } else {
        if (report.jacobi) {
            out << "jacobi: " << (*report.jacobi ? "pass" : "fail") << '\n';
            if (report.jacobi_witness) {
                const auto& w = *report.jacobi_witness;
                err << "jacobi witness: triple (" << w.i << ',' << w.j << ',' << w.k << ")\n";
            }
        }
        if (report.killing_nondegenerate)
            out << "killing: " << (*report.killing_nondegenerate ? "pass" : "fail") << '\n';
        if (report.cartan_self_centralizing)
            out << "centralizer: "
                << (*report.cartan_self_centralizing ? "pass" : "fail")
                << " (dim " << *report.cartan_centralizer << ")\n";
        if (report.spectrum)
            out << "spectrum: " << (report.spectrum->short_structure ? "pass" : "fail") << '\n';
        if (report.root_type)
            out << "roots: " << *report.root_count << " of type " << *report.root_type << '\n';
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_classical_build(const std::string& series, int n, const std::string& out_path,
                        std::ostream& out, std::ostream& err) {
    const ClassicalCrossCheck check =
        classical_cross_check(classical_series_from_name(series), n);
    err << "series " << series << " n=" << n << ": dim " << check.realization.dim()
        << ", crosscheck " << (check.isomorphic ? "ok" : "FAILED") << '\n';
    write_output(check.rebuilt.to_json(), out_path, out);
    return check.isomorphic ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact models of Lie algebras from binary codes"};
    app.set_version_flag("--version", std::string(kCliVersion));
    app.require_subcommand(1);

    // code info
    auto* code_cmd = app.add_subcommand("code", "binary code operations");
    code_cmd->require_subcommand(1);
    auto* code_info = code_cmd->add_subcommand("info", "parameters and weight enumerator");
    std::string ci_name, ci_file, ci_format = "table", ci_out;
    code_info->add_option("--name", ci_name, "builtin code name");
    code_info->add_option("--file", ci_file, "code text file");
    code_info->add_option("--format", ci_format)->check(CLI::IsMember({"json", "table"}));
    code_info->add_option("--out", ci_out, "output path");

    // lattice roots
    auto* lattice_cmd = app.add_subcommand("lattice", "code lattice operations");
    lattice_cmd->require_subcommand(1);
    auto* lattice_roots = lattice_cmd->add_subcommand("roots", "roots and Dynkin type");
    std::string lr_code, lr_file, lr_format = "json", lr_out;
    lattice_roots->add_option("--code", lr_code, "builtin code name");
    lattice_roots->add_option("--file", lr_file, "code text file");
    lattice_roots->add_option("--format", lr_format)->check(CLI::IsMember({"json", "table"}));
    lattice_roots->add_option("--out", lr_out, "output path");

    // algebra build
    auto* algebra_cmd = app.add_subcommand("algebra", "exceptional algebra operations");
    algebra_cmd->require_subcommand(1);
    auto* algebra_build = algebra_cmd->add_subcommand("build", "emit structure constants");
    std::string ab_type, ab_out;
    algebra_build->add_option("--type", ab_type, "one of e7, e8, f4")->required();
    algebra_build->add_option("--out", ab_out, "output path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a structure-constant file");
    std::string v_in, v_checks = "jacobi,killing,centralizer,roots,spectrum",
                v_format = "table";
    verify_cmd->add_option("--in", v_in, "structure-constant JSON")->required();
    verify_cmd->add_option("--checks", v_checks, "comma-separated check list");
    verify_cmd->add_option("--format", v_format)->check(CLI::IsMember({"json", "table"}));

    // classical build
    auto* classical_cmd = app.add_subcommand("classical", "classical series operations");
    classical_cmd->require_subcommand(1);
    auto* classical_build =
        classical_cmd->add_subcommand("build", "matrix realization and cross-check");
    std::string cb_series, cb_out;
    int cb_n = 0;
    classical_build->add_option("--series", cb_series, "one of c, d, b")->required();
    classical_build->add_option("--n", cb_n, "series parameter")->required();
    classical_build->add_option("--out", cb_out, "output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (code_info->parsed()) {
            if (ci_name.empty() == ci_file.empty())
                throw input_error("code info: give exactly one of --name, --file");
            return cmd_code_info(ci_name, ci_file, ci_format, ci_out, out);
        }
        if (lattice_roots->parsed()) {
            if (lr_code.empty() == lr_file.empty())
                throw input_error("lattice roots: give exactly one of --code, --file");
            return cmd_lattice_roots(lr_code, lr_file, lr_format, lr_out, out);
        }
        if (algebra_build->parsed()) return cmd_algebra_build(ab_type, ab_out, out, err);
        if (verify_cmd->parsed()) return cmd_verify(v_in, v_checks, v_format, out, err);
        if (classical_build->parsed())
            return cmd_classical_build(cb_series, cb_n, cb_out, out, err);
        err << "error: no subcommand\n";
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace lieforge
