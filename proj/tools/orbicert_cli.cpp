// orbicert: certification and enumeration of flat orbifold connections, plus
// the supporting exterior-algebra, census and bundle-bookkeeping reports.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbicert/json_io.hpp"

using namespace orbicert;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("ORBICERT_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << payload << "\n";
}

int emit(const json& report, const std::string& out_path) {
    write_output(out_path, report.dump(2));
    return report.value("ok", false) ? 0 : 1;
}

int parse_group(const std::string& g, int lo, int hi) {
    if (g.size() < 3 || g.substr(0, 2) != "so")
        throw CLI::ValidationError("--group", "expected so<N>");
    int n = std::atoi(g.c_str() + 2);
    if (n < lo || n > hi)
        throw CLI::ValidationError("--group", "group out of supported range");
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of flat orbifold connections"};
    app.require_subcommand(1);

    std::string group, input, list_path, out_path, format = "json";
    std::string rep_path, charges_path, inputs_path;
    bool include_reducible = false, noncommutative = false;
    int jobs = default_jobs();
    int m_arg = 0, k_arg = 0;

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites of all modules");
    selftest->add_option("--out", out_path, "output file (default: stdout)");

    auto* census = app.add_subcommand("census", "singular-locus census of the orbifold");
    census->add_option("--out", out_path);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "gauge-orbit catalog for a group");
    enumerate_cmd->add_option("--group", group, "so2..so12")->required();
    enumerate_cmd->add_flag("--include-reducible", include_reducible,
                            "also catalog reducible admissible orbits (n <= 4)");
    enumerate_cmd->add_option("--jobs", jobs, "worker threads (env ORBICERT_JOBS)");
    enumerate_cmd->add_option("--out", out_path);
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* certify_cmd = app.add_subcommand("certify", "certify a representation file");
    certify_cmd->add_option("--input", input, "rep JSON file")->required()
        ->check(CLI::ExistingFile);
    certify_cmd->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-appendix", "check a token-tuple list");
    verify->add_option("--group", group, "so3 or so4")->required();
    verify->add_option("--list", list_path, "token tuple list file")->required()
        ->check(CLI::ExistingFile);
    verify->add_option("--out", out_path);

    auto* nogo = app.add_subcommand("nogo", "no-go scans");
    nogo->add_option("--group", group, "so6 or so9..so12");
    nogo->add_flag("--noncommutative", noncommutative,
                   "check the non-commuting so3 family instead");
    nogo->add_option("--out", out_path);

    auto* topology = app.add_subcommand("topology", "bundle bookkeeping");
    topology->require_subcommand(1);
    auto* decompose = topology->add_subcommand("decompose", "adjoint decomposition of m[L]+R^k");
    decompose->add_option("--m", m_arg)->required();
    decompose->add_option("--k", k_arg)->required();
    decompose->add_option("--out", out_path);
    auto* index_cmd = topology->add_subcommand("index", "evaluate the index formula");
    index_cmd->add_option("--json", inputs_path, "inputs JSON")->required()
        ->check(CLI::ExistingFile);
    index_cmd->add_option("--out", out_path);
    auto* gluing = topology->add_subcommand("check-gluing", "validate gluing data for a rep");
    gluing->add_option("--rep", rep_path, "rep JSON")->required()->check(CLI::ExistingFile);
    gluing->add_option("--charges", charges_path, "charges JSON (label -> rational)")
        ->check(CLI::ExistingFile);
    gluing->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*selftest) return emit(selftest_report(), out_path);

        if (*census) return emit(census_report(), out_path);

        if (*enumerate_cmd) {
            int n = parse_group(group, 2, 12);
            OrbitCatalog cat = enumerate_group(n, include_reducible, jobs);
            if (format == "csv") {
                write_output(out_path, catalog_csv(cat));
                return 0;
            }
            return emit(catalog_report(cat), out_path);
        }

        if (*certify_cmd) {
            FlatRep rep = rep_from_json(json::parse(read_file(input)));
            CertReport c = certify(rep);
            json out = cert_report_to_json(c);
            out["ok"] = c.valid;
            return emit(out, out_path);
        }

        if (*verify) {
            int n = parse_group(group, 3, 4);
            std::vector<std::string> errors;
            auto tuples = parse_token_list(read_file(list_path), n, &errors);
            if (!errors.empty()) {
                for (const auto& e : errors) std::cerr << list_path << ": " << e << "\n";
                return 2;
            }
            return emit(appendix_report_to_json(verify_appendix(tuples, n), n), out_path);
        }

        if (*nogo) {
            if (noncommutative) return emit(noncommutative_report(), out_path);
            if (group.empty())
                throw CLI::ValidationError("--group", "required unless --noncommutative");
            int n = parse_group(group, 6, 12);
            return emit(nogo_report_to_json(nogo_scan(n)), out_path);
        }

        if (*decompose) return emit(decompose_report(ALEBundleSpec{m_arg, k_arg}), out_path);

        if (*index_cmd) {
            json j = json::parse(read_file(inputs_path));
            IndexInputs in;
            in.dim_g = j.value("dim_g", 0LL);
            in.b0 = j.value("b0", 0LL);
            in.b1 = j.value("b1", 0LL);
            in.b2_7 = j.value("b2_7", 0LL);
            if (j.contains("I_pp")) in.I_pp = rat_from_json(j["I_pp"]);
            if (j.contains("I_p2")) in.I_p2 = rat_from_json(j["I_p2"]);
            if (j.contains("I_q")) in.I_q = rat_from_json(j["I_q"]);
            return emit(index_report(in), out_path);
        }

        if (*gluing) {
            GluingData data;
            data.rep = rep_from_json(json::parse(read_file(rep_path)));
            for (int label = 73; label <= 76; ++label)
                data.specs[label] =
                    ale_bundle_for(data.rep.image(label <= 74 ? "gamma" : "delta"));
            if (!charges_path.empty()) {
                json ch = json::parse(read_file(charges_path));
                for (auto& [key, val] : ch.items())
                    data.charges[std::stoi(key)] = rat_from_json(val);
            }
            GluingCheck chk = check_compatible_gluing_data(data);
            return emit(gluing_check_to_json(chk, p1_coefficients(data)), out_path);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
