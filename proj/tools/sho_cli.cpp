#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sho/serialization.hpp"
#include "sho/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int p = 5;
    int m = 2;
    std::string t = "1,1";
    std::string algebra = "SHO";
    std::string format = "text";
    std::string out;
    std::string file;
    std::string suite = "all";
    unsigned long long seed = 0;
    int samples = 25;
    int depth = 0;
};

std::vector<int> parse_t(const std::string& s) {
    std::vector<int> t;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) t.push_back(std::stoi(tok));
    return t;
}

// --out is relative to $SHO_OUT_DIR when that is set
void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::string path = out;
    if (const char* dir = std::getenv("SHO_OUT_DIR"); dir && *dir && path[0] != '/')
        path = std::string(dir) + "/" + path;
    std::ofstream f(path);
    if (!f) throw sho::config_error("cannot open output file: " + path);
    f << text;
}

sho::Workbench make_workbench(const Options& opt) {
    return sho::Workbench(sho::make_parameters(opt.p, opt.m, parse_t(opt.t)));
}

int cmd_dims(const Options& opt) {
    sho::Workbench wb = make_workbench(opt);
    const sho::GradedSubspace& g = wb.algebra(sho::tag_from_string(opt.algebra));
    if (opt.format == "json") {
        json dims = json::object();
        for (const auto& [deg, n] : g.dims()) dims[std::to_string(deg)] = n;
        json out{{"params", sho::params_to_json(*wb.params())},
                 {"algebra", opt.algebra},
                 {"dims", dims},
                 {"total", g.dim()}};
        write_output(opt.out, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << opt.algebra << "(" << opt.m << "," << opt.m << ";" << opt.t << "), p = " << opt.p
           << "\n";
        os << "degree  dim\n";
        for (const auto& [deg, n] : g.dims()) os << deg << "\t" << n << "\n";
        os << "total\t" << g.dim() << "\n";
        write_output(opt.out, os.str());
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    sho::Workbench wb = make_workbench(opt);
    auto reports = sho::run_suites(wb, opt.suite, opt.seed, opt.samples);
    bool all = true;
    for (const auto& r : reports)
        all = all && r.all_passed();
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& r : reports) {
            json items = json::array();
            for (const auto& item : r.items)
                items.push_back(json{{"name", item.name},
                                     {"status", item.passed ? "pass" : "fail"},
                                     {"detail", item.detail}});
            out.push_back(json{{"suite", r.suite}, {"items", items}});
        }
        write_output(opt.out, out.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& r : reports)
            for (const auto& item : r.items) {
                os << (item.passed ? "[PASS] " : "[FAIL] ") << r.suite << ":" << item.name;
                if (!item.detail.empty()) os << "  (" << item.detail << ")";
                os << "\n";
            }
        os << (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
        write_output(opt.out, os.str());
    }
    return all ? 0 : kExitVerifyFail;
}

int cmd_export(const Options& opt) {
    sho::Workbench wb = make_workbench(opt);
    const sho::GradedSubspace& g = wb.algebra(sho::tag_from_string(opt.algebra));
    write_output(opt.out, sho::export_structure_constants(g, opt.algebra).dump(2) + "\n");
    return 0;
}

int cmd_import(const Options& opt) {
    std::ifstream f(opt.file);
    if (!f) {
        std::cerr << "cannot open " << opt.file << "\n";
        return kExitUsage;
    }
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    try {
        sho::StructureConstantAlgebra alg = sho::import_structure_constants(j);
        std::ostringstream os;
        os << "imported " << j.at("header").at("algebra").get<std::string>() << ": dim "
           << alg.dim << ", consistency check passed\n";
        write_output(opt.out, os.str());
    } catch (const std::exception& e) {
        std::cerr << "import rejected: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return 0;
}

int cmd_aut_sample(const Options& opt) {
    sho::Workbench wb = make_workbench(opt);
    const sho::GradedSubspace& g = wb.algebra(sho::tag_from_string(opt.algebra));
    sho::OAutomorphism sigma = sho::sample_automorphism(g, opt.seed, opt.depth);
    write_output(opt.out, sho::automorphism_to_json(sigma).dump(2) + "\n");
    return 0;
}

int cmd_aut_check(const Options& opt) {
    sho::Workbench wb = make_workbench(opt);
    const sho::GradedSubspace& g = wb.algebra(sho::tag_from_string(opt.algebra));
    std::ifstream f(opt.file);
    if (!f) {
        std::cerr << "cannot open " << opt.file << "\n";
        return kExitUsage;
    }
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    sho::OAutomorphism sigma = sho::automorphism_from_json(j);
    sho::ensure_same(sigma.params(), wb.params());
    bool ok = sho::is_admissible(sigma, g);
    sho::BasisIndex idx(wb.params());
    sho::DepthProfile depth = sho::depth_O(sigma, idx);
    std::ostringstream os;
    os << (ok ? "admissible" : "not admissible") << " for " << opt.algebra << "; depth "
       << (depth ? std::to_string(*depth) : "identity")
       << (sho::is_homogeneous_O(sigma) ? ", homogeneous" : "") << "\n";
    write_output(opt.out, os.str());
    return ok ? 0 : kExitVerifyFail;
}

void add_param_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--p", opt.p, "characteristic (prime > 3)");
    cmd->add_option("--m", opt.m, "number of even variables (>= 2)");
    cmd->add_option("--t", opt.t, "heights, comma separated (e.g. 1,1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the Cartan-type Lie superalgebra series W > HO > SHO"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* dims = app.add_subcommand("dims", "per-degree dimension table");
    add_param_flags(dims, opt);
    dims->add_option("--algebra", opt.algebra, "W, HO, S', SHO', SHO-bar or SHO");
    dims->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    dims->add_option("--out", opt.out, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", opt.suite, "lemma11, restricted, engine, phi-iso, normal-series or all")
        ->check(CLI::IsMember({"lemma11", "restricted", "engine", "phi-iso", "normal-series", "all"}));
    add_param_flags(verify, opt);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--samples", opt.samples);
    verify->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", opt.out);

    CLI::App* exp = app.add_subcommand("export", "structure constants as JSON");
    add_param_flags(exp, opt);
    exp->add_option("--algebra", opt.algebra);
    exp->add_option("--out", opt.out);

    CLI::App* imp = app.add_subcommand("import", "validate a structure-constant file");
    imp->add_option("--file", opt.file)->required();
    imp->add_option("--out", opt.out);

    CLI::App* asample = app.add_subcommand("aut-sample", "sample an admissible automorphism");
    add_param_flags(asample, opt);
    asample->add_option("--algebra", opt.algebra);
    asample->add_option("--seed", opt.seed);
    asample->add_option("--depth", opt.depth, "filtration depth target");
    asample->add_option("--out", opt.out);

    CLI::App* acheck = app.add_subcommand("aut-check", "check a stored automorphism for admissibility");
    add_param_flags(acheck, opt);
    acheck->add_option("--algebra", opt.algebra);
    acheck->add_option("--file", opt.file)->required();
    acheck->add_option("--out", opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (dims->parsed()) return cmd_dims(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (exp->parsed()) return cmd_export(opt);
        if (imp->parsed()) return cmd_import(opt);
        if (asample->parsed()) return cmd_aut_sample(opt);
        if (acheck->parsed()) return cmd_aut_check(opt);
    } catch (const sho::sampling_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
