// Command-line front end: runs verification suites, applies cycle operators to
// files, and computes homology / periodicity-sequence reports for complex files.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addchow/complex_io.hpp"
#include "addchow/cycle_io.hpp"
#include "addchow/cycles.hpp"
#include "addchow/error.hpp"
#include "addchow/mixed_complex.hpp"
#include "addchow/verify.hpp"

namespace {

using namespace addchow;

// pick a curve-parameter name that no symbol of the cycle uses
std::string render_cycle(const FormalCycle& z) {
    for (const std::string& cand :
         {"s", "t", "u", "s0", "s1", "s2", "s3", "s4", "s5"}) {
        try {
            return cycle_to_text(z, cand);
        } catch (const DomainError&) {
            continue;
        }
    }
    throw DomainError("no free curve-parameter name available");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::FILE* f = std::fopen(output_path.c_str(), "w");
    if (!f) throw DomainError("cannot open output file '" + output_path + "'");
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

int run_verify(const std::string& suite, const VerifyOptions& opt, bool structured) {
    std::vector<CheckResult> results = run_suite(suite, opt);
    std::cout << results_text(results, structured);
    return all_passed(results) ? 0 : 1;
}

int run_cycle(const std::string& op, const std::vector<std::string>& inputs,
              const std::string& output) {
    const bool binary = op == "wedge" || op == "cyclic-shuffle";
    const std::size_t want = binary ? 2 : 1;
    if (inputs.size() != want)
        throw DomainError("operator '" + op + "' needs exactly " +
                          std::to_string(want) + " --input file(s), got " +
                          std::to_string(inputs.size()));
    FormalCycle a = read_cycle_file(inputs[0]);
    FormalCycle result = [&] {
        if (op == "boundary") return boundary(a);
        if (op == "delta") return delta(a);
        FormalCycle b = read_cycle_file(inputs[1]);
        return op == "wedge" ? wedge(a, b) : cyclic_shuffle(a, b);
    }();
    emit(render_cycle(result), output);
    return 0;
}

int run_homology(const std::string& input, bool connes, bool structured,
                 const std::string& output) {
    MixedComplex m = read_complex_file(input);
    if (connes) {
        LESReport r = connes_sequence(m);
        emit(les_text(r, structured), output);
        return r.valid_input && r.all_exact ? 0 : 1;
    }
    ValidationReport v = validate(m);
    if (!v.ok) {
        std::cerr << "invalid complex: " << v.detail << "\n";
        return 2;
    }
    ChainComplex c = column_complex(m);
    emit(homology_text(c, m.space.lo(), m.space.hi(), structured), output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive cycle calculus: verification suites, cycle operators, "
                 "homology reports"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* verify = app.add_subcommand(
        "verify", "run a verification suite; exit 0 iff every check passes");
    std::string suite = "all";
    addchow::VerifyOptions opt;
    verify->add_option("suite", suite, "suite to run")
        ->check(CLI::IsMember({"shuffle", "delta", "leibniz", "derivation", "forms",
                               "mixedcx", "all"}));
    verify->add_option("--max-n", opt.max_n, "slot cap for insertion identities")
        ->check(CLI::Range(0, 6));
    verify->add_option("--max-rs", opt.max_rs, "cap on r + s for shuffle identities")
        ->check(CLI::Range(0, 8));
    verify->add_option("--r1", opt.r1, "first shape for the derivation identity")
        ->check(CLI::Range(0, 3));
    verify->add_option("--r2", opt.r2, "second shape for the derivation identity")
        ->check(CLI::Range(0, 3));
    verify->add_option("--jobs", opt.jobs, "worker threads (0 = runtime default)")
        ->check(CLI::Range(0, 256));
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* cycle = app.add_subcommand(
        "cycle", "apply an operator to cycle files and print the canonical result");
    std::string op;
    std::vector<std::string> inputs;
    std::string output;
    cycle->add_option("op", op, "operator")
        ->required()
        ->check(CLI::IsMember({"boundary", "delta", "wedge", "cyclic-shuffle"}));
    cycle->add_option("--input", inputs,
                      "input cycle file (twice for wedge / cyclic-shuffle)")
        ->required();
    cycle->add_option("--output", output, "output file (default: stdout)");

    auto* hom = app.add_subcommand(
        "homology",
        "homology table of a complex file; --connes for the periodicity sequence");
    std::string hom_input;
    bool connes = false;
    hom->add_option("--input", hom_input, "input complex file")->required();
    hom->add_flag("--connes", connes, "report the periodicity sequence instead");
    hom->add_option("--output", output, "output file (default: stdout)");
    hom->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(suite, opt, format == "structured");
        if (cycle->parsed()) return run_cycle(op, inputs, output);
        return run_homology(hom_input, connes, format == "structured", output);
    } catch (const addchow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
