#include "acb/document.hpp"
#include "acb/errors.hpp"
#include "acb/examples.hpp"
#include "acb/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

struct Options {
    std::string input;
    std::string example;
    std::vector<std::string> sets;
    std::string format = "text";
    std::vector<std::string> sections;
};

const std::map<std::string, std::vector<std::string>>& default_sections()
{
    static const std::map<std::string, std::vector<std::string>> table{
        {"validate", {"validation"}},
        {"report", acb::report_sections()},
        {"classify", {"validation", "classification"}},
        {"soliton", {"validation", "fits", "numeric"}},
        {"verify", {"validation", "tensors", "theorems"}},
    };
    return table;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw acb::UsageError("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

acb::Assignment parse_sets(const std::vector<std::string>& sets)
{
    acb::Assignment out;
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw acb::UsageError("--set expects <param>=<rational>, got '" + s + "'");
        const std::string name = s.substr(0, eq);
        if (out.contains(name))
            throw acb::UsageError("parameter '" + name + "' set twice");
        try {
            out[name] = acb::parse_rational(s.substr(eq + 1));
        } catch (const acb::ParseError& e) {
            throw acb::UsageError("--set " + s + ": " + e.what());
        }
    }
    return out;
}

void print_issues(const acb::ValidationReport& report)
{
    for (const auto& issue : report.issues) {
        std::cerr << "  " << issue.relation << " at (";
        for (std::size_t i = 0; i < issue.index.size(); ++i)
            std::cerr << (i ? "," : "") << issue.index[i];
        std::cerr << "): residual " << issue.residual << "\n";
    }
}

int run(const std::string& command, const Options& opt)
{
    if (opt.input.empty() == opt.example.empty())
        throw acb::UsageError("give exactly one of --input or --example");

    acb::Manifold m = opt.example.empty() ? acb::parse_document(read_file(opt.input))
                                          : acb::builtin_example(opt.example);

    if (command != "validate") {
        const acb::ValidationReport v = acb::validate_manifold(m);
        if (!v.ok()) {
            std::cerr << "error: manifold failed validation\n";
            print_issues(v);
            return 2;
        }
    }

    const acb::Report report = opt.sets.empty() ? acb::run_pipeline(m)
                                                : acb::substitute_and_rerun(m, parse_sets(opt.sets));

    const std::vector<std::string>& shown = opt.sections.empty() ? default_sections().at(command) : opt.sections;
    const auto body = acb::select_sections(report, shown);
    std::cout << (opt.format == "json" ? acb::render_json(body) : acb::render_text(body));

    for (const auto& name : shown)
        if (!report.section_passed(name))
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometry of almost contact B-metric structures on Lie groups"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"validate", "check the Lie algebra and structure relations"},
             {"report", "full report"},
             {"classify", "cosymplectic / Sasaki-like / torse-forming classification"},
             {"soliton", "Einstein-like and Ricci-like soliton fits"},
             {"verify", "run the theorem and identity verifiers"},
         }) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input", opt.input, "manifold document (JSON)");
        sub->add_option("--example", opt.example, "built-in example")
            ->check(CLI::IsMember(acb::builtin_example_names()));
        sub->add_option("--set", opt.sets, "parameter value, <param>=<rational> (repeatable)");
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--section", opt.sections, "only print these report sections (repeatable)")
            ->check(CLI::IsMember(acb::report_sections()));
        sub->callback([&command, name = name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(command, opt);
    } catch (const acb::InvalidManifold& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_issues(e.report());
        return 2;
    } catch (const acb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
