#include "am4rre/pipeline.hpp"
#include "am4rre/report.hpp"
#include "am4rre/serializer.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace am4rre;

constexpr int kExitClean = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

bool use_color() {
    const char* env = std::getenv("AM4RRE_COLOR");
    std::string mode = env ? env : "auto";
    if (mode == "always")
        return true;
    if (mode == "never")
        return false;
    return isatty(fileno(stderr));
}

struct Options {
    std::vector<std::string> files;
    std::string format = "human";
    bool no_derived = false;
    bool strict = false;
    bool timestamps = false;
    std::string json_path;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inputs are independent models; results are emitted in argument order.
std::optional<std::vector<AnalysisResult>> analyze_files(const Options& opts,
                                                         AnalysisStage stage) {
    AnalyzeOptions analyze_opts;
    analyze_opts.stage = stage;
    analyze_opts.derive_delegations = !opts.no_derived;
    analyze_opts.strict = opts.strict;

    std::vector<AnalysisResult> results;
    for (const std::string& path : opts.files) {
        auto text = read_file(path);
        if (!text) {
            std::cerr << "error: cannot read '" << path << "'\n";
            return std::nullopt;
        }
        results.push_back(analyze(*text, path, analyze_opts));
    }
    return results;
}

void print_diagnostics(const std::vector<AnalysisResult>& results) {
    bool color = use_color();
    for (const AnalysisResult& r : results)
        for (const Diagnostic& d : r.diagnostics)
            std::cerr << render_diagnostic(d, color) << '\n';
}

int exit_code(const std::vector<AnalysisResult>& results) {
    for (const AnalysisResult& r : results)
        if (!r.ok())
            return kExitDiagnostics;
    return kExitClean;
}

void print_json(const nlohmann::json& doc) {
    std::cout << doc.dump(2) << '\n';
}

int run_check(const Options& opts) {
    auto results = analyze_files(opts, AnalysisStage::Check);
    if (!results)
        return kExitUsage;
    print_diagnostics(*results);
    if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const AnalysisResult& r : *results)
            arr.push_back({{"source", r.model.source_name},
                           {"diagnostics", diagnostics_json(r.diagnostics)}});
        print_json(arr);
    }
    return exit_code(*results);
}

int run_applicability(const Options& opts) {
    auto results = analyze_files(opts, AnalysisStage::Applicability);
    if (!results)
        return kExitUsage;
    print_diagnostics(*results);
    if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const AnalysisResult& r : *results)
            arr.push_back(
                {{"source", r.model.source_name},
                 {"diagnostics", diagnostics_json(r.diagnostics)},
                 {"applicability",
                  r.applicability ? applicability_json(*r.applicability) : nlohmann::json()}});
        print_json(arr);
    } else {
        for (const AnalysisResult& r : *results) {
            std::cout << r.model.source_name << ":\n";
            if (!r.applicability) {
                std::cout << "  not evaluated (fix the reported errors first)\n";
                continue;
            }
            for (const ActApplicability& a : r.applicability->acts) {
                std::cout << "  " << a.act_id << ": "
                          << (a.applicable ? "applicable" : "not applicable") << '\n';
                for (const EvidenceItem& e : a.jurisdiction_evidence)
                    std::cout << "    jurisdiction " << e.criterion_id << " matched " << e.tag
                              << " via " << e.context_id << '\n';
                for (const EvidenceItem& e : a.field_evidence)
                    std::cout << "    field " << e.criterion_id << " matched " << e.tag
                              << " via " << e.context_id << '\n';
            }
            std::cout << "  priority:";
            for (const std::string& id : r.applicability->priority)
                std::cout << ' ' << id;
            std::cout << '\n';
        }
    }
    return exit_code(*results);
}

int run_trace(const Options& opts) {
    auto results = analyze_files(opts, AnalysisStage::Trace);
    if (!results)
        return kExitUsage;
    print_diagnostics(*results);
    if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const AnalysisResult& r : *results)
            arr.push_back({{"source", r.model.source_name},
                           {"diagnostics", diagnostics_json(r.diagnostics)},
                           {"trace", r.trace ? trace_json(*r.trace) : nlohmann::json()}});
        print_json(arr);
    } else {
        for (const AnalysisResult& r : *results) {
            std::cout << r.model.source_name << ":\n";
            if (!r.trace) {
                std::cout << "  not evaluated (fix the reported errors first)\n";
                continue;
            }
            const TraceReport& t = *r.trace;
            for (const Relationship& rel : t.derived_relationships)
                std::cout << "  derived: " << rel.source_id << ' '
                          << relationship_keyword(rel.kind) << ' ' << rel.target_id << '\n';
            for (const MappingSuggestion& s : t.mapping_suggestions)
                std::cout << "  suggestion: " << s.subject_id << " -> " << s.stakeholder_id
                          << '\n';
            if (!t.unmapped_subjects.empty()) {
                std::cout << "  unmapped subjects:";
                for (const std::string& id : t.unmapped_subjects)
                    std::cout << ' ' << id;
                std::cout << '\n';
            }
            std::printf("  demand coverage: %.1f%%", t.demand_coverage * 100.0);
            if (!t.uncovered_demands.empty()) {
                std::cout << "; uncovered:";
                for (const std::string& id : t.uncovered_demands)
                    std::cout << ' ' << id;
            }
            std::cout << '\n';
        }
    }
    return exit_code(*results);
}

int run_milestones(const Options& opts) {
    auto results = analyze_files(opts, AnalysisStage::Full);
    if (!results)
        return kExitUsage;
    print_diagnostics(*results);
    if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const AnalysisResult& r : *results)
            arr.push_back(
                {{"source", r.model.source_name},
                 {"diagnostics", diagnostics_json(r.diagnostics)},
                 {"milestones",
                  r.milestones ? milestones_json(*r.milestones) : nlohmann::json()}});
        print_json(arr);
    } else {
        for (const AnalysisResult& r : *results) {
            std::cout << r.model.source_name << ":\n";
            if (!r.milestones) {
                std::cout << "  not evaluated (fix the reported errors first)\n";
                continue;
            }
            for (MilestoneId m : kMilestones) {
                const MilestoneEntry& entry = r.milestones->for_milestone(m);
                std::cout << "  " << milestone_name(m) << ": "
                          << milestone_state_name(entry.state) << '\n';
                for (const BlockingReason& reason : entry.blocking_reasons)
                    std::cout << "    - " << reason.text << '\n';
            }
        }
    }
    return exit_code(*results);
}

int run_report(const Options& opts) {
    auto results = analyze_files(opts, AnalysisStage::Full);
    if (!results)
        return kExitUsage;
    print_diagnostics(*results);

    ReportOptions report_opts;
    report_opts.include_timestamp = opts.timestamps;
    nlohmann::json doc = build_report(*results, report_opts);

    if (opts.json_path.empty()) {
        print_json(doc);
    } else {
        std::ofstream out(opts.json_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << opts.json_path << "'\n";
            return kExitUsage;
        }
        out << doc.dump(2) << '\n';
    }
    return exit_code(*results);
}

int run_fmt(const Options& opts) {
    auto results = analyze_files(opts, AnalysisStage::Parse);
    if (!results)
        return kExitUsage;
    print_diagnostics(*results);
    if (exit_code(*results) != kExitClean)
        return kExitDiagnostics;
    for (const AnalysisResult& r : *results)
        std::cout << serialize(r.model);
    return kExitClean;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Layered regulatory-requirements specification checker"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Options opts;

    auto add_common = [&](CLI::App* cmd, bool many_files = true) {
        auto* files = cmd->add_option("files", opts.files, "input .amr file(s)")
                          ->required()
                          ->check(CLI::ExistingFile);
        if (!many_files)
            files->expected(1);
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"human", "json"}))
            ->capture_default_str();
        cmd->add_flag("--no-derived", opts.no_derived,
                      "do not derive duties along delegation chains");
        cmd->add_flag("--strict", opts.strict, "treat warnings as errors");
        return cmd;
    };

    CLI::App* check = add_common(
        app.add_subcommand("check", "parse, resolve, and validate specifications"));
    CLI::App* applicability = add_common(app.add_subcommand(
        "applicability", "per-act applicability verdicts with matching evidence"));
    CLI::App* trace = add_common(app.add_subcommand(
        "trace", "derived delegation duties, mapping suggestions, demand coverage"));
    CLI::App* milestones = add_common(
        app.add_subcommand("milestones", "M1-M4 milestone states with blocking reasons"));
    CLI::App* report = add_common(
        app.add_subcommand("report", "aggregate JSON report of all analyses"));
    report->add_option("--json", opts.json_path, "write the report to this path");
    report->add_flag("--timestamps", opts.timestamps, "include a generation timestamp");
    CLI::App* fmt = add_common(
        app.add_subcommand("fmt", "canonical re-serialization to standard output"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    if (check->parsed())
        return run_check(opts);
    if (applicability->parsed())
        return run_applicability(opts);
    if (trace->parsed())
        return run_trace(opts);
    if (milestones->parsed())
        return run_milestones(opts);
    if (report->parsed())
        return run_report(opts);
    if (fmt->parsed())
        return run_fmt(opts);
    return kExitUsage;
}
