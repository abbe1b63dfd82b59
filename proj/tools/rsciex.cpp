#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsciex/archive.hpp"
#include "rsciex/canonical.hpp"
#include "rsciex/dublin_core.hpp"
#include "rsciex/metadata.hpp"
#include "rsciex/oai_client.hpp"
#include "rsciex/rsci_document.hpp"
#include "rsciex/scientometrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exit contract: 0 success, 1 domain rejection, 2 environment failure.
constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kEnvFailure = 2;

enum class Format { Text, Json };

struct GlobalOptions {
    Format format = Format::Text;
    bool verbose = false;
};

void log_note(const GlobalOptions& global, const std::string& message) {
    if (global.verbose) std::cerr << "rsciex: " << message << "\n";
}

void fail_note(const std::string& message) {
    std::cerr << "rsciex: error: " << message << "\n";
}

rsciex::rsci::Date today() {
    const auto now = std::time(nullptr);
    std::tm parts{};
    localtime_r(&now, &parts);
    return {parts.tm_year + 1900, static_cast<unsigned>(parts.tm_mon + 1),
            static_cast<unsigned>(parts.tm_mday)};
}

std::string two_decimals(const rsciex::metrics::Rational& value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", boost::rational_cast<double>(value));
    return buffer;
}

const char* severity_name(rsciex::Severity severity) {
    return severity == rsciex::Severity::Error ? "ERROR" : "WARNING";
}

json report_to_json(const rsciex::ValidationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"path", v.path},
                              {"rule", v.rule},
                              {"severity", severity_name(v.severity)},
                              {"message", v.message}});
    return {{"exportable", report.is_exportable()},
            {"errors", report.error_count()},
            {"warnings", report.warning_count()},
            {"violations", std::move(violations)}};
}

void print_report_text(const std::string& input, const rsciex::ValidationReport& report) {
    std::cout << input << ": " << report.error_count() << " errors, "
              << report.warning_count() << " warnings"
              << (report.is_exportable() ? " (exportable)" : " (not exportable)") << "\n";
    for (const auto& v : report.violations)
        std::cout << "  " << severity_name(v.severity) << " " << v.rule << " at " << v.path
                  << ": " << v.message << "\n";
}

int exit_code_for(const rsciex::Error& error) {
    return error.code() == rsciex::ErrorCode::NotExportable ? kRejected : kEnvFailure;
}

// --- validate ----------------------------------------------------------------

int run_validate(const GlobalOptions& global, const std::vector<std::string>& inputs) {
    int worst = kOk;
    json results = json::array();
    for (const auto& input : inputs) {
        try {
            const auto bundle = rsciex::ingest::load_canonical(input);
            const auto report = rsciex::validate_bundle(bundle);
            if (global.format == Format::Text) print_report_text(input, report);
            else {
                auto entry = report_to_json(report);
                entry["input"] = input;
                results.push_back(std::move(entry));
            }
            if (!report.is_exportable()) worst = std::max(worst, kRejected);
        } catch (const rsciex::Error& error) {
            fail_note(input + ": " + error.what());
            if (global.format == Format::Json)
                results.push_back({{"input", input}, {"error", error.what()}});
            worst = std::max(worst, exit_code_for(error));
        }
    }
    if (global.format == Format::Json)
        std::cout << json{{"command", "validate"}, {"results", std::move(results)}}.dump(2)
                  << "\n";
    return worst;
}

// --- export ------------------------------------------------------------------

int run_export(const GlobalOptions& global, const std::vector<std::string>& inputs,
               const std::string& out_dir, const std::string& date_override) {
    auto date = today();
    if (!date_override.empty()) {
        const auto parsed = rsciex::rsci::Date::parse(date_override);
        if (!parsed) {
            fail_note("--date must be YYYY-MM-DD, got \"" + date_override + "\"");
            return kEnvFailure;
        }
        date = *parsed;
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        fail_note("output directory " + out_dir + " is not usable");
        return kEnvFailure;
    }

    int worst = kOk;
    json results = json::array();
    for (const auto& input : inputs) {
        try {
            const auto bundle = rsciex::ingest::load_canonical(input);
            const auto archive = rsciex::rsci::package_archive(bundle, date);
            const auto target = fs::path(out_dir) / archive.archive_name;
            const auto bytes = archive.zip_bytes();
            std::ofstream out(target, std::ios::binary);
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
            if (!out) throw rsciex::Error(rsciex::ErrorCode::IoError,
                                          "cannot write " + target.string());
            log_note(global, "packaged " + input);
            if (global.format == Format::Text)
                std::cout << target.string() << " (" << archive.entries.size()
                          << " entries)\n";
            else
                results.push_back({{"input", input},
                                   {"archive", target.string()},
                                   {"entries", archive.entries.size()}});
        } catch (const rsciex::rsci::NotExportableError& error) {
            if (global.format == Format::Text) print_report_text(input, error.report());
            else {
                auto entry = report_to_json(error.report());
                entry["input"] = input;
                results.push_back(std::move(entry));
            }
            fail_note(input + ": not exportable, no archive written");
            worst = std::max(worst, kRejected);
        } catch (const rsciex::Error& error) {
            fail_note(input + ": " + error.what());
            worst = std::max(worst, exit_code_for(error));
        }
    }
    if (global.format == Format::Json)
        std::cout << json{{"command", "export"}, {"results", std::move(results)}}.dump(2)
                  << "\n";
    return worst;
}

// --- harvest -------------------------------------------------------------------

int run_harvest(const GlobalOptions& global, const rsciex::ingest::HarvestConfig& config,
                const std::string& out_path, int retries) {
    std::vector<rsciex::ingest::DublinCoreRecord> records;
    try {
        for (int attempt = 0;; ++attempt) {
            try {
                records = rsciex::ingest::harvest_oai(config);
                break;
            } catch (const rsciex::Error& error) {
                const bool transient = error.code() == rsciex::ErrorCode::NetworkError;
                if (!transient || attempt >= retries) throw;
                log_note(global, std::string("retrying after: ") + error.what());
            }
        }

        const auto bundle =
            rsciex::ingest::from_dublin_core(records, rsciex::JournalHeader{},
                                             rsciex::IssueHeader{});
        std::ofstream out(out_path, std::ios::binary);
        out << rsciex::ingest::articles_section_json(bundle.articles);
        if (!out) throw rsciex::Error(rsciex::ErrorCode::IoError,
                                      "cannot write " + out_path);
    } catch (const rsciex::Error& error) {
        fail_note(error.what());
        return kEnvFailure;
    }

    if (global.format == Format::Text)
        std::cout << out_path << " (" << records.size() << " article stubs)\n";
    else
        std::cout << json{{"command", "harvest"},
                          {"records", records.size()},
                          {"output", out_path}}
                         .dump(2)
                  << "\n";
    return kOk;
}

// --- metrics -------------------------------------------------------------------

std::vector<std::int64_t> parse_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rsciex::Error(rsciex::ErrorCode::IoError, "cannot open " + path);

    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    const auto split = [](const std::string& line) {
        std::vector<std::string> fields;
        std::string field;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(rsciex::trim(field));
                field.clear();
            } else field += c;
        }
        fields.push_back(rsciex::trim(field));
        return fields;
    };
    const auto to_lower = [](std::string s) {
        for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    const auto parse_count = [](const std::string& token, std::size_t line_no) {
        try {
            std::size_t used = 0;
            const auto value = std::stoll(token, &used);
            if (used != token.size() || value < 0) throw std::invalid_argument(token);
            return value;
        } catch (const std::exception&) {
            throw rsciex::Error(rsciex::ErrorCode::ParseError,
                                "line " + std::to_string(line_no)
                                    + ": not a citation count: \"" + token + "\"");
        }
    };

    // CSV mode when the first non-blank line has a `citations` column.
    std::size_t first = 0;
    while (first < lines.size() && rsciex::trim(lines[first]).empty()) ++first;
    std::vector<std::int64_t> counts;
    if (first < lines.size()) {
        const auto header = split(lines[first]);
        std::size_t column = header.size();
        for (std::size_t i = 0; i < header.size(); ++i)
            if (to_lower(header[i]) == "citations") column = i;
        if (column != header.size()) {
            for (std::size_t row = first + 1; row < lines.size(); ++row) {
                if (rsciex::trim(lines[row]).empty()) continue;
                const auto fields = split(lines[row]);
                if (column >= fields.size())
                    throw rsciex::Error(rsciex::ErrorCode::ParseError,
                                        "line " + std::to_string(row + 1)
                                            + ": missing citations column");
                counts.push_back(parse_count(fields[column], row + 1));
            }
            return counts;
        }
    }
    for (std::size_t row = 0; row < lines.size(); ++row) {
        const auto token = rsciex::trim(lines[row]);
        if (token.empty()) continue;
        counts.push_back(parse_count(token, row + 1));
    }
    return counts;
}

struct MetricsOptions {
    std::string profile_path;
    std::int64_t significant_y = -1; // -1: row not requested
    std::int64_t top_q = 0;
    std::vector<std::int64_t> journal_stats; // citations y-1, y-2, publications y-1, y-2
};

int run_metrics(const GlobalOptions& global, const MetricsOptions& options) {
    namespace metrics = rsciex::metrics;
    metrics::CitationProfile profile;
    try {
        profile = metrics::CitationProfile(parse_profile_file(options.profile_path));
    } catch (const rsciex::Error& error) {
        fail_note(options.profile_path + ": " + error.what());
        return kEnvFailure;
    }

    const auto n_p = profile.paper_count();
    const auto total = metrics::total_citations(profile);
    const auto h = metrics::h_index(profile);
    const auto g = metrics::g_index(profile);
    const auto i10 = metrics::i10_index(profile);

    json out = {{"command", "metrics"}, {"profile", options.profile_path},
                {"n_p", n_p},           {"n_c_tot", total},
                {"h", h},               {"g", g},
                {"i10", i10}};
    std::vector<std::pair<std::string, std::string>> rows = {
        {"N_p", std::to_string(n_p)},
        {"N_c,tot", std::to_string(total)},
    };

    if (n_p > 0) {
        const auto per_paper = metrics::citations_per_paper(profile);
        rows.emplace_back("citations/paper", two_decimals(per_paper));
        out["citations_per_paper"] = two_decimals(per_paper);
    } else {
        rows.emplace_back("citations/paper", "n/a");
        out["citations_per_paper"] = nullptr;
    }
    rows.emplace_back("h-index", std::to_string(h));

    if (h > 0) {
        const auto fit = metrics::hirsch_a(profile);
        const std::string marker = fit.within_empirical_range ? "within 3..5" : "outside 3..5";
        rows.emplace_back("a (N_c,tot/h^2)", two_decimals(fit.a) + " [" + marker + "]");
        out["a"] = two_decimals(fit.a);
        out["a_within_range"] = fit.within_empirical_range;
    } else {
        rows.emplace_back("a (N_c,tot/h^2)", "n/a");
        out["a"] = nullptr;
    }
    rows.emplace_back("g-index", std::to_string(g));
    rows.emplace_back("i10-index", std::to_string(i10));

    if (options.significant_y >= 0) {
        const auto count = metrics::significant_papers(profile, options.significant_y);
        rows.emplace_back("significant(>" + std::to_string(options.significant_y) + ")",
                          std::to_string(count));
        out["significant_papers"] = count;
    }
    if (options.top_q > 0) {
        try {
            const auto top = metrics::top_q_citations(profile, options.top_q);
            std::string joined;
            for (const auto value : top) {
                if (!joined.empty()) joined += " ";
                joined += std::to_string(value);
            }
            rows.emplace_back("top-" + std::to_string(options.top_q), joined);
            out["top_q"] = top;
        } catch (const rsciex::Error& error) {
            fail_note(error.what());
            return kRejected;
        }
    }
    if (!options.journal_stats.empty()) {
        const metrics::YearlyJournalStats stats{
            options.journal_stats[0], options.journal_stats[1], options.journal_stats[2],
            options.journal_stats[3]};
        try {
            const auto impact = metrics::impact_factor(stats);
            rows.emplace_back("impact factor", two_decimals(impact));
            out["impact_factor"] = two_decimals(impact);
        } catch (const rsciex::Error& error) {
            fail_note(error.what());
            return kRejected;
        }
    }

    if (global.format == Format::Text) {
        for (const auto& [label, value] : rows)
            std::cout << label << std::string(label.size() < 18 ? 18 - label.size() : 1, ' ')
                      << value << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Journal-issue metadata validator, citation-index XML exporter and "
                 "scientometric calculator"};
    app.require_subcommand(1);
    app.set_config("--config");

    GlobalOptions global;
    const std::map<std::string, Format> format_names{{"text", Format::Text},
                                                     {"json", Format::Json}};
    app.add_option("--format", global.format, "Report format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->capture_default_str();
    app.add_flag("-v,--verbose", global.verbose, "Log progress to stderr");

    // validate
    auto* validate = app.add_subcommand("validate", "Check issue files against the export rules");
    std::vector<std::string> validate_inputs;
    validate->add_option("inputs", validate_inputs, "Canonical issue files")->required();

    // export
    auto* export_cmd = app.add_subcommand("export", "Build upload archives from issue files");
    std::vector<std::string> export_inputs;
    std::string out_dir = ".";
    std::string date_override;
    export_cmd->add_option("inputs", export_inputs, "Canonical issue files")->required();
    export_cmd->add_option("--out", out_dir, "Output directory")
        ->envname("RSCIEX_OUT_DIR")
        ->capture_default_str();
    export_cmd->add_option("--date", date_override,
                           "Generation date YYYY-MM-DD (defaults to today)");

    // harvest
    auto* harvest = app.add_subcommand("harvest", "Pull article metadata from an OAI-PMH endpoint");
    rsciex::ingest::HarvestConfig harvest_config;
    std::string harvest_out = "articles.json";
    int retries = 0;
    std::string set_spec, from_bound, until_bound;
    harvest->add_option("endpoint", harvest_config.endpoint_url, "OAI-PMH base URL")
        ->required();
    harvest->add_option("--out", harvest_out, "Output file for article stubs")
        ->capture_default_str();
    harvest->add_option("--set", set_spec, "OAI set filter");
    harvest->add_option("--from", from_bound, "Earliest datestamp");
    harvest->add_option("--until", until_bound, "Latest datestamp");
    harvest->add_option("--max-records", harvest_config.max_records, "Record cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    harvest->add_option("--timeout", harvest_config.timeout_seconds, "Seconds per request")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    harvest->add_option("--retries", retries, "Extra attempts after network failures")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "Compute citation indicators for a profile");
    MetricsOptions metrics_options;
    metrics_cmd
        ->add_option("profile", metrics_options.profile_path,
                     "Citation profile: one count per line, or CSV with a `citations` column")
        ->required();
    metrics_cmd->add_option("--significant-y", metrics_options.significant_y,
                            "Also count papers with more than y citations");
    metrics_cmd->add_option("--top-q", metrics_options.top_q,
                            "Also list the q most-cited papers");
    metrics_cmd
        ->add_option("--journal-stats", metrics_options.journal_stats,
                     "citations_prev1 citations_prev2 publications_prev1 publications_prev2: "
                     "also compute the two-year impact factor")
        ->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        // Usage problems are environment failures for scripts; --help stays 0.
        const int rc = app.exit(error);
        return rc == 0 ? kOk : kEnvFailure;
    }

    try {
        if (validate->parsed()) return run_validate(global, validate_inputs);
        if (export_cmd->parsed()) return run_export(global, export_inputs, out_dir, date_override);
        if (harvest->parsed()) {
            if (!set_spec.empty()) harvest_config.set_spec = set_spec;
            if (!from_bound.empty()) harvest_config.from = from_bound;
            if (!until_bound.empty()) harvest_config.until = until_bound;
            return run_harvest(global, harvest_config, harvest_out, retries);
        }
        if (metrics_cmd->parsed()) return run_metrics(global, metrics_options);
    } catch (const std::exception& error) {
        fail_note(error.what());
        return kEnvFailure;
    }
    return kEnvFailure;
}
