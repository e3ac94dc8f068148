#include "catswarm/results_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "catswarm/text.hpp"
#include "catswarm/version.hpp"

namespace catswarm {
namespace {

constexpr std::string_view kResultsHeader =
    "algorithm,function,run_index,seed,best_fitness,evaluations_used,best_position";
constexpr std::string_view kTraceHeader = "algorithm,function,run_index,iteration,best_fitness";

std::string metadata_value(const ResultsFile& results, const std::string& key) {
    for (const auto& [k, v] : results.metadata)
        if (k == key) return v;
    return {};
}

std::vector<double> parse_position(std::string_view field, const std::string& context) {
    std::vector<double> out;
    if (text::trim(field).empty()) return out;
    for (auto part : text::split(field, ';')) out.push_back(text::parse_double(part, context));
    return out;
}

}  // namespace

bool same_results(const ResultsFile& a, const ResultsFile& b) {
    if (a.metadata != b.metadata || a.trials.size() != b.trials.size()) return false;
    for (std::size_t i = 0; i < a.trials.size(); ++i)
        if (!same_trial(a.trials[i], b.trials[i])) return false;
    return true;
}

std::filesystem::path trace_path_for(const std::filesystem::path& results_path) {
    std::filesystem::path p = results_path;
    const std::string ext = p.extension().string();
    p.replace_extension();
    p += "_traces";
    p += ext.empty() ? ".csv" : ext;
    return p;
}

void write_results(const ResultsFile& results, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write results file: " + path.string());
    for (const auto& [key, value] : results.metadata) out << "# " << key << " = " << value << "\n";
    out << kResultsHeader << "\n";
    bool any_trace = false;
    for (const auto& t : results.trials) {
        out << t.algorithm << ',' << t.function << ',' << t.run_index << ',' << t.seed << ','
            << text::format_double(t.best_fitness) << ',' << t.evaluations_used << ','
            << text::join(t.best_position, ';') << "\n";
        any_trace = any_trace || !t.trace.empty();
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path.string());

    if (!any_trace) return;
    const auto tpath = trace_path_for(path);
    std::ofstream tout(tpath);
    if (!tout) throw std::runtime_error("cannot write trace file: " + tpath.string());
    tout << kTraceHeader << "\n";
    for (const auto& t : results.trials)
        for (std::size_t i = 0; i < t.trace.size(); ++i)
            tout << t.algorithm << ',' << t.function << ',' << t.run_index << ',' << i << ','
                 << text::format_double(t.trace[i]) << "\n";
    tout.flush();
    if (!tout) throw std::runtime_error("write failed: " + tpath.string());
}

ResultsFile load_results(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read results file: " + path.string());

    ResultsFile results;
    std::string line;
    bool header_seen = false;
    std::size_t record = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = text::trim(line);
        if (view.empty()) continue;
        if (view.front() == '#') {
            view.remove_prefix(1);
            const auto eq = view.find('=');
            if (eq == std::string_view::npos)
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": malformed metadata line (expected key = value)");
            results.metadata.emplace_back(std::string(text::trim(view.substr(0, eq))),
                                          std::string(text::trim(view.substr(eq + 1))));
            continue;
        }
        if (!header_seen) {
            if (view != kResultsHeader)
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                         ": unexpected column header '" + std::string(view) + "'");
            header_seen = true;
            continue;
        }
        const auto fields = text::split(view, ',');
        const std::string context = "record " + std::to_string(record);
        if (fields.size() != 7)
            throw std::runtime_error(path.string() + ": " + context + ": expected 7 fields, got " +
                                     std::to_string(fields.size()));
        TrialResult t;
        t.algorithm = std::string(text::trim(fields[0]));
        t.function = std::string(text::trim(fields[1]));
        t.run_index = static_cast<int>(text::parse_int(fields[2], context + " run_index"));
        t.seed = text::parse_u64(fields[3], context + " seed");
        t.best_fitness = text::parse_double(fields[4], context + " best_fitness");
        t.evaluations_used = text::parse_u64(fields[5], context + " evaluations_used");
        t.best_position = parse_position(fields[6], context + " best_position");
        results.trials.push_back(std::move(t));
        ++record;
    }
    if (!header_seen)
        throw std::runtime_error(path.string() + ": missing column header");

    const std::string version = metadata_value(results, "suite_version");
    if (version != kSuiteVersion)
        results.warnings.push_back("suite_version mismatch: file has '" + version +
                                   "', this build writes '" + std::string(kSuiteVersion) + "'");

    // traces, when the sibling file exists
    const auto tpath = trace_path_for(path);
    std::ifstream tin(tpath);
    if (tin) {
        std::size_t tline_no = 0;
        auto find_trial = [&](std::string_view algo, std::string_view fn,
                              int run) -> TrialResult* {
            for (auto& t : results.trials)
                if (t.run_index == run && t.algorithm == algo && t.function == fn) return &t;
            return nullptr;
        };
        TrialResult* current = nullptr;
        while (std::getline(tin, line)) {
            ++tline_no;
            std::string_view view = text::trim(line);
            if (view.empty() || view.front() == '#') continue;
            if (tline_no == 1) {
                if (view != kTraceHeader)
                    throw std::runtime_error(tpath.string() + ":1: unexpected trace header");
                continue;
            }
            const auto fields = text::split(view, ',');
            const std::string context = tpath.string() + ":" + std::to_string(tline_no);
            if (fields.size() != 5)
                throw std::runtime_error(context + ": expected 5 fields, got " +
                                         std::to_string(fields.size()));
            const int run = static_cast<int>(text::parse_int(fields[2], context + " run_index"));
            if (!current || current->algorithm != fields[0] || current->function != fields[1] ||
                current->run_index != run) {
                current = find_trial(fields[0], fields[1], run);
                if (!current)
                    throw std::runtime_error(context + ": trace row for unknown trial");
            }
            const auto iteration = text::parse_u64(fields[3], context + " iteration");
            if (iteration != current->trace.size())
                throw std::runtime_error(context + ": out-of-order iteration index");
            current->trace.push_back(text::parse_double(fields[4], context + " best_fitness"));
        }
    }
    return results;
}

std::vector<std::pair<std::string, std::string>> protocol_metadata(const Protocol& protocol) {
    std::vector<std::pair<std::string, std::string>> md;
    md.emplace_back("suite_version", std::string(kSuiteVersion));
    md.emplace_back("library_version", std::string(kVersion));
    md.emplace_back("seed_scheme", std::string(kSeedScheme));
    md.emplace_back("master_seed", std::to_string(protocol.master_seed));
    md.emplace_back("n_runs", std::to_string(protocol.n_runs));
    md.emplace_back("n_agents", std::to_string(protocol.n_agents));
    md.emplace_back("max_iters", std::to_string(protocol.max_iters));
    {
        std::string fns, algos;
        for (const auto& f : protocol.functions) {
            if (!fns.empty()) fns += ';';
            fns += f;
        }
        for (const auto& a : protocol.algorithms) {
            if (!algos.empty()) algos += ';';
            algos += a;
        }
        md.emplace_back("functions", fns);
        md.emplace_back("algorithms", algos);
    }
    md.emplace_back("stddev_convention", "sample (n-1)");
    for (const auto& algo : protocol.algorithms) {
        const AlgoConfig c = protocol.config_for(algo);
        std::ostringstream os;
        os << "smp=" << c.base.smp << " srd=" << text::format_double(c.base.srd)
           << " cdc=" << text::format_double(c.base.cdc) << " spc=" << (c.base.spc ? 1 : 0)
           << " mr=" << text::format_double(c.base.mr)
           << " c1=" << text::format_double(c.base.c1) << " v_max="
           << (c.base.v_max ? text::format_double(*c.base.v_max) : std::string("0.5*range"));
        if (algo == "aicso")
            os << " w_start=" << text::format_double(c.w_start)
               << " w_end=" << text::format_double(c.w_end);
        if (algo == "pcso") os << " groups=" << c.n_groups << " ech=" << c.ech;
        md.emplace_back("params_" + algo, os.str());
    }
    return md;
}

}  // namespace catswarm
