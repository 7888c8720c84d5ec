#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace vfw::bench {

namespace {

std::string format_value(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    if (n == 0) return 0.0;
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

AlgorithmStats stats_for(const std::vector<RunRecord>& records, solver::StepsizeMode mode) {
    std::vector<double> iterations;
    std::vector<double> cpu;
    for (const RunRecord& rec : records) {
        if (rec.algorithm != mode) continue;
        iterations.push_back(static_cast<double>(rec.iterations));
        cpu.push_back(rec.cpu_seconds);
    }
    AlgorithmStats out;
    out.runs = static_cast<long>(iterations.size());
    if (out.runs == 0) return out;
    const double n = static_cast<double>(out.runs);
    double it_sum = 0.0, cpu_sum = 0.0;
    for (double v : iterations) it_sum += v;
    for (double v : cpu) cpu_sum += v;
    out.mean_iterations = it_sum / n;
    out.mean_cpu_seconds = cpu_sum / n;
    out.median_iterations = median(iterations);
    out.median_cpu_seconds = median(cpu);
    out.min_iterations = *std::min_element(iterations.begin(), iterations.end());
    out.max_iterations = *std::max_element(iterations.begin(), iterations.end());
    out.min_cpu_seconds = *std::min_element(cpu.begin(), cpu.end());
    out.max_cpu_seconds = *std::max_element(cpu.begin(), cpu.end());
    return out;
}

nlohmann::ordered_json stats_to_json(const AlgorithmStats& s) {
    nlohmann::ordered_json j;
    j["runs"] = s.runs;
    j["mean_iterations"] = s.mean_iterations;
    j["median_iterations"] = s.median_iterations;
    j["min_iterations"] = s.min_iterations;
    j["max_iterations"] = s.max_iterations;
    j["mean_cpu_seconds"] = s.mean_cpu_seconds;
    j["median_cpu_seconds"] = s.median_cpu_seconds;
    j["min_cpu_seconds"] = s.min_cpu_seconds;
    j["max_cpu_seconds"] = s.max_cpu_seconds;
    return j;
}

template <typename Fn>
void write_file(const std::string& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("bench: cannot write \"" + path + "\"");
    fn(out);
    if (!out) throw IoError("bench: write to \"" + path + "\" failed");
}

}  // namespace

std::vector<Vector> sample_starts(const region::Polytope& feasible, int n_starts, uint64_t seed) {
    if (n_starts < 1) throw Error("bench: need at least one start");
    std::vector<Vector> starts;
    starts.reserve(static_cast<size_t>(n_starts));
    for (int i = 1; i <= n_starts; ++i) {
        std::mt19937_64 gen(seed ^ static_cast<uint64_t>(i));
        starts.push_back(feasible.sample_uniform(gen));
    }
    return starts;
}

std::vector<RunRecord> multistart(const cone::OrderingCone& ordering,
                                  const objective::QuadraticVectorObjective& objective,
                                  const region::Polytope& feasible,
                                  const solver::SolverConfig& armijo_config,
                                  const solver::SolverConfig& adaptive_config, int n_starts,
                                  uint64_t seed, int jobs) {
    const std::vector<Vector> starts = sample_starts(feasible, n_starts, seed);

    // Record slots are fixed up front so parallel execution cannot reorder
    // the output: slot 2i is the Armijo run of start i, slot 2i+1 the
    // adaptive one.
    std::vector<RunRecord> records(2 * static_cast<size_t>(n_starts));
    std::atomic<size_t> next{0};

    auto run_one = [&](size_t slot) {
        const int start_index = static_cast<int>(slot / 2);
        const bool armijo = slot % 2 == 0;
        solver::SolverConfig config = armijo ? armijo_config : adaptive_config;
        config.stepsize_mode = armijo ? solver::StepsizeMode::Armijo : solver::StepsizeMode::Adaptive;
        config.keep_trace = false;

        RunRecord& rec = records[slot];
        rec.start_id = start_index + 1;
        rec.algorithm = config.stepsize_mode;
        rec.start_point = starts[static_cast<size_t>(start_index)];
        try {
            const solver::SolveResult res =
                solver::solve(ordering, objective, feasible, config, rec.start_point);
            rec.final_point = res.x;
            rec.final_objectives = res.objectives;
            rec.iterations = res.iterations;
            rec.cpu_seconds = res.wall_seconds;
            rec.final_gap = res.v;
            rec.status = res.status;
        } catch (const Error&) {
            rec.status = solver::SolveStatus::LineSearchFailure;
            rec.final_point = rec.start_point;
            rec.final_objectives = objective.value(rec.start_point);
            rec.final_gap = 0.0;
        }
    };

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(records.size())));
    if (workers == 1) {
        for (size_t slot = 0; slot < records.size(); ++slot) run_one(slot);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t slot = next.fetch_add(1); slot < records.size(); slot = next.fetch_add(1)) {
                    run_one(slot);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }
    return records;
}

AggregateStats aggregate(const std::vector<RunRecord>& records) {
    if (records.empty()) throw Error("bench: cannot aggregate zero records");
    AggregateStats out;
    out.armijo = stats_for(records, solver::StepsizeMode::Armijo);
    out.adaptive = stats_for(records, solver::StepsizeMode::Adaptive);
    return out;
}

std::vector<bool> strictly_dominated(const std::vector<RunRecord>& records, double tol) {
    std::vector<bool> dominated(records.size(), false);
    for (size_t i = 0; i < records.size(); ++i) {
        for (size_t j = 0; j < records.size(); ++j) {
            if (i == j) continue;
            const Vector& a = records[j].final_objectives;
            const Vector& b = records[i].final_objectives;
            if (a.size() != b.size()) continue;
            bool strict = true;
            for (Eigen::Index c = 0; c < a.size(); ++c) {
                if (!(a(c) < b(c) - tol)) {
                    strict = false;
                    break;
                }
            }
            if (strict) {
                dominated[i] = true;
                break;
            }
        }
    }
    return dominated;
}

void write_front_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    const Eigen::Index n = records.empty() ? 0 : records.front().final_point.size();
    const Eigen::Index m = records.empty() ? 0 : records.front().final_objectives.size();

    std::string header = "start_id,algorithm,iterations,cpu_seconds,final_v";
    for (Eigen::Index j = 0; j < n; ++j) header += ",x" + std::to_string(j + 1);
    if (m == 2) {
        header += ",neg_return(f1),risk(f2)";
    } else {
        for (Eigen::Index i = 0; i < m; ++i) header += ",f" + std::to_string(i + 1);
    }
    out << header << '\n';

    for (const RunRecord& rec : records) {
        std::string line = std::to_string(rec.start_id);
        line += ',';
        line += solver::to_string(rec.algorithm);
        line += ',';
        line += std::to_string(rec.iterations);
        line += ',';
        line += format_value(rec.cpu_seconds);
        line += ',';
        line += format_value(rec.final_gap);
        for (Eigen::Index j = 0; j < rec.final_point.size(); ++j) {
            line += ',';
            line += format_value(rec.final_point(j));
        }
        for (Eigen::Index i = 0; i < rec.final_objectives.size(); ++i) {
            line += ',';
            line += format_value(rec.final_objectives(i));
        }
        out << line << '\n';
    }
}

void write_stats_csv(const AggregateStats& stats, std::ostream& out) {
    out << "algorithm,runs,mean_iterations,median_iterations,min_iterations,max_iterations,"
           "mean_cpu_seconds,median_cpu_seconds,min_cpu_seconds,max_cpu_seconds\n";
    auto row = [&](const char* name, const AlgorithmStats& s) {
        out << name << ',' << s.runs << ',' << format_value(s.mean_iterations) << ','
            << format_value(s.median_iterations) << ',' << format_value(s.min_iterations) << ','
            << format_value(s.max_iterations) << ',' << format_value(s.mean_cpu_seconds) << ','
            << format_value(s.median_cpu_seconds) << ',' << format_value(s.min_cpu_seconds) << ','
            << format_value(s.max_cpu_seconds) << '\n';
    };
    row("armijo", stats.armijo);
    row("adaptive", stats.adaptive);
}

void write_stats_json(const AggregateStats& stats, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["armijo"] = stats_to_json(stats.armijo);
    doc["adaptive"] = stats_to_json(stats.adaptive);
    out << doc.dump(2) << '\n';
}

void write_front_csv_file(const std::vector<RunRecord>& records, const std::string& path) {
    write_file(path, [&](std::ostream& out) { write_front_csv(records, out); });
}

void write_stats_csv_file(const AggregateStats& stats, const std::string& path) {
    write_file(path, [&](std::ostream& out) { write_stats_csv(stats, out); });
}

void write_stats_json_file(const AggregateStats& stats, const std::string& path) {
    write_file(path, [&](std::ostream& out) { write_stats_json(stats, out); });
}

}  // namespace vfw::bench
