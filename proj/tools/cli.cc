// Copyright 2026 The ScanForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fmt/format.h>
#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scanforge/exec/bench.h"
#include "scanforge/exec/parallel.h"
#include "scanforge/kernels.h"
#include "scanforge/ops.h"
#include "scanforge/render.h"
#include "scanforge/trace.h"
#include "scanforge/verify.h"

namespace scanforge::cli {

namespace {

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string &text, const std::string &separators) {
    std::vector<std::string> out;
    std::string cur;
    bool any = false;
    for (char c : text) {
        if (separators.find(c) != std::string::npos) {
            if (any) out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += c;
            any = true;
        }
    }
    if (any) out.push_back(cur);
    return out;
}

template <typename N>
N parse_number(const std::string &token) {
    N v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw UsageError("cannot parse '" + token + "' as a number");
    }
    return v;
}

// Element parsing and printing per operator domain.

void parse_into(const std::string &text, const AssocOp<std::int64_t> &, std::vector<std::int64_t> &out) {
    for (const auto &t : split(text, ", \t\n")) out.push_back(parse_number<std::int64_t>(t));
}

void parse_into(const std::string &text, const AssocOp<double> &, std::vector<double> &out) {
    for (const auto &t : split(text, ", \t\n")) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception &) {
            throw UsageError("cannot parse '" + t + "' as a number");
        }
    }
}

void parse_into(const std::string &text, const AssocOp<Matrix> &op, std::vector<Matrix> &out) {
    const std::size_t dim = op.identity ? op.identity->dim() : 2;
    std::vector<std::int64_t> entries;
    for (const auto &t : split(text, ", \t\n")) entries.push_back(parse_number<std::int64_t>(t));
    if (entries.size() % (dim * dim) != 0) {
        throw UsageError(fmt::format("{} entries do not form whole {}x{} matrices", entries.size(), dim, dim));
    }
    for (std::size_t i = 0; i < entries.size(); i += dim * dim) {
        out.emplace_back(dim, std::vector<std::int64_t>(entries.begin() + i, entries.begin() + i + dim * dim));
    }
}

void parse_into(const std::string &text, const AssocOp<std::string> &, std::vector<std::string> &out) {
    for (auto &t : split(text, ",\n")) out.push_back(std::move(t));
}

void parse_into(const std::string &text, const AssocOp<verify::Interval> &, std::vector<verify::Interval> &out) {
    for (const auto &t : split(text, ", \t\n")) {
        try {
            out.push_back(verify::Interval::parse(t));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
}

std::string show(std::int64_t v) {
    return std::to_string(v);
}
std::string show(double v) {
    return fmt::format("{}", v);
}
std::string show(const Matrix &m) {
    return m.str();
}
std::string show(const std::string &s) {
    return s;
}
std::string show(const verify::Interval &v) {
    return v.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::string &path, const std::string &content) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write '" + tmp + "'");
        }
        f << content;
        f.flush();
        if (!f) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing '" + tmp + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

std::size_t env_workers(std::size_t fallback) {
    const char *v = std::getenv("SCANFORGE_WORKERS");
    if (v == nullptr || *v == '\0') return fallback;
    auto w = parse_number<std::size_t>(v);
    if (w == 0) {
        throw UsageError("SCANFORGE_WORKERS must be positive");
    }
    return w;
}

std::string catalog_listing() {
    std::string s = "kernels:";
    for (const auto &k : kernel_names()) s += " " + k;
    s += "\noperators:";
    for (const auto &o : op_names()) s += " " + o;
    return s;
}

Kernel pick_kernel(const std::string &name, std::size_t chunks) {
    try {
        return kernel_by_name(name, chunks);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string(e.what()) + "\n" + catalog_listing());
    }
}

const AnyOp &pick_op(const std::string &name) {
    try {
        return find_op(name);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string(e.what()) + "\n" + catalog_listing());
    }
}

trace::TraceHistory trace_kernel(const Kernel &kernel, std::size_t n) {
    return std::visit([n](const auto &k) { return trace::run_traced(k, n); }, kernel);
}

std::vector<std::size_t> parse_p_range(const std::string &text) {
    std::vector<std::size_t> ps;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        auto lo = parse_number<std::size_t>(text.substr(0, colon));
        auto hi = parse_number<std::size_t>(text.substr(colon + 1));
        if (lo > hi) throw UsageError("empty p range '" + text + "'");
        for (auto p = lo; p <= hi; ++p) ps.push_back(p);
    } else {
        for (const auto &t : split(text, ", ")) ps.push_back(parse_number<std::size_t>(t));
    }
    for (auto p : ps) {
        if (p < 2) throw UsageError("p values must be >= 2");
    }
    return ps;
}

struct RunArgs {
    std::string kernel;
    std::string op = "add";
    std::string input;
    std::string input_file;
    std::size_t chunks = 2;
    std::size_t workers = 0;
};

int do_run(const RunArgs &a, std::ostream &out) {
    const Kernel kernel = pick_kernel(a.kernel, a.chunks);
    const AnyOp &any = pick_op(a.op);
    const std::string text = a.input_file.empty() ? a.input : read_file(a.input_file);
    const std::size_t workers = env_workers(a.workers);
    std::visit(
        [&](const auto &op) {
            using T = typename std::decay_t<decltype(op)>::value_type;
            std::vector<T> values;
            parse_into(text, op, values);
            std::vector<T> result;
            if (workers > 0) {
                result = std::visit([&](const auto &k) { return exec::run_parallel(k, values, op, workers); }, kernel);
            } else {
                VectorStore<T> store(std::move(values));
                apply_kernel(kernel, store, op);
                result = store.values();
            }
            std::string line;
            for (std::size_t i = 0; i < result.size(); ++i) {
                line += (i ? "," : "") + show(result[i]);
            }
            out << line << '\n';
        },
        any);
    return kOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generic prefix scan kernels: compute, trace, render, verify, bench"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto *run_cmd = app.add_subcommand("run", "Scan a list of values");
    run_cmd->add_option("--kernel", run_args.kernel, "serial | brent-kung | brent-kung-8 | scan-then-fan")->required();
    run_cmd->add_option("--op", run_args.op, "Operator name from the catalog");
    auto *inline_opt = run_cmd->add_option("--input", run_args.input, "Comma-separated elements");
    auto *file_opt = run_cmd->add_option("--input-file", run_args.input_file, "File holding the elements");
    inline_opt->excludes(file_opt);
    run_cmd->add_option("--chunks", run_args.chunks, "Chunk count for scan-then-fan");
    run_cmd->add_option("--workers", run_args.workers, "Run over futures on this many workers");

    std::string kernel_name;
    std::size_t n = 0;
    std::size_t chunks = 2;
    std::string out_path;

    auto *trace_cmd = app.add_subcommand("trace", "Record the index accesses of a kernel");
    trace_cmd->add_option("--kernel", kernel_name)->required();
    trace_cmd->add_option("--n", n)->required();
    trace_cmd->add_option("--chunks", chunks);
    trace_cmd->add_option("--out", out_path, "JSON output path (stdout if omitted)");

    std::string trace_path;
    std::size_t render_n = 0;
    render::Viewport viewport;
    auto *render_cmd = app.add_subcommand("render", "Draw a kernel's operations as an SVG gate diagram");
    auto *trace_opt = render_cmd->add_option("--trace", trace_path, "Trace JSON from `trace`");
    auto *rk = render_cmd->add_option("--kernel", kernel_name);
    render_cmd->add_option("--n", render_n, "Processor count (with --trace defaults to the largest index)");
    render_cmd->add_option("--chunks", chunks);
    render_cmd->add_option("--out", out_path, "SVG output path")->required();
    render_cmd->add_option("--width", viewport.width_px);
    render_cmd->add_option("--height", viewport.height_px);
    trace_opt->excludes(rk);

    auto *verify_cmd = app.add_subcommand("verify", "Check a kernel with the interval monoid");
    verify_cmd->add_option("--kernel", kernel_name)->required();
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--chunks", chunks);

    std::string bench_kernels = "serial,brent-kung";
    std::string p_range = "4:32";
    double op_cost_ms = 10;
    std::uint64_t op_ticks = 1;
    std::size_t trials = 3;
    bool virtual_clock = false;
    auto *bench_cmd = app.add_subcommand("bench", "Compare two kernels run over futures");
    bench_cmd->add_option("--kernels", bench_kernels, "baseline,candidate");
    bench_cmd->add_option("--p", p_range, "lo:hi or a comma list");
    bench_cmd->add_option("--op-cost-ms", op_cost_ms, "Injected delay per operation");
    bench_cmd->add_option("--op-ticks", op_ticks, "Per-operation cost with --virtual-clock");
    bench_cmd->add_option("--trials", trials);
    bench_cmd->add_option("--chunks", chunks);
    bench_cmd->add_flag("--virtual-clock", virtual_clock, "Simulated clock, exact ticks");
    bench_cmd->add_option("--out", out_path, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << catalog_listing() << '\n';
        return kUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return do_run(run_args, out);
        }
        if (trace_cmd->parsed()) {
            auto json = trace::to_json(trace_kernel(pick_kernel(kernel_name, chunks), n)) + "\n";
            if (out_path.empty()) {
                out << json;
            } else {
                write_file_atomic(out_path, json);
            }
            return kOk;
        }
        if (render_cmd->parsed()) {
            trace::TraceHistory history;
            std::size_t width = render_n;
            if (!trace_path.empty()) {
                history = trace::from_json(read_file(trace_path));
                if (width == 0) {
                    for (const auto &t : history) {
                        width = std::max(width, t.write);
                        for (auto r : t.reads) width = std::max(width, r);
                    }
                }
            } else if (!kernel_name.empty()) {
                if (render_n == 0) throw UsageError("render --kernel needs --n");
                history = trace_kernel(pick_kernel(kernel_name, chunks), render_n);
            } else {
                throw UsageError("render needs --trace or --kernel\n" + catalog_listing());
            }
            write_file_atomic(out_path, render::to_svg(render::layout(history, width), viewport));
            return kOk;
        }
        if (verify_cmd->parsed()) {
            auto report = verify::verify_parallel(pick_kernel(kernel_name, chunks), n);
            out << verify::to_json(report) << '\n';
            return report.ok ? kOk : kVerificationFailed;
        }
        if (bench_cmd->parsed()) {
            auto names = split(bench_kernels, ",");
            if (names.size() != 2) throw UsageError("--kernels takes exactly two names: baseline,candidate");
            exec::BenchConfig config;
            config.baseline = pick_kernel(names[0], chunks);
            config.candidate = pick_kernel(names[1], chunks);
            config.ps = parse_p_range(p_range);
            config.op_cost = std::chrono::nanoseconds(static_cast<std::int64_t>(op_cost_ms * 1e6));
            config.op_ticks = op_ticks;
            config.trials = trials;
            config.virtual_clock = virtual_clock;
            config.workers = env_workers(0);
            std::ostringstream csv;
            exec::write_csv(exec::bench(config), virtual_clock, csv);
            if (out_path.empty()) {
                out << csv.str();
            } else {
                write_file_atomic(out_path, csv.str());
            }
            return kOk;
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace scanforge::cli
