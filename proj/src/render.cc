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

#include "scanforge/render.h"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scanforge::render {

namespace {

constexpr double kPxPerMm = 96.0 / 25.4;
constexpr double kWireWidthMm = 0.3;
constexpr double kGuideWidthMm = 0.1;

// Affine map from the diagram's unit box onto the pixel viewport.
struct Frame {
    double x_scale;
    double y_scale;
    double r_scale;

    double x(double u) const {
        return (u - 0.5) * x_scale;
    }
    double y(double v) const {
        return v * y_scale;
    }
};

std::string num(double v) {
    // Avoid "-0.0000".
    if (std::abs(v) < 5e-5) v = 0.0;
    return fmt::format("{:.4f}", v);
}

}  // namespace

Diagram layout(const trace::TraceHistory &history, std::size_t n) {
    Diagram d;
    d.width = n;
    auto depths = trace::infer_depths(history);
    d.max_depth = trace::max_depth(depths);
    d.gates.reserve(history.size());
    for (std::size_t i = 0; i < history.size(); ++i) {
        d.gates.push_back({history[i].reads, {history[i].write}, depths[i]});
    }
    return d;
}

void emit_svg(const Diagram &d, std::ostream &out, const Viewport &viewport) {
    const double w = viewport.width_px;
    const double h = viewport.height_px;
    const double cols = static_cast<double>(std::max<std::size_t>(d.width, 1));
    const double rows = static_cast<double>(std::max<std::size_t>(d.max_depth, 1));
    Frame f{w / cols, h / rows, std::min(w / cols, h / rows)};

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n";

    out << "<g class=\"guides\" stroke=\"grey\" stroke-width=\"" << num(kGuideWidthMm * kPxPerMm) << "\">\n";
    for (std::size_t i = 1; i <= d.width; ++i) {
        out << "<line class=\"guide\" x1=\"" << num(f.x(double(i))) << "\" y1=\"" << num(0) << "\" x2=\""
            << num(f.x(double(i))) << "\" y2=\"" << num(h) << "\"/>\n";
    }
    out << "</g>\n";

    for (const auto &g : d.gates) {
        const double y0 = static_cast<double>(g.depth - 1);
        const double yin = f.y(y0 + kInputRadius);
        const double yout = f.y(y0 + 0.5);
        out << "<g class=\"gate\">\n";
        for (auto i : g.ins) {
            for (auto o : g.outs) {
                out << "<line class=\"wire\" x1=\"" << num(f.x(double(i))) << "\" y1=\"" << num(yin) << "\" x2=\""
                    << num(f.x(double(o))) << "\" y2=\"" << num(yout) << "\" stroke=\"black\" stroke-width=\""
                    << num(kWireWidthMm * kPxPerMm) << "\"/>\n";
            }
        }
        for (auto i : g.ins) {
            out << "<circle class=\"in\" cx=\"" << num(f.x(double(i))) << "\" cy=\"" << num(yin) << "\" r=\""
                << num(kInputRadius * f.r_scale) << "\" fill=\"white\" stroke=\"black\"/>\n";
        }
        for (auto o : g.outs) {
            out << "<circle class=\"out\" cx=\"" << num(f.x(double(o))) << "\" cy=\"" << num(yout) << "\" r=\""
                << num(kOutputRadius * f.r_scale) << "\" fill=\"white\" stroke=\"black\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    if (!out) {
        throw std::runtime_error("failed writing SVG output");
    }
}

std::string to_svg(const Diagram &d, const Viewport &viewport) {
    std::ostringstream out;
    emit_svg(d, out, viewport);
    return out.str();
}

namespace {

struct Token {
    bool numeric;
    std::string_view text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_num_start = [&](std::size_t p) {
        if (std::isdigit(static_cast<unsigned char>(s[p]))) return true;
        return s[p] == '-' && p + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[p + 1]));
    };
    while (i < s.size()) {
        std::size_t start = i;
        if (is_num_start(i)) {
            ++i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
            out.push_back({true, s.substr(start, i - start)});
        } else {
            while (i < s.size() && !is_num_start(i)) ++i;
            out.push_back({false, s.substr(start, i - start)});
        }
    }
    return out;
}

}  // namespace

bool svg_equivalent(std::string_view a, std::string_view b, double tolerance) {
    auto ta = tokenize(a);
    auto tb = tokenize(b);
    if (ta.size() != tb.size()) return false;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i].numeric != tb[i].numeric) return false;
        if (!ta[i].numeric) {
            if (ta[i].text != tb[i].text) return false;
            continue;
        }
        double x = std::stod(std::string(ta[i].text));
        double y = std::stod(std::string(tb[i].text));
        if (std::abs(x - y) > tolerance) return false;
    }
    return true;
}

}  // namespace scanforge::render
