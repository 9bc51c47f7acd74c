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

#include <fstream>
#include <map>
#include <set>
#include <regex>
#include <sstream>

#include "gtest/gtest.h"
#include "scanforge/kernels.h"

using namespace scanforge;
using render::Diagram;
using render::Gate;

namespace {

std::size_t count(const std::string &svg, const std::string &needle) {
    std::size_t c = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++c;
    return c;
}

struct Counts {
    std::size_t in, out, wires, guides;
};

Counts element_counts(const std::string &svg) {
    return {count(svg, "<circle class=\"in\""), count(svg, "<circle class=\"out\""),
            count(svg, "<line class=\"wire\""), count(svg, "<line class=\"guide\"")};
}

std::string read_golden(const std::string &name) {
    std::ifstream in(std::string(SCANFORGE_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in.good()) << name;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename K>
std::string svg_for(const K &kernel, std::size_t n) {
    return render::to_svg(render::layout(trace::run_traced(kernel, n), n));
}

}  // namespace

TEST(render, layout_examples) {
    auto bk = render::layout(trace::run_traced(BrentKungKernel{}, 8), 8);
    EXPECT_EQ(bk.gates.size(), 11u);
    EXPECT_EQ(bk.max_depth, 5u);
    EXPECT_EQ(bk.guideline_count(), 8u);

    auto serial = render::layout(trace::run_traced(SerialKernel{}, 8), 8);
    EXPECT_EQ(serial.gates.size(), 7u);
    EXPECT_EQ(serial.max_depth, 7u);

    auto empty = render::layout({}, 4);
    EXPECT_TRUE(empty.gates.empty());
    EXPECT_EQ(empty.guideline_count(), 4u);
}

TEST(render, single_gate_elements) {
    Diagram d{2, 1, {Gate{{1, 2}, {2}, 1}}};
    auto c = element_counts(render::to_svg(d));
    EXPECT_EQ(c.in, 2u);
    EXPECT_EQ(c.out, 1u);
    EXPECT_EQ(c.wires, 2u);
    EXPECT_EQ(c.guides, 2u);
}

TEST(render, empty_diagram_has_only_guidelines) {
    auto svg = render::to_svg(render::layout({}, 4));
    auto c = element_counts(svg);
    EXPECT_EQ(c.guides, 4u);
    EXPECT_EQ(c.in + c.out + c.wires, 0u);
    EXPECT_EQ(count(svg, "<circle"), 0u);
}

TEST(render, brent_kung_8_element_counts) {
    auto c = element_counts(svg_for(BrentKungKernel{}, 8));
    EXPECT_EQ(c.out, 11u);
    EXPECT_EQ(c.in, 22u);
    EXPECT_EQ(c.wires, 22u);
    EXPECT_EQ(c.guides, 8u);
}

TEST(render, goldens) {
    EXPECT_EQ(svg_for(SerialKernel{}, 8), read_golden("serial8.svg"));
    EXPECT_EQ(svg_for(BrentKungKernel{}, 8), read_golden("brent_kung8.svg"));
    EXPECT_TRUE(render::svg_equivalent(svg_for(BrentKung8Kernel{}, 8), read_golden("brent_kung8.svg")));
}

TEST(render, deterministic_bytes) {
    for (std::size_t n = 1; n <= 32; ++n) {
        EXPECT_EQ(svg_for(BrentKungKernel{}, n), svg_for(BrentKungKernel{}, n));
        EXPECT_EQ(svg_for(ScanThenFanKernel{3}, n), svg_for(ScanThenFanKernel{3}, n));
    }
}

TEST(render, gate_and_guideline_counts_track_the_trace) {
    for (std::size_t n = 1; n <= 64; ++n) {
        std::vector<Kernel> kernels{SerialKernel{}, BrentKungKernel{}, ScanThenFanKernel{3}};
        for (const auto &k : kernels) {
            auto h = std::visit([n](const auto &kk) { return trace::run_traced(kk, n); }, k);
            auto d = render::layout(h, n);
            EXPECT_EQ(d.gates.size(), h.size());
            EXPECT_EQ(d.guideline_count(), n);
            auto c = element_counts(render::to_svg(d));
            EXPECT_EQ(c.out, h.size());
            EXPECT_EQ(c.guides, n);
        }
    }
}

TEST(render, same_level_gates_never_share_a_line) {
    for (std::size_t n = 1; n <= 64; ++n) {
        auto d = render::layout(trace::run_traced(BrentKungKernel{}, n), n);
        std::map<std::size_t, std::set<std::size_t>> used;
        for (const auto &g : d.gates) {
            std::set<std::size_t> lines(g.ins.begin(), g.ins.end());
            lines.insert(g.outs.begin(), g.outs.end());
            for (auto l : lines) EXPECT_TRUE(used[g.depth].insert(l).second) << n;
        }
    }
}

TEST(render, gates_stay_inside_the_unit_box) {
    for (std::size_t n = 1; n <= 64; ++n) {
        auto d = render::layout(trace::run_traced(BrentKungKernel{}, n), n);
        for (const auto &g : d.gates) {
            ASSERT_GE(g.depth, 1u);
            // Outputs are the lowest markers: centre at depth-1+0.5, radius 0.25.
            EXPECT_LE(double(g.depth - 1) + 0.5 + render::kOutputRadius, double(d.max_depth));
            for (auto i : g.ins) EXPECT_TRUE(i >= 1 && i <= d.width);
            for (auto o : g.outs) EXPECT_TRUE(o >= 1 && o <= d.width);
        }
    }
    // And in pixels: every coordinate lies within the viewport.
    auto svg = svg_for(BrentKungKernel{}, 13);
    std::regex attr(R"((cx|cy|x1|x2|y1|y2)=\"(-?[0-9.]+)\")");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
        double v = std::stod((*it)[2]);
        bool is_x = (*it)[1].str()[0] == 'x' || (*it)[1] == "cx";
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, is_x ? 600.0 : 400.0);
    }
}

TEST(render, viewport_scales_coordinates) {
    Diagram d{1, 1, {}};
    auto svg = render::to_svg(d, {100, 50});
    EXPECT_NE(svg.find("x1=\"50.0000\" y1=\"0.0000\" x2=\"50.0000\" y2=\"50.0000\""), std::string::npos) << svg;
}

TEST(render, tolerant_comparison) {
    auto a = svg_for(BrentKungKernel{}, 8);
    std::string b = std::regex_replace(a, std::regex("37\\.5000"), "37.5002");
    EXPECT_NE(a, b);
    EXPECT_TRUE(render::svg_equivalent(a, b, 1e-3));
    EXPECT_FALSE(render::svg_equivalent(a, b, 1e-5));
    EXPECT_FALSE(render::svg_equivalent(a, svg_for(SerialKernel{}, 8)));
    std::string c = std::regex_replace(a, std::regex("white"), "black");
    EXPECT_FALSE(render::svg_equivalent(a, c));
}

TEST(render, failed_stream_throws) {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    EXPECT_THROW(render::emit_svg(render::layout({}, 2), out), std::runtime_error);
}
