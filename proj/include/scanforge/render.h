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

#ifndef SCANFORGE_RENDER_H
#define SCANFORGE_RENDER_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scanforge/trace.h"

namespace scanforge::render {

/// One operation drawn as a logic gate: inputs on lines `ins`, outputs on
/// lines `outs`, placed at stage `depth` (1-based, top row first).
struct Gate {
    std::vector<std::size_t> ins;
    std::vector<std::size_t> outs;
    std::size_t depth = 1;
};

/// Gates over `width` processor lines and `max_depth` stages. Gate
/// coordinates live in the unit box x in [0.5, width + 0.5], y in
/// [0, max_depth]; every processor line gets a vertical guideline.
struct Diagram {
    std::size_t width = 0;
    std::size_t max_depth = 0;
    std::vector<Gate> gates;

    std::size_t guideline_count() const {
        return width;
    }
};

/// Input/output marker radii in processor-line units.
inline constexpr double kInputRadius = 0.1;
inline constexpr double kOutputRadius = 0.25;

struct Viewport {
    double width_px = 600;
    double height_px = 400;
};

/// Two passes over the trace: stage count first, then one gate per
/// transaction at its inferred stage.
Diagram layout(const trace::TraceHistory &history, std::size_t n);

/// Writes an SVG 1.1 document. Numbers use four decimals and elements come
/// out in a fixed order, so equal diagrams give identical bytes. Throws
/// std::runtime_error if the stream fails.
void emit_svg(const Diagram &d, std::ostream &out, const Viewport &viewport = {});

std::string to_svg(const Diagram &d, const Viewport &viewport = {});

/// Compares two SVG texts token by token, allowing numeric tokens to differ
/// by at most `tolerance`. Everything else must match exactly.
bool svg_equivalent(std::string_view a, std::string_view b, double tolerance = 1e-3);

}  // namespace scanforge::render

#endif
