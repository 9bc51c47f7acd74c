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

#include "scanforge/kernels.h"

namespace scanforge {

Kernel kernel_by_name(std::string_view name, std::size_t chunks) {
    if (name == "serial") return SerialKernel{};
    if (name == "brent-kung") return BrentKungKernel{};
    if (name == "brent-kung-8") return BrentKung8Kernel{};
    if (name == "scan-then-fan") {
        if (chunks < 1) {
            throw std::invalid_argument("scan-then-fan needs chunks >= 1");
        }
        return ScanThenFanKernel{chunks};
    }
    std::string known;
    for (const auto &n : kernel_names()) {
        known += known.empty() ? n : ", " + n;
    }
    throw std::invalid_argument("unknown kernel '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace scanforge
