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

#ifndef SCANFORGE_EXEC_FUTURE_H
#define SCANFORGE_EXEC_FUTURE_H

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <future>
#include <memory>
#include <utility>

namespace scanforge::exec {

using WorkerId = std::size_t;
using FutureId = std::uint64_t;

/// Handle to a value that some worker resolves exactly once. Copies share
/// the same state. `fetch` blocks the caller until the value is available
/// and rethrows the producing task's error if it failed.
template <typename T>
class Future {
   public:
    Future() = default;
    Future(FutureId id, WorkerId owner, std::shared_future<T> value)
        : state_(std::make_shared<const State>(State{id, owner, std::move(value)})) {
    }

    static Future resolved(FutureId id, WorkerId owner, T value) {
        std::promise<T> p;
        p.set_value(std::move(value));
        return Future(id, owner, p.get_future().share());
    }

    bool valid() const {
        return state_ != nullptr;
    }
    FutureId id() const {
        return state_->id;
    }
    /// Worker holding the value.
    WorkerId owner() const {
        return state_->owner;
    }
    bool ready() const {
        return state_->value.wait_for(std::chrono::seconds(0)) == std::future_status::ready;
    }
    const T &fetch() const {
        return state_->value.get();
    }

   private:
    struct State {
        FutureId id;
        WorkerId owner;
        std::shared_future<T> value;
    };
    std::shared_ptr<const State> state_;
};

}  // namespace scanforge::exec

#endif
