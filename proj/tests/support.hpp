/*
   Copyright 2026 The idealab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IDEALAB_TESTS_SUPPORT_HPP
#define IDEALAB_TESTS_SUPPORT_HPP

#include <functional>
#include <optional>

#include "idealab/error.hpp"

// Kind of the idealab::Error thrown by fn, or nullopt if it returns normally.
inline std::optional<idealab::ErrorKind> error_kind(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const idealab::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

#endif
