// Copyright 2026 The dwm Authors
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

#ifndef DWM_TESTS_TEST_UTIL_H
#define DWM_TESTS_TEST_UTIL_H

#include <gtest/gtest.h>

#include "dwm/errors.h"

/// Runs f and returns the code of the dwm::Error it throws.
template <typename F>
dwm::ErrorCode error_of(F &&f) {
    try {
        f();
    } catch (const dwm::Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected dwm::Error";
    return dwm::ErrorCode::Io;
}

#endif
