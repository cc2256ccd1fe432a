// Copyright 2026 The lsk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>

namespace lsk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;  // operational error, error id on stderr
inline constexpr int kExitUsage = 2;

// Runs one subcommand: clean, balance, stats, align, train, annotate,
// tts-label, synth, index or serve.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Stops a running `serve` (also wired to SIGINT and SIGTERM).
void request_shutdown();

}  // namespace lsk::cli
