// Copyright 2026 The ShareFair Authors
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

#ifndef SHAREFAIR_TOOLS_CLI_HPP_
#define SHAREFAIR_TOOLS_CLI_HPP_

#include <ostream>

namespace sharefair::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kNone = 3;
constexpr int kBudget = 4;
constexpr int kInvariant = 5;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sharefair::cli

#endif  // SHAREFAIR_TOOLS_CLI_HPP_
