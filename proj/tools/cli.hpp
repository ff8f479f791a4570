// Copyright 2026 The clint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLINT_TOOLS_CLI_HPP_
#define CLINT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace clint {

// Exit codes: 0 affirmative, 1 negative, 2 usage or parse error.
enum ExitCode { kAffirmative = 0, kNegative = 1, kUsage = 2 };

// args excludes the program name.  in supplies the formula for "-".
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace clint

#endif  // CLINT_TOOLS_CLI_HPP_
