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

#ifndef IDEALAB_CLI_HPP
#define IDEALAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace idealab::cli {

enum ExitCode : int { Ok = 0, Usage = 1, DomainError = 2, ResourceLimit = 3 };

/// Runs one subcommand. `args` excludes the program name. The success payload
/// is written to `out` in one piece; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idealab::cli

#endif
