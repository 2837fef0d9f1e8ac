/*
   Copyright 2026 The desing Authors

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

#ifndef DESING_CLI_HPP
#define DESING_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace desing {

/**
 * Command-line entry point. args excludes the program name. Data goes to
 * out, diagnostics to err. Returns 0 on success, 1 when a verification fails
 * or nothing could be desingularized, 2 on usage and parse errors.
 */
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace desing

#endif  // DESING_CLI_HPP
