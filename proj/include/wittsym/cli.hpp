// Copyright 2026 The wittsym Authors
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

#ifndef WITTSYM_CLI_HPP
#define WITTSYM_CLI_HPP

#include <string>
#include <vector>

namespace wittsym::cli {

// Runs one command line, argv[0] excluded. Reports go to stdout as
// "key: value" lines, errors to stderr. Exit codes: 0 success, 1
// verification or bound failure, 2 parse or usage error, 3 invalid witness
// (including dependent slot bases and provider failures), 4 search cap
// exceeded.
int run(const std::vector<std::string>& args);

}  // namespace wittsym::cli

#endif  // WITTSYM_CLI_HPP
