// Copyright 2026 The gf2learn Authors.
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

#ifndef GF2LEARN_CLI_H_
#define GF2LEARN_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gf2learn::cli {

// Entry point of the gf2learn command. Commands: gen, learn, test, bounds,
// bench. Reports go to `out` as JSON lines (schema "v1") or CSV; failures
// emit a JSON error object to `out` and a message to `err`.
//
// Exit status: 0 on success (for learn and test, at least one trial
// succeeded), 1 when every trial failed, 2 on invalid configuration or I/O
// failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int main(int argc, char** argv);

}  // namespace gf2learn::cli

#endif  // GF2LEARN_CLI_H_
