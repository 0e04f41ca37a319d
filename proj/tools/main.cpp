// Copyright 2026 The Majorant Authors
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

#include <clocale>
#include <cstdlib>
#include <iostream>
#include <locale>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    std::locale::global(std::locale::classic());
    const std::vector<std::string> args(argv + 1, argv + argc);
    const char* env = std::getenv("MAJORANT_DIM_LIMIT");
    return majorant::cli::run(args, std::cout, std::cerr, env ? env : "");
}
