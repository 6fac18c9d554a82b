// Copyright 2026 The grc Authors
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

#include <cstdio>
#include <cstdlib>
#include <string>

#include "grc/acceptance/acceptance.hpp"

// Prints one line per criterion; exit status 1 when any criterion fails.
int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    int failed = 0;
    for (int id = 1; id <= grc::acceptance::criterion_count(); ++id) {
        const auto r = grc::acceptance::run_criterion(id, seed);
        std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d of %d criteria passed\n", grc::acceptance::criterion_count() - failed,
                grc::acceptance::criterion_count());
    return failed == 0 ? 0 : 1;
}
