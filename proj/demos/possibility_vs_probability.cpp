/*   Copyright 2026 The vagueq Authors

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

// Slides a window across a particle-in-a-box density and prints, per window,
// the probability of finding the particle there next to its possibility.

#include <cstdio>
#include <cstdlib>

#include "vagueq/localize.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 2;
  try {
    const auto density = vagueq::realize_density(vagueq::WavefunctionSpec::box(n, 1.0));
    std::printf("box eigenstate n=%d on [0, 1], window 0.1\n", n);
    std::printf("%8s %8s %12s %12s\n", "a", "b", "probability", "possibility");
    for (const auto& row : vagueq::sweep(density, 0.1, 0.05)) {
      std::printf("%8.3f %8.3f %12.6f %12.6f\n", row.a, row.b, row.probability, row.possibility);
    }
    // a node of the wavefunction: probability is tiny but possibility is not zero
    const auto r = vagueq::localize(density, 0.48, 0.52);
    std::printf("\n[0.48, 0.52): probability %.6f, possibility %.6f\n", r.probability, r.possibility);
  } catch (const vagueq::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
