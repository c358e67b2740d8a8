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

// Fuzzify a qubit with a Hadamard gate, then defuzzify it both ways.

#include <cstdio>

#include "vagueq/quantum.hpp"

int main() {
  using namespace vagueq::qm;
  const auto plus = apply_hadamard(QubitState::zero());
  const auto mu = fuzzify(plus);
  std::printf("H|0> = %.6f|0> + %.6f|1>\n", plus.a0().real(), plus.a1().real());
  std::printf("memberships: mu0 = %.6f, mu1 = %.6f (born compatible: %s)\n", mu.mu0.value(), mu.mu1.value(),
              mu.born_compatible() ? "yes" : "no");
  std::printf("argmax defuzzification -> |%d>\n", defuzzify(mu, Defuzzifier::argmax));
  const auto counts = born_samples(mu, 10000, 7);
  std::printf("born sampling, 10000 shots -> %llu zeros, %llu ones\n",
              static_cast<unsigned long long>(counts.zeros), static_cast<unsigned long long>(counts.ones));

  // memberships need not sum to one
  const auto loose = make_fuzzy_state(0.8, 0.5);
  std::printf("\n(0.8, 0.5): born compatible %s, argmax -> |%d>, P(0) under sampling = %.4f\n",
              loose.born_compatible() ? "yes" : "no", defuzzify(loose, Defuzzifier::argmax),
              born_samples(loose, 100000, 7).frequency0());

  const auto bell = TwoQubitState::bell();
  const auto prod = tensor_product(plus, QubitState::one());
  std::printf("\nbell: |det| = %.3f entangled=%d; (H|0>)x|1>: |det| = %.3g entangled=%d\n",
              std::abs(amplitude_determinant(bell)), is_entangled(bell), std::abs(amplitude_determinant(prod)),
              is_entangled(prod));
  return 0;
}
