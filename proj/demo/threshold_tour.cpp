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

// Prints the preset bounds, then the detection threshold of the Werner and
// isotropic families under the matching preset pairs.

#include <cstdio>
#include <string>
#include <vector>

#include "majorant/majorant.hpp"

using namespace majorant;

namespace {

void print_vector(const char* label, const std::vector<double>& v) {
    std::printf("  %-7s", label);
    for (double x : v) std::printf(" %.6f", x);
    std::printf("\n");
}

void print_threshold(const StateFamily& family, const ObservablePair& a, const ObservablePair& b) {
    const PairDetector det(a, b);
    const std::vector<double> grid = make_grid(family.lo, family.hi, 0.01);
    const ScanResult r = scan(family, grid, [&](const ComplexMatrix& rho) { return det(rho); });
    const std::string label = family.name + " d=" + std::to_string(family.dim_a);
    if (!r.threshold) {
        std::printf("  %-18s no detection on the grid\n", label.c_str());
        return;
    }
    std::printf("  %-18s threshold %.9f", label.c_str(), *r.threshold);
    if (family.dim_a == family.dim_b && family.name.rfind("isotropic", 0) == 0) {
        std::printf("  (Werner weight %.9f)", isotropic_to_werner_weight(family.dim_a, *r.threshold));
    }
    std::printf("\n");
}

}  // namespace

int main() {
    std::printf("bounds\n");
    const ObservablePair pauli = pauli_pair();
    std::printf(" sigma_z / sigma_x\n");
    print_vector("omega", direct_sum_bound(pauli).omega());
    for (Eigen::Index d = 3; d <= 4; ++d) {
        std::printf(" computational / Fourier, d = %ld\n", static_cast<long>(d));
        const MajorizationBound b = direct_sum_bound(fourier_pair(d));
        print_vector("omega", b.omega());
        print_vector("prefix", b.prefix());
    }
    std::printf(" sigma_x / sigma_y / sigma_z\n");
    print_vector("omega", many_bound(mub_triple()).omega());

    std::printf("\nthresholds\n");
    print_threshold(werner_family(), pauli, pauli);
    for (Eigen::Index d = 2; d <= 4; ++d) {
        print_threshold(isotropic_family(d), fourier_pair(d), fourier_partner_pair(d));
    }
    print_threshold(separable_mix_family(3), fourier_pair(3), fourier_partner_pair(3));
    return 0;
}
