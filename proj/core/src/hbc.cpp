// Copyright 2026 The floq_otoc Authors
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

#include "floq/hbc.hpp"

#include <array>
#include <cmath>
#include <string>

#include "floq/error.hpp"

namespace floq {

namespace {

// Tabulated leading nested-commutator terms for the kicked chain at J_x = h_x = h_z = 1.
constexpr std::array<HbcCase, 8> kCases{{
    {OtocAxis::TM, 1, 1, 4.0, 2},
    {OtocAxis::TM, 1, 2, 16.0, 2},
    {OtocAxis::TM, 1, 3, 36.0, 2},
    {OtocAxis::TM, 2, 1, 0.0, 6},
    {OtocAxis::TM, 2, 2, 64.0, 6},
    {OtocAxis::LM, 1, 1, 0.0, 6},
    {OtocAxis::LM, 1, 2, 64.0, 6},
    {OtocAxis::LM, 1, 3, 256.0, 6},
}};

}  // namespace

std::span<const HbcCase> hbc_cases() noexcept { return kCases; }

HbcPrediction hbc_predict(OtocAxis axis, int delta_l, int n, double tau) {
    for (const HbcCase& c : kCases) {
        if (c.axis == axis && c.delta_l == delta_l && c.n == n) {
            return {axis, delta_l, n, tau, c.coefficient * std::pow(tau, c.order), c.order};
        }
    }
    throw UnsupportedError("no tabulated short-time term for axis=" + std::string(to_string(axis)) +
                           ", delta_l=" + std::to_string(delta_l) + ", n=" + std::to_string(n));
}

}  // namespace floq
