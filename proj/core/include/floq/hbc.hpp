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

#ifndef FLOQ_HBC_HPP
#define FLOQ_HBC_HPP

#include <span>

#include "floq/otoc.hpp"

namespace floq {

/// Leading short-time OTOC term C ≈ coefficient · τ^order from the nested-commutator expansion.
struct HbcPrediction {
    OtocAxis axis = OtocAxis::TM;
    int delta_l = 1;
    int n = 1;
    double tau = 0.0;
    double c_leading = 0.0;
    int order = 2;
};

/// One row of the tabulated expansion. A zero coefficient means the term of that order
/// vanishes at this kick.
struct HbcCase {
    OtocAxis axis;
    int delta_l;
    int n;
    double coefficient;
    int order;
};

/// Every (axis, Δl, n) with a tabulated leading-order value.
std::span<const HbcCase> hbc_cases() noexcept;

/// Looks up the tabulated case. Throws UnsupportedError for anything not in hbc_cases();
/// there is no extrapolation.
HbcPrediction hbc_predict(OtocAxis axis, int delta_l, int n, double tau);

}  // namespace floq

#endif  // FLOQ_HBC_HPP
