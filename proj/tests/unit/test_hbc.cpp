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

#include <cmath>

#include "doctest.h"
#include "floq/error.hpp"
#include "floq/hbc.hpp"

using namespace floq;

TEST_SUITE("hbc-oracle") {
    TEST_CASE("adjacent TM term is 4 n² τ² at second order") {
        const HbcPrediction p = hbc_predict(OtocAxis::TM, 1, 1, 1e-3);
        CHECK(p.order == 2);
        CHECK(p.c_leading == doctest::Approx(4e-6).epsilon(1e-12));
        CHECK(hbc_predict(OtocAxis::TM, 1, 3, 1e-3).c_leading ==
              doctest::Approx(36e-6).epsilon(1e-12));
    }

    TEST_CASE("sixth-order terms") {
        CHECK(hbc_predict(OtocAxis::TM, 2, 2, 1e-3).c_leading ==
              doctest::Approx(6.4e-17).epsilon(1e-12));
        CHECK(hbc_predict(OtocAxis::LM, 1, 2, 0.03).c_leading ==
              doctest::Approx(64 * std::pow(0.03, 6)).epsilon(1e-12));
        CHECK(hbc_predict(OtocAxis::LM, 1, 3, 0.03).c_leading ==
              doctest::Approx(256 * std::pow(0.03, 6)).epsilon(1e-12));
    }

    TEST_CASE("terms that vanish at the first kick report zero") {
        CHECK(hbc_predict(OtocAxis::TM, 2, 1, 0.1).c_leading == 0.0);
        CHECK(hbc_predict(OtocAxis::LM, 1, 1, 0.1).c_leading == 0.0);
    }

    TEST_CASE("untabulated cases are unsupported") {
        CHECK_THROWS_AS(hbc_predict(OtocAxis::TM, 3, 1, 0.01), UnsupportedError);
        CHECK_THROWS_AS(hbc_predict(OtocAxis::LM, 1, 4, 0.01), UnsupportedError);
    }

    TEST_CASE("prediction scales as τ^order") {
        for (const HbcCase& c : hbc_cases()) {
            const double lo = hbc_predict(c.axis, c.delta_l, c.n, 1e-2).c_leading;
            const double hi = hbc_predict(c.axis, c.delta_l, c.n, 2e-2).c_leading;
            if (c.coefficient == 0.0) continue;
            CHECK(std::log2(hi / lo) == doctest::Approx(c.order).epsilon(1e-12));
        }
    }

    TEST_CASE("every tabulated case has order 2 or 6") {
        for (const HbcCase& c : hbc_cases()) {
            CHECK((c.order == 2 || c.order == 6));
            CHECK(c.coefficient >= 0.0);
        }
    }
}
