// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "heiscf/lab/enumeration.hpp"

namespace heiscf::oracle {

/// Triple loop over q, r, p with the surface condition tested directly.
RationalEnumeration naive_enumerate_qnorm(std::int64_t m, const GaugeRegion& region, bool lowest_terms);

}  // namespace heiscf::oracle
