#pragma once

// Initial-condition construction from a RunConfig: seeded uniform noise
// (projected to zero mean), a whitelisted analytic expression, or a stored
// snapshot.

#include "nss/config.hpp"
#include "nss/field.hpp"

namespace nss {

// i.i.d. uniform values in [-amp, amp] from a seeded mt19937_64 stream with
// an explicit 53-bit mapping, so the field is reproducible across standard
// libraries.
Field random_field(const GridSpec& grid, unsigned long long seed, double amplitude);

Field make_initial(const RunConfig& cfg);

}  // namespace nss
