#pragma once

// Combinatorial height: lambda^+ (dominant W-conjugate), lambda^star (least
// dominant weight above lambda) and cht(lambda), the length of the longest
// chain of dominant weights from lambda^star up to lambda^+.

#include "bkf/roots.hpp"

namespace bkf {

Weight plus(const RootSystem& r, const Weight& lambda);
Weight star(const RootSystem& r, const Weight& lambda);

/// Longest strictly increasing chain of dominant weights from lo to hi
/// (lo <= hi dominant). Chains are searched along positive-root steps; every
/// cover between dominant weights is such a step.
int longest_dominant_chain(const RootSystem& r, const Weight& lo, const Weight& hi);

int cht(const RootSystem& r, const Weight& lambda);

/// cht(lambda) == 0 via the pairing criterion <lambda, beta^vee> >= -1.
bool cht_is_zero_fast(const RootSystem& r, const Weight& lambda);

namespace reference {
/// Least dominant weight above lambda by scanning the box between lambda and
/// lambda^+ (small instances only).
Weight star_by_box(const RootSystem& r, const Weight& lambda);
/// cht by enumerating every dominant weight in the root-coordinate box
/// between lambda^star and lambda^+ and running a longest-path search on the
/// full dominance order restricted to that set.
int cht_by_box(const RootSystem& r, const Weight& lambda);
}  // namespace reference

}  // namespace bkf
