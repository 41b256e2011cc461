#pragma once

#include "divisum/poly.hpp"

namespace divisum {

/// Exact Schur–Cohn test: true iff every root of p lies strictly inside the
/// unit circle. Constants are stable; the zero polynomial is not.
bool schur_stable(const Poly& p);

/// True iff every root of p lies strictly outside the closed unit disk.
/// Requires p(0) != 0 (checked; throws std::domain_error).
bool roots_outside_closed_unit_disk(const Poly& p);

}  // namespace divisum
