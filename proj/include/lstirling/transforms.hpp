#pragma once

#include "lstirling/rational.hpp"
#include "lstirling/stirling.hpp"

#include <memory>
#include <vector>

namespace lstirling {

using FiniteSequence = std::vector<Rational>;

enum class OrthogonalitySide { a, b };

/// Shared, lock-protected triangle cache keyed by (kind, r, lambda). Returns a
/// triangle with at least rows 0..n_min; the cached table only grows.
std::shared_ptr<const Triangle> cached_triangle(Kind kind, const Rational& r,
                                                const Rational& lambda, unsigned n_min);

/// Orthogonality sum minus the Kronecker delta. Exactly zero by the
/// inverse-triangle relation; returned rather than asserted so callers can
/// report defects. Side a sums (-1)^(n-k)[n..][k..]{k..}{l..}; side b mirrors.
Rational orthogonality_defect(unsigned n, unsigned l, const Rational& r, const Rational& lambda,
                              OrthogonalitySide side);

/// a_n = sum_{k<=n} {n+r brace k+r}_{r,lambda} c_k.
FiniteSequence stirling2_transform(const FiniteSequence& c, const Rational& r,
                                   const Rational& lambda);

/// c_n = sum_{k<=n} (-1)^(n-k) [n+r brack k+r]_{r,lambda} a_k; exact inverse
/// of stirling2_transform.
FiniteSequence stirling1_inverse_transform(const FiniteSequence& a, const Rational& r,
                                           const Rational& lambda);

/// Dual (upper-triangular) pair: a_n = sum_{k=n..m} {k+r brace n+r}_{r,lambda} c_k.
FiniteSequence dual_stirling2_transform(const FiniteSequence& c, unsigned m, const Rational& r,
                                        const Rational& lambda);

/// c_n = sum_{k=n..m} (-1)^(k-n) [k+r brack n+r]_{r,lambda} a_k.
FiniteSequence dual_stirling1_inverse_transform(const FiniteSequence& a, unsigned m,
                                                const Rational& r, const Rational& lambda);

}  // namespace lstirling
