#pragma once

#include "crossed/group.hpp"
#include "crossed/word.hpp"

namespace crossed {

/// Free derivative with respect to generator x, coefficients pushed through
/// phi. Product rule: d(uv) = du + phi(u) dv, with d(x) = 1 and
/// d(x^-1) = -phi(x)^-1. Satisfies
///   sum_x fox(u, x) * (phi(x) - 1) = phi(u) - 1.
RingElem fox_derivative(const Word& u, Sym x, const EvalHom& phi);

/// Right-handed variant: d(uv) = du * phi(v) + dv, d(x) = 1,
/// d(x^-1) = -phi(x)^-1. Satisfies
///   sum_x (phi(x) - 1) * rfox(u, x) = phi(u) - 1,
/// which is the composition law for boundaries of right modules.
RingElem fox_derivative_right(const Word& u, Sym x, const EvalHom& phi);

} // namespace crossed
