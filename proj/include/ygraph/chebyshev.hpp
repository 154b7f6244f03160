#pragma once

#include "ygraph/bigfloat.hpp"
#include "ygraph/bigint.hpp"
#include "ygraph/polynomial.hpp"

namespace ygraph {

/// T_j as an integer polynomial (T_0 = 1, T_1 = w, T_{j+1} = 2wT_j - T_{j-1}).
IntPoly chebyshev_T(unsigned j);

enum class ChebyshevEval {
    recurrence,
    /// T_j(x) = (z^j + z^-j)/2 with z = x + sqrt(x^2 - 1); only for |x| > 1.
    closed_form,
};

/// T_j(x) at the precision of x.
BigFloat chebyshev_T_eval(unsigned j, const BigFloat& x, ChebyshevEval how = ChebyshevEval::recurrence);

/// T_j(w) for complex w, by the doubling identities
/// T_{2i} = 2T_i^2 - 1 and T_{2i+1} = 2T_iT_{i+1} - w.
BigComplex chebyshev_T_eval(unsigned j, const BigComplex& w);

/// g_0 = 1, g_1 = a, g_j = a·g_{j-1} - b^2·g_{j-2}; equals b^j·U_j(a/(2b)).
BigInt lucas_like(const BigInt& a, const BigInt& b, unsigned j);

}  // namespace ygraph
