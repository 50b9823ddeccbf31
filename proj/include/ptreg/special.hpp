#pragma once

#include "ptreg/types.hpp"

namespace ptreg::special {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
cplx pochhammer(cplx a, int k);

/// Terminating Gauss series 2F1(-N, b; c; z), summed term by term.
/// Throws PoleInC when (c)_k vanishes for some k < N.
cplx gauss2f1_terminating(int N, cplx b, cplx c, cplx z);

/// Jacobi polynomial P_n^{(a,b)}(y) from its hypergeometric representation
///   P_n^{(a,b)}(y) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-y)/2),
/// or its mirror image about y = 0 when y lies closer to -1.
cplx jacobi_p_hyp(int n, cplx a, cplx b, cplx y);

/// Same polynomial from the three-term recurrence in n. Throws
/// DegenerateRecurrence when the leading coefficient vanishes.
cplx jacobi_p_rec(int n, cplx a, cplx b, cplx y);

}  // namespace ptreg::special
