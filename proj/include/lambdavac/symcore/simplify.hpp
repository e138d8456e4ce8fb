#ifndef LAMBDAVAC_SYMCORE_SIMPLIFY_HPP
#define LAMBDAVAC_SYMCORE_SIMPLIFY_HPP

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::sym {

/// Best-effort rewriting: rebuilds the tree through the canonicalizing
/// constructors (constant folding, 0/1 identities, flattening, collection of
/// like terms and like bases) and merges c*R*sin(u)^2 + c*R*cos(u)^2 into c*R.
/// Not a canonical form; identities are settled by prob_zero_test.
Expression simplify(const Expression& e);

/// Distributes products over sums and expands positive integer powers of
/// sums. Negative powers of sums are kept as opaque factors.
Expression expand(const Expression& e);

}  // namespace lambdavac::sym

#endif  // LAMBDAVAC_SYMCORE_SIMPLIFY_HPP
