#ifndef LAMBDAVAC_NEWMANPENROSE_WEYL_SCALARS_HPP
#define LAMBDAVAC_NEWMANPENROSE_WEYL_SCALARS_HPP

#include <array>
#include <string_view>

#include "lambdavac/curvature/curvature.hpp"
#include "lambdavac/newmanpenrose/tetrad.hpp"

namespace lambdavac::np {

/// psi[k] = Ψ_k.
struct WeylScalars {
  std::array<ComplexExpression, 5> psi;
};

/// Ψ0 = C(l,m,l,m), Ψ1 = C(l,n,l,m), Ψ2 = C(l,m,m̄,n), Ψ3 = C(l,n,m̄,n),
/// Ψ4 = C(n,m̄,n,m̄), each simplified. Real and imaginary parts that pass the
/// zero test are replaced by 0, as for tensor components.
WeylScalars weyl_scalars(const curvature::CurvatureBundle& bundle, const NullTetrad& tetrad,
                         const sym::ZeroTestOptions& options = {});

enum class PetrovHint { kAllZero, kOnlyPsi2, kOther };
std::string_view to_string(PetrovHint hint);

/// Coarse classification from which scalars pass the zero test.
PetrovHint petrov_hint(const WeylScalars& scalars, const sym::ZeroTestOptions& options = {});

}  // namespace lambdavac::np

#endif  // LAMBDAVAC_NEWMANPENROSE_WEYL_SCALARS_HPP
