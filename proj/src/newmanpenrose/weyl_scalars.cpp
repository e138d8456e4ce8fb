#include "lambdavac/newmanpenrose/weyl_scalars.hpp"

#include "lambdavac/errors.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace lambdavac::np {
namespace {

sym::Expression prune(const sym::Expression& e, const sym::ZeroTestOptions& options) {
  if (e.is_constant()) return e;
  try {
    if (sym::is_zero_identity(e, options)) return sym::Expression(0);
  } catch (const InconclusiveError&) {
  }
  return e;
}

}  // namespace

WeylScalars weyl_scalars(const curvature::CurvatureBundle& bundle, const NullTetrad& tetrad,
                         const sym::ZeroTestOptions& options) {
  const ComplexVector l = complexify(tetrad.l);
  const ComplexVector n = complexify(tetrad.n);
  const ComplexVector m = tetrad.m();
  const ComplexVector mb = tetrad.m_bar();
  const auto& C = bundle.weyl;
  WeylScalars out;
  out.psi[0] = contract(C, l, m, l, m);
  out.psi[1] = contract(C, l, n, l, m);
  out.psi[2] = contract(C, l, m, mb, n);
  out.psi[3] = contract(C, l, n, mb, n);
  out.psi[4] = contract(C, n, mb, n, mb);
  for (auto& z : out.psi) z = {prune(z.re, options), prune(z.im, options)};
  return out;
}

std::string_view to_string(PetrovHint hint) {
  switch (hint) {
    case PetrovHint::kAllZero:
      return "all-zero";
    case PetrovHint::kOnlyPsi2:
      return "only-psi2";
    case PetrovHint::kOther:
      break;
  }
  return "other";
}

PetrovHint petrov_hint(const WeylScalars& scalars, const sym::ZeroTestOptions& options) {
  std::array<bool, 5> zero{};
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& z = scalars.psi[k];
    try {
      zero[k] = sym::is_zero_identity(z.re, options) && sym::is_zero_identity(z.im, options);
    } catch (const InconclusiveError&) {
      zero[k] = false;
    }
  }
  const bool others_zero = zero[0] && zero[1] && zero[3] && zero[4];
  if (others_zero && zero[2]) return PetrovHint::kAllZero;
  if (others_zero) return PetrovHint::kOnlyPsi2;
  return PetrovHint::kOther;
}

}  // namespace lambdavac::np
