#ifndef LAMBDAVAC_NEWMANPENROSE_TETRAD_HPP
#define LAMBDAVAC_NEWMANPENROSE_TETRAD_HPP

#include <array>
#include <string>

#include "lambdavac/curvature/curvature.hpp"
#include "lambdavac/symcore/expression.hpp"
#include "lambdavac/symcore/zero_test.hpp"

namespace lambdavac::np {

/// Complex value carried as a (real, imaginary) pair of real expressions.
struct ComplexExpression {
  sym::Expression re;
  sym::Expression im;

  ComplexExpression conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

ComplexExpression operator+(const ComplexExpression& a, const ComplexExpression& b);
ComplexExpression operator-(const ComplexExpression& a, const ComplexExpression& b);
ComplexExpression operator*(const ComplexExpression& a, const ComplexExpression& b);
ComplexExpression simplify(const ComplexExpression& z);

/// Contravariant components v^μ.
using ComplexVector = std::array<ComplexExpression, 4>;
using RealVector = std::array<sym::Expression, 4>;

ComplexVector complexify(const RealVector& v);
ComplexVector conj(const ComplexVector& v);

/// Null frame with g(l,n) = 1 and g(m, m̄) = -1.
struct NullTetrad {
  RealVector l;
  RealVector n;
  /// m = m_re + i m_im
  RealVector m_re;
  RealVector m_im;

  ComplexVector m() const;
  ComplexVector m_bar() const;
};

/// Bilinear g(u, v) = g_{μν} u^μ v^ν (no conjugation).
ComplexExpression inner(const curvature::Tensor2& g, const ComplexVector& u, const ComplexVector& v);

/// Bilinear T_{abcd} u^a v^b w^c z^d.
ComplexExpression contract(const curvature::Tensor4& t, const ComplexVector& u, const ComplexVector& v,
                           const ComplexVector& w, const ComplexVector& z);

/// Tetrad adapted to a metric whose (t,x) block has g_11 = 0, g_01 != 0 and
/// whose (y,z) block is g_22 = g_33 = -a^2 with no off-block entries:
///   l = ∂_x,  n = (1/g_01) ∂_t - g_00/(2 g_01^2) ∂_x,  m = (∂_y + i ∂_z)/(a √2).
/// Throws UnsupportedStructureError outside that form and DegenerateError
/// when g_01 is identically zero.
NullTetrad canonical_tetrad(const curvature::MetricTensor& g, const sym::ZeroTestOptions& options = {});

/// a with a^2 = e, taken structurally when e is a product of even powers
/// times a rational square; otherwise e^(1/2).
sym::Expression sqrt_of_square(const sym::Expression& e);

/// Pass/fail of each normalization relation under the zero test.
struct TetradCheck {
  bool ll = false, nn = false, mm = false, lm = false, nm = false;
  bool ln_is_one = false, mmbar_is_minus_one = false;
  bool ok() const { return ll && nn && mm && lm && nm && ln_is_one && mmbar_is_minus_one; }
};
TetradCheck check_tetrad(const curvature::Tensor2& g, const NullTetrad& tetrad,
                         const sym::ZeroTestOptions& options = {});

}  // namespace lambdavac::np

#endif  // LAMBDAVAC_NEWMANPENROSE_TETRAD_HPP
