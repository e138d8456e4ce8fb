#ifndef LAMBDAVAC_CURVATURE_TENSOR_HPP
#define LAMBDAVAC_CURVATURE_TENSOR_HPP

#include <array>
#include <cstddef>
#include <functional>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::curvature {

inline constexpr std::size_t kDim = 4;

constexpr std::size_t power_of_dim(std::size_t rank) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= kDim;
  return n;
}

/// Dense rank-N array of expressions over 4 dimensions; index order as written.
template <std::size_t Rank>
class Tensor {
 public:
  static constexpr std::size_t kSize = power_of_dim(Rank);

  template <typename... I>
    requires(sizeof...(I) == Rank)
  sym::Expression& operator()(I... idx) {
    return data_[offset(static_cast<std::size_t>(idx)...)];
  }
  template <typename... I>
    requires(sizeof...(I) == Rank)
  const sym::Expression& operator()(I... idx) const {
    return data_[offset(static_cast<std::size_t>(idx)...)];
  }

  std::array<sym::Expression, kSize>& data() { return data_; }
  const std::array<sym::Expression, kSize>& data() const { return data_; }

  /// Applies f to every component in place.
  void transform(const std::function<sym::Expression(const sym::Expression&)>& f) {
    for (auto& e : data_) e = f(e);
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : data_) n += e.is_zero() ? 0 : 1;
    return n;
  }

 private:
  template <typename... I>
  static constexpr std::size_t offset(I... idx) {
    std::size_t o = 0;
    ((o = o * kDim + idx), ...);
    return o;
  }

  std::array<sym::Expression, kSize> data_{};
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;

}  // namespace lambdavac::curvature

#endif  // LAMBDAVAC_CURVATURE_TENSOR_HPP
