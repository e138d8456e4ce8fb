#ifndef LAMBDAVAC_SRC_SYMCORE_NODE_HPP
#define LAMBDAVAC_SRC_SYMCORE_NODE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lambdavac/symcore/expression.hpp"

namespace lambdavac::sym {

struct Node {
  Kind kind = Kind::kConstant;
  Number value;
  std::string name;
  std::vector<Expression> args;
  std::size_t hash = 0;
  std::uint64_t mask = 0;
};

Expression make_node(Kind kind, Number value, std::string name, std::vector<Expression> args);

}  // namespace lambdavac::sym

#endif  // LAMBDAVAC_SRC_SYMCORE_NODE_HPP
