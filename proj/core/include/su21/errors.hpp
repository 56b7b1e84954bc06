#pragma once

#include <stdexcept>

namespace su21 {

struct ConstraintViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace su21
