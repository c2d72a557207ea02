#include "confrac/errors.hpp"

#include <sstream>

namespace confrac {

namespace {
std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}
}  // namespace

InvalidOrder::InvalidOrder(double alpha)
    : DomainError("order alpha=" + format_double(alpha) +
                  " is outside (0, 1]"),
      alpha_(alpha) {}

NonPositivePoint::NonPositivePoint(std::size_t index, double value)
    : DomainError("point coordinate " + std::to_string(index) + " = " +
                  format_double(value) + " is not strictly positive"),
      index_(index),
      value_(value) {}

CompositionDomainError::CompositionDomainError(std::size_t component,
                                               double value)
    : DomainError("chain rule needs every inner component positive, but f[" +
                  std::to_string(component) + "](a) = " + format_double(value)),
      component_(component),
      value_(value) {}

const char* EvalDomainError::what() const noexcept {
  try {
    what_ = reason_ + " at " + path_;
    return what_.c_str();
  } catch (...) {
    return reason_.c_str();
  }
}

void EvalDomainError::prepend(const std::string& step) {
  path_ = path_.empty() ? step : step + "/" + path_;
}

}  // namespace confrac
