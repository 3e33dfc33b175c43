#ifndef PALWIDTH_ERRORS_HPP
#define PALWIDTH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palwidth {

/// A letter names a generator outside the rank, or two operands disagree on rank.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with an input outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate premise failed to verify. The message names the premise.
class CertificateRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that the library guarantees by construction did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("parse error at " + std::to_string(position) +
                              ": " + what),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace palwidth

#endif  // PALWIDTH_ERRORS_HPP
