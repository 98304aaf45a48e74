#ifndef BETTICERT_ERRORS_HPP
#define BETTICERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace betticert {

/// Malformed or inconsistent input (bad ids, zero weights, wrong lengths).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Moment values cannot be separated by index level.
class NotIndexIncreasing : public PreconditionError {
 public:
  NotIndexIncreasing(std::string lower, std::string upper)
      : PreconditionError("moment map is not index-increasing: " + lower + " has lower index than " +
                          upper + " but H(" + lower + ") >= H(" + upper + ")"),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {}

  const std::string& lower() const { return lower_; }
  const std::string& upper() const { return upper_; }

 private:
  std::string lower_;
  std::string upper_;
};

/// The index partition needs n - 2k >= 3; smaller gaps are refused.
class DegenerateCase : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace betticert

#endif  // BETTICERT_ERRORS_HPP
