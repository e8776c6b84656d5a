#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entrss {

// Zero spacing between the order statistics an estimator needs.
class tied_spacing_error : public std::domain_error {
 public:
  tied_spacing_error(std::size_t index, const std::string& what_arg)
      : std::domain_error(what_arg), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// All 2m+1 window values equal, so the local regression slope is undefined.
class tied_window_error : public tied_spacing_error {
 public:
  using tied_spacing_error::tied_spacing_error;
};

// Sample with zero variance where a positive sigma-hat is required.
class degenerate_sample_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace entrss
