#pragma once

#include <stdexcept>
#include <string>

namespace match_ybo {

// Malformed or out-of-contract input (bad JSON, bad labels, bad shapes).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that was supposed to be a solution turned out not to be one.
class NotASolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IrrationalSpectrum : public std::runtime_error {
 public:
  IrrationalSpectrum(std::string trace, std::string det)
      : std::runtime_error("irrational spectrum (trace " + trace + ", det " + det + ")"),
        trace_(std::move(trace)),
        det_(std::move(det)) {}

  const std::string& trace() const { return trace_; }
  const std::string& det() const { return det_; }

 private:
  std::string trace_;
  std::string det_;
};

}  // namespace match_ybo
