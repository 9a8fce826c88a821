#pragma once

#include <stdexcept>
#include <string>

namespace heatdet {

/// Bad arguments, unsupported kinds, violated preconditions.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric domain violations (pole evaluation, pair beyond injectivity radius, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Spectral truncation too coarse for the requested time; carries the smallest valid t.
class truncation_error : public std::runtime_error {
public:
  truncation_error(const std::string& what, double t_min_valid)
      : std::runtime_error(what), t_min_valid(t_min_valid) {}
  double t_min_valid;
};

/// Rank-deficient or otherwise unusable least-squares problem.
class fit_error : public std::runtime_error {
public:
  explicit fit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Config file problems, with 1-based position when known (0 = unknown).
class config_error : public std::runtime_error {
public:
  config_error(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

} // namespace heatdet
