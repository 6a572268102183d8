#pragma once

#include <stdexcept>
#include <string>

namespace lvelab {

/* Input lies outside the mathematical domain of the operation. */
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/* Request exceeds a configured combinatorial capacity limit. */
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/* Borel-Laplace resummation or a quadrature failed to deliver a value. */
class resummation_error : public std::runtime_error {
public:
  explicit resummation_error(const std::string& what) : std::runtime_error(what) {}
};

/* A structural invariant was violated; signals corrupted internal data. */
class invariant_error : public std::logic_error {
public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lvelab
