#pragma once

#include <string>
#include <utility>

namespace pdroot
{

/// Outcome of one exact identity check; `details` explains a failure (or summarizes a pass).
struct Verification
{
  bool ok = false;
  std::string details;

  static Verification pass(std::string details = {}) { return {true, std::move(details)}; }
  static Verification fail(std::string details) { return {false, std::move(details)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace pdroot
