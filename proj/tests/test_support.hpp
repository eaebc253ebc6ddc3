#pragma once

#include "positroid/exact_polynomial.hpp"
#include "positroid/positroid_model.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

/// "123,235,345" -> {{1,2,3},{2,3,5},{3,4,5}}. Digits only.
inline std::vector<std::vector<int>> raw_necklace(const std::string& text) {
  std::vector<std::vector<int>> out(1);
  for (char c : text) {
    if (c == ',') out.emplace_back();
    else out.back().push_back(c - '0');
  }
  return out;
}

inline positroid::GrassmannNecklace necklace(const std::string& text) {
  return positroid::validate_necklace(raw_necklace(text));
}

inline positroid::ExactPolynomial poly(std::initializer_list<long> c) { return positroid::ExactPolynomial(c); }

inline std::vector<std::string> words(const auto& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l.w.to_string());
  return out;
}

}  // namespace testing_support
