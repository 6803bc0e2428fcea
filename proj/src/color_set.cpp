#include "uvd/color_set.hpp"

namespace uvd {

std::vector<int> ColorSet::colors() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string ColorSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int c : colors()) {
    if (!first) s += ',';
    s += std::to_string(c);
    first = false;
  }
  return s + "}";
}

}  // namespace uvd
