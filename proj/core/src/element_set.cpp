#include "tropcvx/element_set.hpp"

#include <algorithm>
#include <ostream>

#include "tropcvx/errors.hpp"

namespace tropcvx {

ElementSet ElementSet::from_labels(const std::vector<int>& labels) {
  ElementSet s;
  for (int l : labels) {
    if (l < 1 || static_cast<std::size_t>(l) > kMaxElements) {
      throw InvalidInput("element label out of range: " + std::to_string(l));
    }
    s.insert(static_cast<std::size_t>(l - 1));
  }
  return s;
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::vector<int> ElementSet::labels() const {
  std::vector<int> out;
  for (auto e : elements()) out.push_back(static_cast<int>(e) + 1);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int l : labels()) {
    if (!first) out += ",";
    out += std::to_string(l);
    first = false;
  }
  return out + "}";
}

bool operator<(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::ostream& operator<<(std::ostream& os, ElementSet s) { return os << s.to_string(); }

}  // namespace tropcvx
