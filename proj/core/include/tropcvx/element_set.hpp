#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropcvx {

/// A subset of the ground set {0, ..., n-1}, stored as a bit mask. Elements
/// are 0-based in code and printed 1-based.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 30;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet full(std::size_t n) { return ElementSet(n == 32 ? ~0u : ((1u << n) - 1u)); }
  static constexpr ElementSet single(std::size_t i) { return ElementSet(1u << i); }
  static ElementSet of(std::initializer_list<std::size_t> elems) {
    ElementSet s;
    for (auto e : elems) s.insert(e);
    return s;
  }
  /// Builds from 1-based element labels, as written in files and on the CLI.
  static ElementSet from_labels(const std::vector<int>& labels);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(std::size_t i) { bits_ |= (1u << i); }
  constexpr void erase(std::size_t i) { bits_ &= ~(1u << i); }
  constexpr ElementSet with(std::size_t i) const { return ElementSet(bits_ | (1u << i)); }
  constexpr ElementSet without(std::size_t i) const { return ElementSet(bits_ & ~(1u << i)); }
  constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool is_proper_subset_of(ElementSet o) const { return is_subset_of(o) && bits_ != o.bits_; }

  std::vector<std::size_t> elements() const;
  std::vector<int> labels() const;
  /// "{1,2,3}" with 1-based labels.
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  /// Orders by size first, then lexicographically by the sorted element list.
  friend bool operator<(ElementSet a, ElementSet b);

 private:
  std::uint32_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, ElementSet s);

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept { return s.bits(); }
};

}  // namespace tropcvx
