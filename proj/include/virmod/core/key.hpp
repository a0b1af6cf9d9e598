#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace virmod {

/// Multi-index labelling a basis vector: carrier coordinates first, inner
/// module coordinates last. Fixed capacity, so keys never allocate.
class Key {
 public:
  static constexpr std::size_t kCapacity = 10;

  Key() = default;
  Key(std::initializer_list<int> idx) {
    for (int v : idx) push_back(v);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int operator[](std::size_t i) const { return idx_[i]; }
  int& operator[](std::size_t i) { return idx_[i]; }

  void push_back(int v) {
    if (size_ == kCapacity) throw std::length_error("Key: nesting too deep");
    idx_[size_++] = v;
  }

  /// Sub-key [from, from + len).
  Key slice(std::size_t from, std::size_t len) const {
    Key out;
    for (std::size_t i = from; i < from + len && i < size_; ++i) out.push_back(idx_[i]);
    return out;
  }

  Key tail(std::size_t from) const { return slice(from, size_ - from); }

  static Key concat(const Key& a, const Key& b) {
    Key out = a;
    for (std::size_t i = 0; i < b.size_; ++i) out.push_back(b.idx_[i]);
    return out;
  }

  auto operator<=>(const Key&) const = default;
  bool operator==(const Key&) const = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) s += ',';
      s += std::to_string(idx_[i]);
    }
    return s;
  }

 private:
  std::array<int, kCapacity> idx_{};
  std::uint8_t size_ = 0;
};

}  // namespace virmod
