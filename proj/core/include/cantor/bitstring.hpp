#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Finite binary string stored packed, 64 bits per word. Index 0 is the
/// first (most significant) bit omega_1.
class BitString {
 public:
  BitString() = default;
  static BitString from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool operator[](std::size_t i) const { return ((words_[i >> 6] >> (i & 63U)) & 1U) != 0; }

  void push_back(bool bit);
  void pop_back();
  void append(std::string_view bits);
  void truncate(std::size_t new_size);
  void reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }

  std::size_t popcount() const;
  /// Length of the longest block of consecutive `bit`s.
  std::size_t longest_run(bool bit) const;
  std::string to_string() const;

  friend bool operator==(const BitString& a, const BitString& b);

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace cantor
