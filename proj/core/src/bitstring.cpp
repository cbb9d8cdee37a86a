#include "cantor/bitstring.hpp"

#include <algorithm>
#include <bit>

#include "cantor/errors.hpp"

namespace cantor {

BitString BitString::from_string(std::string_view bits) {
  BitString s;
  s.append(bits);
  return s;
}

void BitString::push_back(bool bit) {
  if ((size_ & 63U) == 0) words_.push_back(0);
  if (bit) words_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63U);
  ++size_;
}

void BitString::pop_back() {
  --size_;
  words_[size_ >> 6] &= ~(std::uint64_t{1} << (size_ & 63U));
  if ((size_ & 63U) == 0) words_.pop_back();
}

void BitString::append(std::string_view bits) {
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      fail(ErrorCode::invalid_argument, "bit strings contain only '0' and '1'");
    }
    push_back(ch == '1');
  }
}

void BitString::truncate(std::size_t new_size) {
  while (size_ > new_size) pop_back();
}

std::size_t BitString::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitString::longest_run(bool bit) const {
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    run = (*this)[i] == bit ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

bool operator==(const BitString& a, const BitString& b) {
  return a.size_ == b.size_ && a.words_ == b.words_;
}

}  // namespace cantor
