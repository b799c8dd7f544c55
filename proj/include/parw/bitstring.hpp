#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace parw {

// Finite binary string. The empty string renders as "e" in all file formats.
// Ordering is plain lexicographic on the bits, so a prefix sorts before its
// extensions; that is the canonical output order everywhere.
class BitString {
 public:
  BitString() = default;

  static std::optional<BitString> parse(std::string_view text) {
    if (text == "e") return BitString();
    if (text.empty()) return std::nullopt;
    for (char c : text)
      if (c != '0' && c != '1') return std::nullopt;
    BitString b;
    b.bits_.assign(text);
    return b;
  }

  static BitString zeros(int n) {
    BitString b;
    b.bits_.assign(static_cast<size_t>(n), '0');
    return b;
  }

  int length() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  int bit(int i) const { return bits_[static_cast<size_t>(i)] - '0'; }

  BitString extended(int b) const {
    BitString out = *this;
    out.bits_.push_back(b ? '1' : '0');
    return out;
  }

  BitString prefix(int n) const {
    BitString out;
    out.bits_ = bits_.substr(0, static_cast<size_t>(n));
    return out;
  }

  // rho subseteq sigma, allowing equality.
  bool is_prefix_of(const BitString& o) const {
    return bits_.size() <= o.bits_.size() &&
           o.bits_.compare(0, bits_.size(), bits_) == 0;
  }
  bool is_proper_prefix_of(const BitString& o) const {
    return bits_.size() < o.bits_.size() && is_prefix_of(o);
  }
  // One of the two extends the other; equivalently the cylinders intersect.
  bool comparable_with(const BitString& o) const {
    return is_prefix_of(o) || o.is_prefix_of(*this);
  }

  std::string str() const { return bits_.empty() ? "e" : bits_; }
  const std::string& raw_bits() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::string bits_;
};

}  // namespace parw
