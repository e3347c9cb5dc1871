// Copyright 2026 The tridiagsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tds {

enum class ErrorCode {
  kRange,
  kValidation,
  kParse,
  kCapExceeded,
  kUnsupported,
  kInternal,
};

/// Library error carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Maximum bit-string width accepted anywhere in the library. Dense
/// verification has a lower cap (see simulator.hpp).
inline constexpr int kMaxWidth = 24;

/// Fixed-width string of bits. Position 1 is the least-significant bit and
/// is rendered leftmost in text form, so "1101" encodes 1 + 2 + 8 = 11.
///
/// Widths never change after construction and every binary operation
/// requires both operands to have the same width.
class BitString {
 public:
  BitString() = default;

  BitString(std::uint32_t bits, int width) : bits_(bits), width_(width) {
    check_width(width);
    if (width < 32 && (bits >> width) != 0) {
      throw Error(ErrorCode::kRange, "bit value " + std::to_string(bits) +
                                         " does not fit in width " +
                                         std::to_string(width));
    }
  }

  static BitString zero(int width) { return BitString(0, width); }

  static BitString ones(int width) {
    check_width(width);
    return BitString(mask_for(width), width);
  }

  /// Encode a non-negative integer; the integer's bit k becomes position
  /// k + 1. Throws a range error when the value needs more than `width` bits.
  static BitString from_integer(std::uint32_t value, int width) {
    check_width(width);
    if (value > mask_for(width)) {
      throw Error(ErrorCode::kRange,
                  "integer " + std::to_string(value) +
                      " out of range for width " + std::to_string(width));
    }
    return BitString(value, width);
  }

  /// Selector with the first m positions one and the remaining width - m
  /// positions zero.
  static BitString selector(int m, int width) {
    check_width(width);
    if (m < 0 || m > width) {
      throw Error(ErrorCode::kRange, "selector index " + std::to_string(m) +
                                         " out of range for width " +
                                         std::to_string(width));
    }
    return BitString(mask_for(m), width);
  }

  /// Parse text such as "1101" (leftmost character = position 1).
  static BitString parse(std::string_view text) {
    int width = static_cast<int>(text.size());
    check_width(width);
    std::uint32_t bits = 0;
    for (int j = 0; j < width; ++j) {
      char c = text[static_cast<std::size_t>(j)];
      if (c == '1') {
        bits |= (1u << j);
      } else if (c != '0') {
        throw Error(ErrorCode::kParse,
                    std::string("invalid bit character '") + c + "'");
      }
    }
    return BitString(bits, width);
  }

  std::uint32_t to_integer() const noexcept { return bits_; }
  int width() const noexcept { return width_; }

  /// Bit at 1-based position (position 1 = least significant).
  bool bit(int position) const {
    if (position < 1 || position > width_) {
      throw Error(ErrorCode::kRange, "bit position out of range");
    }
    return (bits_ >> (position - 1)) & 1u;
  }

  int popcount() const noexcept { return std::popcount(bits_); }

  BitString operator^(const BitString& other) const {
    require_same_width(other);
    return BitString(bits_ ^ other.bits_, width_);
  }

  BitString operator&(const BitString& other) const {
    require_same_width(other);
    return BitString(bits_ & other.bits_, width_);
  }

  BitString negated() const {
    return BitString(~bits_ & mask_for(width_), width_);
  }

  /// Per-position exponentiation b^e = b XOR NOT(e), applied bitwise with
  /// this string as the base.
  BitString exponentiate(const BitString& exponent) const {
    require_same_width(exponent);
    return BitString((bits_ ^ ~exponent.bits_) & mask_for(width_), width_);
  }

  /// Integer inner product sum_l x_l * y_l (not reduced mod 2).
  int dot(const BitString& other) const {
    require_same_width(other);
    return std::popcount(bits_ & other.bits_);
  }

  bool dot_parity(const BitString& other) const { return dot(other) & 1; }

  bool is_zero() const noexcept { return bits_ == 0; }

  std::string to_text() const {
    std::string out(static_cast<std::size_t>(width_), '0');
    for (int j = 0; j < width_; ++j) {
      if ((bits_ >> j) & 1u) out[static_cast<std::size_t>(j)] = '1';
    }
    return out;
  }

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) noexcept {
    return !(a == b);
  }
  friend bool operator<(const BitString& a, const BitString& b) noexcept {
    return a.width_ != b.width_ ? a.width_ < b.width_ : a.bits_ < b.bits_;
  }

 private:
  static std::uint32_t mask_for(int width) noexcept {
    return width >= 32 ? ~0u : (1u << width) - 1u;
  }

  static void check_width(int width) {
    if (width < 1 || width > kMaxWidth) {
      throw Error(ErrorCode::kRange,
                  "width " + std::to_string(width) + " outside [1, " +
                      std::to_string(kMaxWidth) + "]");
    }
  }

  void require_same_width(const BitString& other) const {
    if (width_ != other.width_) {
      throw Error(ErrorCode::kValidation,
                  "bit-string width mismatch: " + std::to_string(width_) +
                      " vs " + std::to_string(other.width_));
    }
  }

  std::uint32_t bits_ = 0;
  int width_ = 0;
};

/// Label (x, z) of the Pauli string W(x, z) = i^{x.z} X^x Z^z. Position j
/// holds I when (x_j, z_j) = (0,0), X for (1,0), Z for (0,1) and Y for (1,1),
/// so the Y count of the string equals x.z.
struct WalshLabel {
  BitString x;
  BitString z;

  WalshLabel() = default;

  WalshLabel(BitString x_part, BitString z_part)
      : x(std::move(x_part)), z(std::move(z_part)) {
    if (x.width() != z.width()) {
      throw Error(ErrorCode::kValidation,
                  "x/z width mismatch in Walsh label");
    }
  }

  static WalshLabel identity(int width) {
    return WalshLabel(BitString::zero(width), BitString::zero(width));
  }

  /// Parse a Pauli text string over {I, X, Y, Z}; leftmost character is
  /// position 1 (the least-significant position).
  static WalshLabel parse(std::string_view pauli);

  int width() const noexcept { return x.width(); }
  int y_count() const { return x.dot(z); }
  bool y_parity() const { return y_count() & 1; }
  bool is_identity() const noexcept { return x.is_zero() && z.is_zero(); }
  bool is_diagonal() const noexcept { return x.is_zero(); }

  std::string to_pauli_text() const;

  friend bool operator==(const WalshLabel& a, const WalshLabel& b) noexcept {
    return a.x == b.x && a.z == b.z;
  }
  friend bool operator!=(const WalshLabel& a, const WalshLabel& b) noexcept {
    return !(a == b);
  }
  friend bool operator<(const WalshLabel& a, const WalshLabel& b) noexcept {
    return a.x != b.x ? a.x < b.x : a.z < b.z;
  }
};

/// True iff W(x_P, z_P) and W(x_Q, z_Q) commute: x_P.z_Q + x_Q.z_P = 0 mod 2.
inline bool commutes(const WalshLabel& p, const WalshLabel& q) {
  return (p.x.dot(q.z) + q.x.dot(p.z)) % 2 == 0;
}

/// Parity of the Y count, (x.z) mod 2.
inline bool y_parity(const WalshLabel& p) { return p.y_parity(); }

/// Basis-state action of X^x: |p> maps to |p XOR x>.
inline BitString apply_x_mask(const BitString& p, const BitString& x) {
  return p ^ x;
}

/// i^k for integer k (k taken mod 4).
inline std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace tds
