#pragma once

#include <compare>
#include <string>
#include <vector>

namespace kn {

/// An entry of the type C_m alphabet 1 < 2 < ... < m < m̄ < ... < 2̄ < 1̄.
///
/// Stored as a signed code: +i for i and -i for ī. The code is independent
/// of the alphabet bound, so letters compare correctly across ranks;
/// rank(m) gives the 1..2m position inside a specific alphabet.
class Letter {
public:
  constexpr Letter() = default;

  static constexpr Letter unbarred(int i) { return Letter(i); }
  static constexpr Letter barred(int i) { return Letter(-i); }
  /// Throws InvalidArgument for code 0.
  static Letter from_code(int code);
  /// Inverse of rank(); throws InvalidArgument outside 1..2m.
  static Letter from_rank(int rank, int m);

  constexpr int index() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool is_barred() const { return code_ < 0; }
  constexpr int code() const { return code_; }
  constexpr int rank(int m) const { return code_ > 0 ? code_ : 2 * m + 1 + code_; }
  constexpr bool fits(int m) const { return index() >= 1 && index() <= m; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.key() <=> b.key();
  }

  /// "3" or "-3", the serialized form.
  std::string to_string() const;
  /// "3" or "3̄" (combining macron), for tables.
  std::string pretty() const;

private:
  constexpr explicit Letter(int code) : code_(code) {}
  constexpr int key() const { return code_ > 0 ? code_ : kBarredBase + code_; }

  static constexpr int kBarredBase = 1 << 20;
  int code_ = 1;
};

/// The 2m letters in increasing order.
std::vector<Letter> alphabet(int m);

/// Parse "3", "-3" (or "3̄"); throws InvalidArgument.
Letter parse_letter(const std::string& text);

}  // namespace kn
