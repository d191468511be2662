#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The Vickrey Engine Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace vickrey {

/// Exact rational quantity used for bids, objective values and payments.
///
/// Values are kept in lowest terms with a positive denominator, so equality
/// and ordering are bit-exact; there is no floating point anywhere in the
/// engine. Negative values are representable (validation rejects negative
/// bids, and the soundness checkers verify payment signs).
class Amount
{
public:
  Amount();
  explicit Amount(long value);
  Amount(long numerator, unsigned long denominator);

  /// Accepts an integer ("7"), a fraction ("3/4") or a decimal ("2.50")
  /// literal, optionally signed. Returns nullopt on malformed input or a
  /// zero denominator.
  static std::optional<Amount> parse(std::string_view text);

  /// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  int  sign() const;
  bool is_zero() const;
  bool is_negative() const;

  Amount &operator+=(Amount const &rhs);
  Amount &operator-=(Amount const &rhs);
  Amount &operator*=(Amount const &rhs);

  friend Amount operator+(Amount lhs, Amount const &rhs);
  friend Amount operator-(Amount lhs, Amount const &rhs);
  friend Amount operator*(Amount lhs, Amount const &rhs);

  friend bool                 operator==(Amount const &lhs, Amount const &rhs);
  friend std::strong_ordering operator<=>(Amount const &lhs, Amount const &rhs);

private:
  explicit Amount(mpq_class value);

  mpq_class value_;
};

}  // namespace vickrey
