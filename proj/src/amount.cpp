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

#include "vickrey/amount.hpp"

#include <cctype>
#include <stdexcept>

namespace vickrey {

namespace {

bool all_digits(std::string_view text)
{
  if (text.empty())
  {
    return false;
  }
  for (char c : text)
  {
    if (!std::isdigit(static_cast<unsigned char>(c)))
    {
      return false;
    }
  }
  return true;
}

}  // namespace

Amount::Amount()
  : value_(0)
{
}

Amount::Amount(long value)
  : value_(value)
{
}

Amount::Amount(long numerator, unsigned long denominator)
{
  if (denominator == 0)
  {
    throw std::invalid_argument("Amount: zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Amount::Amount(mpq_class value)
  : value_(std::move(value))
{
}

std::optional<Amount> Amount::parse(std::string_view text)
{
  std::string body(text);
  bool        negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
  {
    negative = body.front() == '-';
    body.erase(body.begin());
  }

  mpq_class parsed;

  if (auto slash = body.find('/'); slash != std::string::npos)
  {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
    {
      return std::nullopt;
    }
    mpz_class d(den);
    if (d == 0)
    {
      return std::nullopt;
    }
    parsed = mpq_class(mpz_class(num), d);
  }
  else if (auto dot = body.find('.'); dot != std::string::npos)
  {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac))
    {
      return std::nullopt;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    parsed = mpq_class(mpz_class(whole) * scale + mpz_class(frac), scale);
  }
  else
  {
    if (!all_digits(body))
    {
      return std::nullopt;
    }
    parsed = mpq_class(mpz_class(body));
  }

  parsed.canonicalize();
  if (negative)
  {
    parsed = -parsed;
  }
  return Amount(std::move(parsed));
}

std::string Amount::str() const
{
  if (value_.get_den() == 1)
  {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

int Amount::sign() const
{
  return sgn(value_);
}

bool Amount::is_zero() const
{
  return sign() == 0;
}

bool Amount::is_negative() const
{
  return sign() < 0;
}

Amount &Amount::operator+=(Amount const &rhs)
{
  value_ += rhs.value_;
  return *this;
}

Amount &Amount::operator-=(Amount const &rhs)
{
  value_ -= rhs.value_;
  return *this;
}

Amount &Amount::operator*=(Amount const &rhs)
{
  value_ *= rhs.value_;
  return *this;
}

Amount operator+(Amount lhs, Amount const &rhs)
{
  lhs += rhs;
  return lhs;
}

Amount operator-(Amount lhs, Amount const &rhs)
{
  lhs -= rhs;
  return lhs;
}

Amount operator*(Amount lhs, Amount const &rhs)
{
  lhs *= rhs;
  return lhs;
}

bool operator==(Amount const &lhs, Amount const &rhs)
{
  return mpq_cmp(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) == 0;
}

std::strong_ordering operator<=>(Amount const &lhs, Amount const &rhs)
{
  int const c = mpq_cmp(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t());
  if (c < 0)
  {
    return std::strong_ordering::less;
  }
  if (c > 0)
  {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace vickrey
