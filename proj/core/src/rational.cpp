// Copyright 2026 The specdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specdom/rational.hpp"

#include <cctype>

#include "specdom/errors.hpp"

namespace specdom {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (sgn(o.v_) == 0) throw InvalidArgument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

// digits := [0-9]+ ; returns one past the last digit, or `at` if none.
std::size_t scan_digits(std::string_view s, std::size_t at) {
  while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
  return at;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t at = 0;
  if (at < text.size() && text[at] == '-') ++at;
  std::size_t num_end = scan_digits(text, at);
  if (num_end == at) throw ParseError("expected digits in rational literal", at);
  at = num_end;
  if (at < text.size()) {
    if (text[at] != '/')
      throw ParseError("unexpected character in rational literal", at);
    ++at;
    std::size_t den_end = scan_digits(text, at);
    if (den_end == at)
      throw ParseError("expected denominator digits in rational literal", at);
    if (den_end != text.size())
      throw ParseError("trailing characters after rational literal", den_end);
  }
  mpq_class v(std::string(text), 10);
  if (v.get_den() == 0) throw ParseError("rational literal with denominator 0", 0);
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

}  // namespace specdom
