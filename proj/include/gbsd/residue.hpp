// Copyright 2026 The gbsd authors
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

#pragma once

#include <compare>
#include <stdexcept>

namespace gbsd {

/// Exact arithmetic in Z_d. The canonical representative lives in [0, d),
/// which removes the sign ambiguity in expressions like -m mod d.
class Residue {
 public:
  Residue() = default;

  Residue(long long value, int modulus) : mod_(modulus) {
    if (modulus < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
    val_ = static_cast<int>(((value % modulus) + modulus) % modulus);
  }

  int value() const { return val_; }
  int modulus() const { return mod_; }
  bool is_zero() const { return val_ == 0; }

  Residue operator+(const Residue& o) const {
    check(o);
    return Residue(static_cast<long long>(val_) + o.val_, mod_);
  }
  Residue operator-(const Residue& o) const {
    check(o);
    return Residue(static_cast<long long>(val_) - o.val_, mod_);
  }
  Residue operator-() const { return Residue(-static_cast<long long>(val_), mod_); }
  Residue operator*(const Residue& o) const {
    check(o);
    return Residue(static_cast<long long>(val_) * o.val_, mod_);
  }
  Residue scaled(long long c) const { return Residue(c * val_, mod_); }

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  void check(const Residue& o) const {
    if (mod_ != o.mod_) throw std::invalid_argument("Residue: modulus mismatch");
  }

  int val_ = 0;
  int mod_ = 2;
};

}  // namespace gbsd
