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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace specdom {

// Root of every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed values handed in by a caller (bad endpoints, zero denominators,
// out-of-range indices, ...).  Everything here maps to "input error" at the
// tool boundary.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two boxes (or a box and a declared arity) disagree on dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A set of boxes has no upper bound: some coordinate has max lo > min hi.
// `witness` optionally names the cell on which the conflict was detected.
class InconsistentJoin : public Error {
 public:
  explicit InconsistentJoin(const std::string& what,
                            std::optional<std::string> witness = std::nullopt)
      : Error(what), witness(std::move(witness)) {}
  std::optional<std::string> witness;
};

// Meet of an empty family is undefined here (no top element to return).
class EmptyMeet : public Error {
 public:
  using Error::Error;
};

// A raw half-open piece is empty after clipping to the carrier.
class MalformedInterval : public Error {
 public:
  using Error::Error;
};

// Operands live over different carriers.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

// A queried point lies outside the carrier interval.
class PointOutsideCarrier : public Error {
 public:
  using Error::Error;
};

// A closure or enumeration would exceed its configured cap.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation that needs a non-empty open set received the empty one.
class EmptyOpen : public Error {
 public:
  using Error::Error;
};

// Interpolation was asked for a pair not related by way-below; `index` is the
// offending member of the finite set when known.
class NotWayBelow : public Error {
 public:
  explicit NotWayBelow(const std::string& what, int index = -1)
      : Error(what), index(index) {}
  int index;
};

// Text input could not be parsed; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position(position) {}
  std::size_t position;
};

// An interval evaluation received the bottom box.
class BottomInput : public Error {
 public:
  using Error::Error;
};

// The a-priori bound search exhausted its iteration budget; `piece` is the
// partition piece being bounded when known.
class DivergenceBound : public Error {
 public:
  explicit DivergenceBound(const std::string& what, int piece = -1)
      : Error(what), piece(piece) {}
  int piece;
};

// The enclosure iteration hit its cap without reaching a fixpoint.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& what, int iterations = -1)
      : Error(what), iterations(iterations) {}
  int iterations;
};

// A lattice description failed validation (not a bounded distributive
// lattice, ragged tables, unknown element names, ...).
class InvalidLattice : public Error {
 public:
  using Error::Error;
};

}  // namespace specdom
