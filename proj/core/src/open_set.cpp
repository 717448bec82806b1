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

#include "specdom/open_set.hpp"

#include <algorithm>
#include <set>

#include "specdom/errors.hpp"

namespace specdom {

Carrier::Carrier(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi))
    throw MalformedInterval("carrier endpoints out of order: " + str());
}

namespace {

// Sort key: a from-the-left-end piece starts at lo and includes it, so it
// precedes any (lo, ...] piece.
bool piece_before(const HalfOpenPiece& a, const HalfOpenPiece& b) {
  if (a.lower.has_value() != b.lower.has_value()) return !a.lower.has_value();
  if (a.lower.has_value() && *a.lower != *b.lower) return *a.lower < *b.lower;
  return a.upper < b.upper;
}

// Clips one raw piece to the carrier; empty results are malformed, except
// the left-end singleton.
HalfOpenPiece clip_piece(const Carrier& c, const HalfOpenPiece& raw) {
  Rational upper = rat_min(raw.upper, c.hi);
  if (!raw.lower.has_value() || *raw.lower < c.lo) {
    if (upper < c.lo)
      throw MalformedInterval("piece empty after clipping to carrier " + c.str());
    return HalfOpenPiece::from_left_end(std::move(upper));
  }
  if (!(*raw.lower < upper))
    throw MalformedInterval("piece with lower >= upper after clipping to carrier " +
                            c.str());
  return HalfOpenPiece::open(*raw.lower, std::move(upper));
}

// Sort + merge a list of clipped pieces into canonical form.
std::vector<HalfOpenPiece> merge_pieces(std::vector<HalfOpenPiece> pieces) {
  std::sort(pieces.begin(), pieces.end(), piece_before);
  std::vector<HalfOpenPiece> out;
  for (HalfOpenPiece& p : pieces) {
    if (!out.empty()) {
      HalfOpenPiece& prev = out.back();
      // After sorting, a from-the-left-end piece can only follow another
      // one; both start at lo, so they always fuse.  An open piece (c, d]
      // fuses with its predecessor when c does not clear prev's upper end.
      bool fuse = !p.lower.has_value() || !(prev.upper < *p.lower);
      if (fuse) {
        if (prev.upper < p.upper) prev.upper = std::move(p.upper);
        continue;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

void check_carriers(const OpenSet& a, const OpenSet& b) {
  if (a.carrier() != b.carrier())
    throw CarrierMismatch("open sets over carriers " + a.carrier().str() +
                          " and " + b.carrier().str());
}

}  // namespace

OpenSet::OpenSet(Carrier carrier, std::vector<HalfOpenPiece> raw)
    : carrier_(std::move(carrier)) {
  std::vector<HalfOpenPiece> clipped;
  clipped.reserve(raw.size());
  for (const HalfOpenPiece& p : raw) clipped.push_back(clip_piece(carrier_, p));
  pieces_ = merge_pieces(std::move(clipped));
}

bool OpenSet::is_full() const {
  return pieces_.size() == 1 && !pieces_[0].lower.has_value() &&
         pieces_[0].upper == carrier_.hi;
}

bool OpenSet::contains(const Rational& x) const {
  if (x < carrier_.lo || carrier_.hi < x)
    throw PointOutsideCarrier("point " + x.str() + " outside carrier " +
                              carrier_.str());
  for (const HalfOpenPiece& p : pieces_) {
    if (p.lower.has_value()) {
      if (*p.lower < x && x <= p.upper) return true;
    } else {
      if (x <= p.upper) return true;  // x >= lo already checked
    }
  }
  return false;
}

std::string OpenSet::str() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (const HalfOpenPiece& p : pieces_) {
    if (!out.empty()) out += "u";
    if (!p.lower.has_value()) {
      out += p.upper == carrier_.lo
                 ? "{" + carrier_.lo.str() + "}"
                 : "[" + carrier_.lo.str() + "," + p.upper.str() + "]";
    } else {
      out += "(" + p.lower->str() + "," + p.upper.str() + "]";
    }
  }
  return out;
}

bool operator<(const OpenSet& a, const OpenSet& b) {
  if (a.carrier_.lo != b.carrier_.lo) return a.carrier_.lo < b.carrier_.lo;
  if (a.carrier_.hi != b.carrier_.hi) return a.carrier_.hi < b.carrier_.hi;
  return std::lexicographical_compare(a.pieces_.begin(), a.pieces_.end(),
                                      b.pieces_.begin(), b.pieces_.end(),
                                      piece_before);
}

OpenSet set_union(const OpenSet& a, const OpenSet& b) {
  check_carriers(a, b);
  std::vector<HalfOpenPiece> pieces = a.pieces();
  pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
  return OpenSet(a.carrier(), std::move(pieces));
}

OpenSet set_intersect(const OpenSet& a, const OpenSet& b) {
  check_carriers(a, b);
  std::vector<HalfOpenPiece> pieces;
  for (const HalfOpenPiece& p : a.pieces()) {
    for (const HalfOpenPiece& q : b.pieces()) {
      if (!p.lower.has_value() && !q.lower.has_value()) {
        pieces.push_back(HalfOpenPiece::from_left_end(rat_min(p.upper, q.upper)));
        continue;
      }
      // At least one side is open below; the overlap, if any, is open below.
      const Rational& lo =
          !p.lower.has_value() ? *q.lower
          : !q.lower.has_value() ? *p.lower
                                 : rat_max(*p.lower, *q.lower);
      Rational hi = rat_min(p.upper, q.upper);
      if (lo < hi) pieces.push_back(HalfOpenPiece::open(lo, std::move(hi)));
    }
  }
  return OpenSet(a.carrier(), std::move(pieces));
}

bool is_subset(const OpenSet& a, const OpenSet& b) {
  check_carriers(a, b);
  // Canonical pieces are separated by real gaps, so each connected piece of
  // `a` must fit inside a single piece of `b`.
  for (const HalfOpenPiece& p : a.pieces()) {
    bool covered = false;
    for (const HalfOpenPiece& q : b.pieces()) {
      if (!p.lower.has_value()) {
        covered = !q.lower.has_value() && p.upper <= q.upper;
      } else if (!q.lower.has_value()) {
        covered = p.upper <= q.upper;  // (x,y] with x >= lo sits in [lo,u]
      } else {
        covered = *q.lower <= *p.lower && p.upper <= q.upper;
      }
      if (covered) break;
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<OpenSet> cells(const Carrier& carrier,
                           const std::vector<OpenSet>& opens) {
  std::set<Rational> cuts{carrier.lo, carrier.hi};
  for (const OpenSet& o : opens) {
    if (o.carrier() != carrier)
      throw CarrierMismatch("cells over carrier " + carrier.str() +
                            " with open set over " + o.carrier().str());
    for (const HalfOpenPiece& p : o.pieces()) {
      if (p.lower.has_value()) cuts.insert(*p.lower);
      cuts.insert(p.upper);
    }
  }
  std::vector<OpenSet> out;
  out.push_back(OpenSet(carrier, {HalfOpenPiece::from_left_end(carrier.lo)}));
  const Rational* prev = nullptr;
  for (const Rational& b : cuts) {
    if (prev)
      out.push_back(OpenSet(carrier, {HalfOpenPiece::open(*prev, b)}));
    prev = &b;
  }
  return out;
}

Rational cell_representative(const OpenSet& cell) {
  if (cell.pieces().size() != 1)
    throw InvalidArgument("representative of a non-cell open set");
  const HalfOpenPiece& p = cell.pieces()[0];
  return p.lower.has_value() ? p.upper : cell.carrier().lo;
}

}  // namespace specdom
