#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "upq/rational.hpp"

namespace upq {

/// An interval of the extended rational line. A missing endpoint means -inf
/// (lower) or +inf (upper); infinite endpoints are always open. Empty intervals
/// are canonicalized to the open interval (0,0) so that equality is structural.
class ExtendedInterval {
 public:
  ExtendedInterval() = default;  // the empty interval

  static ExtendedInterval make(std::optional<Rational> lower, std::optional<Rational> upper,
                               bool lower_closed, bool upper_closed) {
    ExtendedInterval i;
    i.lower_closed_ = lower.has_value() && lower_closed;
    i.upper_closed_ = upper.has_value() && upper_closed;
    i.lower_ = std::move(lower);
    i.upper_ = std::move(upper);
    if (i.lower_ && i.upper_) {
      const auto cmp = *i.lower_ <=> *i.upper_;
      if (cmp > 0 || (cmp == 0 && !(i.lower_closed_ && i.upper_closed_))) return empty();
    }
    return i;
  }

  static ExtendedInterval empty() { return ExtendedInterval(); }
  static ExtendedInterval whole() { return make(std::nullopt, std::nullopt, false, false); }
  static ExtendedInterval closed(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), true, true); }
  static ExtendedInterval open(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), false, false); }
  static ExtendedInterval closed_open(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), true, false); }
  static ExtendedInterval open_closed(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), false, true); }
  static ExtendedInterval at_least(Rational lo) { return make(std::move(lo), std::nullopt, true, false); }
  static ExtendedInterval at_most(Rational hi) { return make(std::nullopt, std::move(hi), false, true); }

  const std::optional<Rational>& lower() const noexcept { return lower_; }
  const std::optional<Rational>& upper() const noexcept { return upper_; }
  bool lower_closed() const noexcept { return lower_closed_; }
  bool upper_closed() const noexcept { return upper_closed_; }

  bool is_empty() const {
    return lower_ && upper_ && *lower_ == *upper_ && !(lower_closed_ && upper_closed_);
  }
  bool is_bounded() const noexcept { return lower_.has_value() && upper_.has_value(); }

  bool contains(const Rational& x) const {
    if (lower_) {
      const auto cmp = x <=> *lower_;
      if (cmp < 0 || (cmp == 0 && !lower_closed_)) return false;
    }
    if (upper_) {
      const auto cmp = x <=> *upper_;
      if (cmp > 0 || (cmp == 0 && !upper_closed_)) return false;
    }
    return true;
  }

  ExtendedInterval intersect(const ExtendedInterval& other) const {
    if (is_empty() || other.is_empty()) return empty();
    std::optional<Rational> lo = lower_;
    bool lo_closed = lower_closed_;
    if (other.lower_) {
      if (!lo || *other.lower_ > *lo) {
        lo = other.lower_;
        lo_closed = other.lower_closed_;
      } else if (*other.lower_ == *lo) {
        lo_closed = lo_closed && other.lower_closed_;
      }
    }
    std::optional<Rational> hi = upper_;
    bool hi_closed = upper_closed_;
    if (other.upper_) {
      if (!hi || *other.upper_ < *hi) {
        hi = other.upper_;
        hi_closed = other.upper_closed_;
      } else if (*other.upper_ == *hi) {
        hi_closed = hi_closed && other.upper_closed_;
      }
    }
    return make(std::move(lo), std::move(hi), lo_closed, hi_closed);
  }

  /// Image under x -> -x.
  ExtendedInterval negated() const {
    if (is_empty()) return empty();
    std::optional<Rational> lo, hi;
    if (upper_) lo = -*upper_;
    if (lower_) hi = -*lower_;
    return make(std::move(lo), std::move(hi), upper_closed_, lower_closed_);
  }

  std::string to_string() const {
    if (is_empty()) return "{}";
    std::string out = lower_closed_ ? "[" : "(";
    out += lower_ ? lower_->to_string() : "-inf";
    out += ", ";
    out += upper_ ? upper_->to_string() : "+inf";
    out += upper_closed_ ? "]" : ")";
    return out;
  }

  friend bool operator==(const ExtendedInterval&, const ExtendedInterval&) = default;

 private:
  std::optional<Rational> lower_ = Rational(0);
  std::optional<Rational> upper_ = Rational(0);
  bool lower_closed_ = false;
  bool upper_closed_ = false;
};

inline bool interval_contains(const ExtendedInterval& i, const Rational& x) { return i.contains(x); }

/// Sorts and fuses overlapping or touching intervals; empty inputs are dropped.
inline std::vector<ExtendedInterval> merge_intervals(std::vector<ExtendedInterval> parts) {
  std::erase_if(parts, [](const ExtendedInterval& i) { return i.is_empty(); });
  // Order by lower endpoint; -inf first, closed before open at equal values.
  std::sort(parts.begin(), parts.end(), [](const ExtendedInterval& x, const ExtendedInterval& y) {
    if (!x.lower() || !y.lower()) return !x.lower() && y.lower();
    if (*x.lower() != *y.lower()) return *x.lower() < *y.lower();
    return x.lower_closed() && !y.lower_closed();
  });
  std::vector<ExtendedInterval> merged;
  for (auto& part : parts) {
    if (!merged.empty()) {
      ExtendedInterval& cur = merged.back();
      bool joins = !cur.upper() || !part.lower();
      if (!joins) {
        const auto cmp = *part.lower() <=> *cur.upper();
        joins = cmp < 0 || (cmp == 0 && (cur.upper_closed() || part.lower_closed()));
      }
      if (joins) {
        std::optional<Rational> hi = cur.upper();
        bool hi_closed = cur.upper_closed();
        if (hi) {
          if (!part.upper() || *part.upper() > *hi) {
            hi = part.upper();
            hi_closed = part.upper_closed();
          } else if (*part.upper() == *hi) {
            hi_closed = hi_closed || part.upper_closed();
          }
        }
        cur = ExtendedInterval::make(cur.lower(), hi, cur.lower_closed(), hi_closed);
        continue;
      }
    }
    merged.push_back(std::move(part));
  }
  return merged;
}

}  // namespace upq
