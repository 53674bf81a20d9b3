#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace idm {

using std::int32_t;
using std::int64_t;
using std::uint32_t;
using std::uint64_t;

/// Thrown when a build-time resource guard is exceeded (for example the
/// occurrence cap of the Count structure). Carries a structured message.
class build_limit_error : public std::runtime_error {
 public:
  build_limit_error(std::string what, int64_t limit, int64_t requested)
      : std::runtime_error(std::move(what)), limit(limit), requested(requested) {}
  int64_t limit;
  int64_t requested;
};

/// Half-open-free fragment reference into a text: 1-based, both ends
/// inclusive. The empty fragment at position p is (p, p-1).
struct Fragment {
  int32_t start = 1;
  int32_t end = 0;

  Fragment() = default;
  Fragment(int32_t s, int32_t e) : start(s), end(e) {}

  static Fragment empty_at(int32_t pos) { return Fragment(pos, pos - 1); }

  int32_t len() const { return end >= start ? end - start + 1 : 0; }
  bool empty() const { return end < start; }
  bool contains(const Fragment& other) const {
    return other.empty() || (start <= other.start && other.end <= end);
  }
  Fragment intersect(const Fragment& other) const {
    int32_t s = start > other.start ? start : other.start;
    int32_t e = end < other.end ? end : other.end;
    if (e < s) return empty_at(s);
    return Fragment(s, e);
  }
  bool operator==(const Fragment& other) const = default;
};

/// The indexed text. Letters are raw bytes; positions are 1-based.
class Text {
 public:
  Text() = default;
  explicit Text(std::string bytes) : bytes_(std::move(bytes)) {}

  int32_t n() const { return static_cast<int32_t>(bytes_.size()); }
  char at(int32_t pos) const { return bytes_[static_cast<size_t>(pos) - 1]; }
  std::string_view view() const { return bytes_; }
  std::string_view sub(Fragment f) const {
    if (f.empty()) return {};
    return std::string_view(bytes_).substr(static_cast<size_t>(f.start) - 1,
                                           static_cast<size_t>(f.len()));
  }
  bool in_range(Fragment f) const {
    if (f.empty()) return f.start >= 1 && f.start <= n() + 1;
    return f.start >= 1 && f.end <= n();
  }
  Text reversed() const {
    return Text(std::string(bytes_.rbegin(), bytes_.rend()));
  }

 private:
  std::string bytes_;
};

constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min();
constexpr int64_t kPosInf = std::numeric_limits<int64_t>::max();

/// Closed axis-aligned rectangle; use kNegInf/kPosInf for open sides.
struct Rect {
  int64_t x1 = kNegInf, x2 = kPosInf;
  int64_t y1 = kNegInf, y2 = kPosInf;

  bool degenerate() const { return x1 > x2 || y1 > y2; }
  Rect intersect(const Rect& o) const {
    return Rect{x1 > o.x1 ? x1 : o.x1, x2 < o.x2 ? x2 : o.x2,
                y1 > o.y1 ? y1 : o.y1, y2 < o.y2 ? y2 : o.y2};
  }
};

}  // namespace idm
