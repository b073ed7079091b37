#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

#include "endok/resolution.hpp"

namespace endok {

/// A three-valued answer with its evidence. `degree`/`value` carry a
/// numeric witness (for example the first nonvanishing Tor degree and its
/// dimension); `bound` records the search limit behind an Unknown.
struct Verdict {
  Certified status = Certified::Unknown;
  std::string reason;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> value;
  std::size_t bound = 0;

  static Verdict yes(std::string why) { return {Certified::Yes, std::move(why), {}, {}, 0}; }
  static Verdict no(std::string why) { return {Certified::No, std::move(why), {}, {}, 0}; }
  static Verdict unknown(std::string why, std::size_t bound) {
    return {Certified::Unknown, std::move(why), {}, {}, bound};
  }
  static Verdict of(bool b, std::string why) { return b ? yes(std::move(why)) : no(std::move(why)); }

  bool is_yes() const { return status == Certified::Yes; }
  bool is_no() const { return status == Certified::No; }
  bool decided() const { return status != Certified::Unknown; }

  std::string str() const {
    std::string s = to_string(status);
    if (status == Certified::Unknown) s += "(" + std::to_string(bound) + ")";
    if (degree) s += " [j=" + std::to_string(*degree) + (value ? ", dim=" + std::to_string(*value) : "") + "]";
    return s;
  }
};

/// Yes if all are Yes, No if any is No, Unknown otherwise.
inline Verdict conjunction(std::initializer_list<const Verdict*> parts, std::string why) {
  bool unknown = false;
  std::size_t bound = 0;
  for (const Verdict* v : parts) {
    if (v->is_no()) return Verdict::no(why + ": " + v->reason);
    if (!v->is_yes()) {
      unknown = true;
      bound = std::max(bound, v->bound);
    }
  }
  return unknown ? Verdict::unknown(std::move(why), bound) : Verdict::yes(std::move(why));
}

}  // namespace endok
