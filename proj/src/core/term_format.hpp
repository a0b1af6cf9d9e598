#pragma once

#include <string>

#include "virmod/core/rational.hpp"

namespace virmod::detail {

// Appends one signed term "c mono" to a sum being printed.
inline void append_term(std::string& out, const Rational& c, const std::string& mono, bool first,
                        bool space_before_mono) {
  Rational a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += a.get_str();
    return;
  }
  if (a != 1) {
    out += a.get_str();
    if (space_before_mono || a.get_den() != 1) out += " ";
  }
  out += mono;
}

}  // namespace virmod::detail
