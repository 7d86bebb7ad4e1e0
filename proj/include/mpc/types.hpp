#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpc {

using Letter = std::uint8_t;
using FiniteWord = std::vector<Letter>;

// Letters are written as single digits, so alphabets up to size 10 have a
// textual form.
FiniteWord word_from_string(std::string_view s);
std::string word_to_string(const FiniteWord& w);

// Errors with a contractual meaning.  The message text is stable and is
// surfaced verbatim by the CLI.
struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted() : std::runtime_error("precision exhausted") {}
};
struct HorizonExceeded : std::runtime_error {
  explicit HorizonExceeded(const std::string& what = "horizon exceeded")
      : std::runtime_error(what) {}
};
struct ValuationUndetermined : std::runtime_error {
  ValuationUndetermined()
      : std::runtime_error("valuation undetermined at truncation") {}
};
struct CapExceeded : std::runtime_error {
  CapExceeded() : std::runtime_error("cap exceeded") {}
};
struct InsufficientPrefix : std::invalid_argument {
  InsufficientPrefix() : std::invalid_argument("insufficient prefix") {}
};

}  // namespace mpc
