#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotkit {

// Parse failure carrying the byte offset of the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace rotkit
