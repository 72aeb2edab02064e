#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

enum class Errc {
  invalid_parameter,
  invalid_presentation,
  invalid_element,
  not_a_subgroup,
  not_normal,
  cap_exceeded,
  internal_inconsistency,
  syntax_error,
  unknown_atom,
  malformed_parameter,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Descriptor parse failure carrying the byte offset where parsing stopped
/// and the tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, std::vector<std::string> expected,
             const std::string& what)
      : Error(code, what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace cyclo
