#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revhash
{

/* Base for every error raised by the library. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/* Malformed or inconsistent user input: bad files, arity mismatches. */
class input_error : public error
{
public:
  using error::error;
};

/* An operation would exceed a configured size budget. */
class resource_error : public error
{
public:
  using error::error;
};

enum class parse_error_kind
{
  lexical,
  structural,
  row_length
};

class parse_error : public input_error
{
public:
  parse_error( parse_error_kind kind, std::size_t line, std::string const& message );

  parse_error_kind kind() const noexcept { return kind_; }
  /* 1-based line number, 0 when the error is not tied to a line. */
  std::size_t line() const noexcept { return line_; }

private:
  parse_error_kind kind_;
  std::size_t line_;
};

} // namespace revhash
