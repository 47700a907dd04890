#pragma once

#include <stdexcept>
#include <string>

namespace rotamap {

enum class errc {
  degree_mismatch,
  parse,
  not_bijection,
  label_range,
  odd_degree,
  not_graphical,
  not_normalized,
  knot_mismatch,
  orient_length,
  factorization,
  no_such_vertex,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::degree_mismatch: return "E_DEGREE_MISMATCH";
    case errc::parse:           return "E_PARSE";
    case errc::not_bijection:   return "E_NOT_BIJECTION";
    case errc::label_range:     return "E_LABEL_RANGE";
    case errc::odd_degree:      return "E_ODD_DEGREE";
    case errc::not_graphical:   return "E_NOT_GRAPHICAL";
    case errc::not_normalized:  return "E_NOT_NORMALIZED";
    case errc::knot_mismatch:   return "E_KNOT_MISMATCH";
    case errc::orient_length:   return "E_ORIENT_LEN";
    case errc::factorization:   return "E_FACTORIZATION";
    case errc::no_such_vertex:  return "E_NO_SUCH_VERTEX";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace rotamap
