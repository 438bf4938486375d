#ifndef VNUM_LIMITS_HPP
#define VNUM_LIMITS_HPP

#include <cstddef>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "vnum/error.hpp"

namespace vnum {

/// Size caps for the exhaustive routines. Defaults can be overridden through
/// environment variables (VNUM_MAX_CUTSET_VERTICES, VNUM_MAX_CLOSED_SEARCH,
/// VNUM_MAX_EXHAUSTIVE_VERTICES, VNUM_MAX_GRADED_DIM, VNUM_MAX_REG_VARIABLES,
/// VNUM_MAX_PATH_VERTICES).
struct Limits {
  int max_cutset_vertices = 16;
  int max_closed_search = 9;
  int max_exhaustive_vertices = 24;
  std::size_t max_graded_dim = 200000;
  int max_reg_variables = 20;
  int max_path_vertices = 32;

  static Limits from_environment() {
    Limits lim;
    auto read = [](const char* name, auto& field) {
      if (const char* value = std::getenv(name)) {
        char* end = nullptr;
        long long parsed = std::strtoll(value, &end, 10);
        if (end == value || *end != '\0' || parsed <= 0) {
          throw InvalidArgument(std::string("bad value for ") + name + ": " + value);
        }
        field = static_cast<std::remove_reference_t<decltype(field)>>(parsed);
      }
    };
    read("VNUM_MAX_CUTSET_VERTICES", lim.max_cutset_vertices);
    read("VNUM_MAX_CLOSED_SEARCH", lim.max_closed_search);
    read("VNUM_MAX_EXHAUSTIVE_VERTICES", lim.max_exhaustive_vertices);
    read("VNUM_MAX_GRADED_DIM", lim.max_graded_dim);
    read("VNUM_MAX_REG_VARIABLES", lim.max_reg_variables);
    read("VNUM_MAX_PATH_VERTICES", lim.max_path_vertices);
    return lim;
  }
};

inline const Limits& default_limits() {
  static const Limits lim = Limits::from_environment();
  return lim;
}

}  // namespace vnum

#endif  // VNUM_LIMITS_HPP
