// The worked examples shipped under data/, loaded once per test binary.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ctxdrt/projection.hpp"
#include "ctxdrt/text.hpp"

namespace ctxdrt::testing {

inline std::string data_path(const std::string& name) { return std::string(CTXDRT_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Drs every_man() { return parse_drs(slurp("every_man.drs")); }
inline Drs every_husband() { return parse_drs(slurp("every_husband.drs")); }
inline Drs hank() { return parse_drs(slurp("hank.drs")); }

inline BackgroundTheory marriage() { return BackgroundTheory{parse_drs_list(slurp("marriage.bg"))}; }

inline const char* kHankFormula =
    "in([x | hank(x), married(x)], [u | wife(u), of(u,x)] & in([y | man(y)], [u | wife(u), of(u,x)] | "
    "[u | wife(u), of(u,y)]))";

}  // namespace ctxdrt::testing
