#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "covsim/term_lang.hpp"

namespace covsim::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(COVSIM_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// The vending machines, plus "0" compiled as an extra term.
inline SystemFile vending() {
  const std::vector<std::string> extra{"0"};
  return parse_system_file(read_data("vending.proc"), extra);
}

/// a/b/c offers (all bivariant), plus a few extra terms.
inline SystemFile offers() { return parse_system_file(read_data("offers.proc")); }

inline StateId state(const SystemFile& file, const std::string& name) {
  if (auto s = file.find(name)) return *s;
  if (auto s = file.lts.find(name)) return *s;
  throw std::runtime_error("no state " + name);
}

}  // namespace covsim::testing
