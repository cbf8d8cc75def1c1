#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "core/game.hpp"
#include "core/io.hpp"

namespace aug::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline AugmentedGame load_fixture(const std::string& name) {
  return to_augmented(parse_game(read_file(std::string(FIXTURE_DIR) + "/" + name)));
}

inline std::string fixture_text(const std::string& name) {
  return read_file(std::string(FIXTURE_DIR) + "/" + name);
}

// Fig. 2: the request-grant game, specification <>g, live edge (r,g).
inline AugmentedGame fig2(bool with_live_edge) {
  return load_fixture(with_live_edge ? "fig2.game" : "fig2-noassume.game");
}

// Fig. 3: two-grant specification product with live group {e1, e2}.
inline AugmentedGame fig3() { return load_fixture("fig3.game"); }

// Synthetic persistent-group game: W0 = {s, q, t}.
inline AugmentedGame pers1() { return load_fixture("pers1.game"); }

}  // namespace aug::test
