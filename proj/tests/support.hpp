#pragma once

#include <string>

#include "fanplanar/io.hpp"

namespace test_support {

inline std::string data_path(const std::string& file) { return std::string(FANPLANAR_TEST_DATA_DIR) + "/" + file; }

inline fanplanar::Planarization load_fixture(const std::string& file) {
  return fanplanar::build_planarization(fanplanar::load_drawing(data_path(file)));
}

inline fanplanar::Planarization from_json(const std::string& text) {
  return fanplanar::build_planarization(fanplanar::parse_drawing(text));
}

}  // namespace test_support
