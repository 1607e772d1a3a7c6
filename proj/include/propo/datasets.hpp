#pragma once

#include "propo/table.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace propo {

struct Dataset {
  std::string_view name;
  std::string_view text;
};

/// Tables compiled into the library from data/*.chev, in a fixed order:
/// case1_n3, case2, case5, p1 ... p5.
std::span<const Dataset> bundled_datasets();

std::optional<std::string_view> find_dataset(std::string_view name);

/// "bundled:NAME" selects a compiled-in table; anything else is a path.
ChevalleyTable load_input(const std::string& source);

}  // namespace propo
