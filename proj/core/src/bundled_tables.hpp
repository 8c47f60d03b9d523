#pragma once

#include <span>
#include <string_view>

namespace tworoot::detail {

struct BundledTable {
  std::string_view name;
  std::string_view text;
};

// Defined in a source generated at configure time from data/*.tbl.
extern const std::span<const BundledTable> kBundledTables;

}  // namespace tworoot::detail
