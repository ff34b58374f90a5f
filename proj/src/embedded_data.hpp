#pragma once

#include <string_view>

namespace twobridge::embedded {

extern const std::string_view kPublishedTables;
extern const std::string_view kLinkTable;

}  // namespace twobridge::embedded
