#pragma once

#include <string_view>

namespace mpart::detail {

// Contents of data/, compiled in at configure time.
std::string_view frozen_family_text(int index);
std::string_view frozen_strict_split_catalog_text();
std::string_view frozen_strict_split_certificate_text();

}  // namespace mpart::detail
