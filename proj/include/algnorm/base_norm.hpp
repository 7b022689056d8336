#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "algnorm/element.hpp"
#include "algnorm/scalar.hpp"

namespace algnorm {

enum class BaseNormTag { L1, L2, Sup };

std::string to_string(BaseNormTag tag);
std::optional<BaseNormTag> parse_base_norm(std::string_view text);

// l1: sum |a_k|, exact when every |a_k| is rational.
// l2: sqrt(sum |a_k|^2), with the exact square always attached.
// sup: max |a_k|, the maximizer found by exact squared comparison.
Magnitude base_norm(BaseNormTag tag, const Element& a);

}  // namespace algnorm
