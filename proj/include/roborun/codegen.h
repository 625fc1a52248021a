#pragma once

// Human-facing renderings of a program. Both are read-only views; only the
// canonical language text (see dsl.h) parses back.

#include <optional>
#include <string>
#include <string_view>

#include "roborun/ast.h"

namespace roborun {

enum class RenderTarget { kPseudocode, kTouchDevelop };

std::optional<RenderTarget> TargetFromName(std::string_view name);
std::string_view TargetName(RenderTarget target);

// English sentences, four-space indentation, one line per statement plus an
// "otherwise" line for non-empty else branches.
//
//   repeat 4 times
//       go straight for 2 squares
std::string EmitPseudocode(const Program& program);

// TouchDevelop-shaped script wrapped in `action run_maze() { ... }`,
// two-space indentation. Repeat loops use i, i2, i3, ... by the number of
// enclosing repeats.
std::string EmitTouchDevelop(const Program& program);

std::string Emit(const Program& program, RenderTarget target);

}  // namespace roborun
