#pragma once

#include "paginator/text.hpp"
#include "paginator/types.hpp"

namespace paginator {

inline constexpr double kDefaultTwentyPercentFraction = 0.20;

// Content-agnostic breaks. `kind` must be one of the four baseline methods
// (UsageError otherwise); the article needs at least one sentence.
//
// TwentyPercent picks the first paragraph-final sentence whose cumulative
// character count reaches `fraction` of the article total. Character counts
// are per sentence, so whitespace between sentences and paragraphs is not
// counted.
BreakPoint predict_baseline(const PreparedArticle& article, Method kind,
                            double fraction = kDefaultTwentyPercentFraction);

}  // namespace paginator
