#pragma once

#include <string>

namespace qconc::app {

/// %.9g-style rendering with '.' as the decimal separator regardless of
/// locale; "inf", "-inf" and "nan" for non-finite values.
std::string format_sig9(double v);

}  // namespace qconc::app
