#pragma once

// Text and JSON renderings of results. JSON is compact with a fixed key order.

#include <string>
#include <vector>

#include "qw22/algebra.hpp"
#include "qw22/hopf.hpp"
#include "qw22/oscillator.hpp"
#include "qw22/suites.hpp"

namespace qw22 {

enum class OutputMode { text, json };

/// {"terms":[{"eq":int,"ep":int,"c":"int"}]}; "ep" only for two-variable
/// coefficients.
std::string format(const LaurentPoly& c, OutputMode mode);
/// {"terms":[{"coeff":{...},"t":int,"l":[[idx,mult]...],"w":[[idx,mult]...]}]}
std::string format(const Element& x, OutputMode mode);
/// As Element, with "slots":[{"t","l","w"},{"t","l","w"}] in place of t/l/w.
std::string format(const TensorElement& x, OutputMode mode);
/// As Element, with "coeff" a rational string such as "5/2".
std::string format(const NumericElement& x, OutputMode mode);
/// {"terms":[{"coeff":{...},"k":int,"eps":int}]}
std::string format(const ModuleVector& v, OutputMode mode);
/// One report; the wall time is left out so output is reproducible.
std::string format(const CheckReport& r, OutputMode mode);
/// Several reports: text blocks separated by blank lines, or a JSON array.
std::string format(const std::vector<CheckReport>& reports, OutputMode mode);

}  // namespace qw22
