#pragma once

#include <string>
#include <vector>

namespace cherx {

// Joins (coefficient, monomial-body) pairs into a sum. Composite coefficient
// strings (anything containing a space) are parenthesized whole so their
// internal signs survive; simple ones get the usual sign extraction.
std::string join_terms(const std::vector<std::pair<std::string, std::string>>& terms);

}  // namespace cherx
