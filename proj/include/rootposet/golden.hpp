#pragma once

#include <optional>
#include <string>

#include "rootposet/root_system.hpp"

namespace rootposet::golden {

// Frozen expected renderings for the table checks. The exceptional-type
// tables are literal; the classical series are produced from the closed
// forms in epsilon coordinates by the independent dictionary below, so they
// never touch the Cartan-closure machinery they are checked against.
// Returns nullopt when no golden data exists for the given system.

std::optional<std::string> glorious_expected(const RootSystemSpec& spec);
std::optional<std::string> minmax_expected(const RootSystemSpec& spec);
std::optional<std::string> semi_glorious_expected(const RootSystemSpec& spec);
std::optional<std::string> tails_expected(const RootSystemSpec& spec);
std::optional<std::string> transitions_expected(const RootSystemSpec& spec);

// epsilon-coordinate dictionaries for the classical series, as plain index
// arithmetic on coefficient vectors.
Coeffs d_eps_minus(int n, int i, int j);  // eps_i - eps_j in D_n
Coeffs d_eps_plus(int n, int i, int j);   // eps_i + eps_j in D_n
Coeffs b_eps_minus(int n, int i, int j);  // eps_i - eps_j in B_n (eps_{n+1} = 0)
Coeffs b_eps_plus(int n, int i, int j);   // eps_i + eps_j in B_n
Coeffs c_eps_minus(int n, int i, int j);  // eps_i - eps_j in C_n
Coeffs c_eps_plus(int n, int i, int j);   // eps_i + eps_j in C_n (j = n only)

}  // namespace rootposet::golden
