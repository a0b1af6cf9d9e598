#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "virmod/av/av_module.hpp"
#include "virmod/br/br_module.hpp"
#include "virmod/core/laurent_vec.hpp"
#include "virmod/core/poly.hpp"

namespace virmod {

/// Named definitions and defaults loaded from a module file.
struct Workbench {
  std::map<std::string, BrModuleDesc> br;
  std::map<std::string, std::string> modules;  // name -> module expression
  std::optional<int> window, dt_cap, dx_cap;
  bool json = false;
};

/// JSON module file:
///   {"br_modules": [{"name", "rank", "carrier", "ops", "window"?}],
///    "modules": [{"name", "expr"}],
///    "defaults": {"window", "dt_cap", "dx_cap", "format"}}
Workbench parse_workbench(std::string_view json_text);
Workbench load_workbench(const std::string& path);

/// Mgamma(g[,r]) | shift | broken_fixture | tensor(a,b) | density(r,top,a) |
/// random(seed[,max_rank]) | a name from the workbench.
BrModuleDesc parse_br_expr(std::string_view text, const Workbench& wb = {});

/// Omega(l,b) | A(a,b) | F(br, module) | a name from the workbench.
AVModulePtr parse_module_expr(std::string_view text, const Workbench& wb = {});

/// Sum of terms "c t^k" and "c h_m^n".
Poly parse_poly(std::string_view text);

/// Sum of terms "c x^n".
LaurentVec parse_laurent(std::string_view text);

/// Element of any module built from Omega, A and F; F terms read
/// "c v[i,...] (x) (inner element)".
Vec parse_element(const AVModule& module, std::string_view text);

}  // namespace virmod
