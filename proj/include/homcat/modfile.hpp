#pragma once

#include <iosfwd>
#include <string>

#include "homcat/grmodule.hpp"

namespace homcat {

/// Parses the module file format: a single object with "algebra", "window",
/// "dims" and "action" keys, rationals as "p" / "p/q" strings. The parsed
/// module must pass validate; violations raise input_error naming the first
/// offending relation and degree.
DegreewiseModule parse_module(const std::string& text);
DegreewiseModule load_module(const std::string& path);

/// Parse without the validation gate (the `validate` command reports
/// violations itself instead of rejecting the file outright).
DegreewiseModule parse_module_raw(const std::string& text);
DegreewiseModule load_module_raw(const std::string& path);

/// Bit-exact serialization; parsing the output reproduces the module.
std::string serialize_module(const DegreewiseModule& m);

/// Extension-class files: {"extension": {"source": ..., "target": ...,
/// "cocycle": {var: {degree: matrix}}}}.
ExtensionClass parse_extension(const std::string& text);
ExtensionClass load_extension(const std::string& path);
std::string serialize_extension(const ExtensionClass& e);

}  // namespace homcat
