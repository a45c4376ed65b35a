#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "msop/mssc.hpp"
#include "msop/orsched.hpp"
#include "msop/rof.hpp"
#include "msop/table.hpp"
#include "msop/xsearch.hpp"

namespace msop {

using TypedInstance = std::variant<MsscInstance, OrDag, ReadOnceFormula, SearchGraph, TableInstance>;

/// "mssc", "orsched", "rof", "xsearch" or "table": the header keyword.
std::string_view kind_name(const TypedInstance& instance);

/// Reads one instance. Line-oriented, '#' starts a comment, the first record
/// is the header `msop <kind> v1`. Throws ParseError (with line and column)
/// on malformed text and Error(kValidationError) when the parsed instance
/// breaks an invariant.
TypedInstance parse_instance(std::istream& in);
TypedInstance parse_instance(std::string_view text);
TypedInstance read_instance_file(const std::string& path);

/// Canonical text; parse_instance(serialize(x)) is equal to x.
std::string serialize(const TypedInstance& instance);

}  // namespace msop
