#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace normsieve::cli {

// Runs one subcommand. args[0] is the program name. Returns 0 on success,
// 1 for validation and domain errors, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> parse_config(std::string_view text);

// "1000,10000" or "pow10:3-6".
std::vector<std::uint64_t> parse_grid(std::string_view text);

}  // namespace normsieve::cli
