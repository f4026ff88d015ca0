#ifndef MBG_PATTERN_IO_HPP
#define MBG_PATTERN_IO_HPP

#include <string>

#include "mbg/cover.hpp"
#include "mbg/pattern.hpp"

namespace mbg {

/// JSON schema: {dim, r, R, window_radius, points: [[x1..xd],...]} with an
/// optional match_tol field.
Pattern load_pattern_json(const std::string& path);
void save_pattern_json(const Pattern& p, const std::string& path);

/// CSV alternative: one point per row. (r, R, window metadata go in a
/// "# dim r R window_radius" comment header.)
Pattern load_pattern_csv(const std::string& path);
void save_pattern_csv(const Pattern& p, const std::string& path);

/// Dispatch on the file extension (.json / .csv).
Pattern load_pattern(const std::string& path);
void save_pattern(const Pattern& p, const std::string& path);

/// OrderedConfig JSON: {pattern_file, subset: [indices], order: [indices]}.
/// Loading pulls in the referenced pattern file.
OrderedConfig load_config_json(const std::string& path);
void save_config_json(const OrderedConfig& cfg, const std::string& pattern_file,
                      const std::string& path);

}  // namespace mbg

#endif
