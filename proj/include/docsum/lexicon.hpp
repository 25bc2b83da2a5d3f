#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docsum {

enum class Lang { uk, en };

std::string_view to_string(Lang lang) noexcept;
std::optional<Lang> parse_lang(std::string_view tag) noexcept;

namespace lexicon {

// Embedded defaults, in the same order the dump command prints them.
const std::vector<std::string>& default_cues();
const std::vector<std::string>& default_stopwords(Lang lang);
const std::vector<std::string>& default_abbreviations(Lang lang);

// One entry per line; blank lines and lines starting with '#' are skipped,
// entries are trimmed.
std::vector<std::string> parse_line_list(std::string_view content);
std::vector<std::string> load_line_list(const std::filesystem::path& path);

std::string format_line_list(const std::vector<std::string>& entries, std::string_view header);

}  // namespace lexicon

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace docsum
