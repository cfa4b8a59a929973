#include <algorithm>
#include <cstdlib>
#include <set>

#include "unipy/error.hpp"
#include "unipy/langpack.hpp"

namespace unipy::langpack {

namespace {

bool looks_like_path(std::string_view s) {
    return s.find('/') != std::string_view::npos || s.ends_with(".yaml") || s.ends_with(".yml");
}

std::optional<std::filesystem::path> packs_dir_file(std::string_view code) {
    const char* dir = std::getenv("UNIPY_PACKS");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    for (const char* ext : {".yaml", ".yml"}) {
        std::filesystem::path candidate = std::filesystem::path(dir) / (std::string(code) + ext);
        std::error_code ec;
        if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
    }
    return std::nullopt;
}

template <typename Loader, typename TextLoader>
LanguagePack resolve_with(std::string_view code_or_path, Loader load_file, TextLoader load_text) {
    std::error_code ec;
    const std::filesystem::path as_path{std::string(code_or_path)};
    if (std::filesystem::is_regular_file(as_path, ec)) return load_file(as_path);
    if (looks_like_path(code_or_path)) {
        throw PackError(PackError::Kind::NotFound, "language pack file not found: " + std::string(code_or_path));
    }
    if (auto file = packs_dir_file(code_or_path)) return load_file(*file);
    for (const auto& b : bundled_packs()) {
        if (b.code == code_or_path) return load_text(b.yaml, "<bundled:" + std::string(b.code) + ">");
    }
    std::string known;
    for (const auto& c : available_pack_codes()) known += (known.empty() ? "" : ", ") + c;
    throw PackError(PackError::Kind::NotFound,
                    "unknown language \"" + std::string(code_or_path) + "\" (available: " + known + ")");
}

}  // namespace

LanguagePack resolve_pack(std::string_view code_or_path) {
    return resolve_with(
        code_or_path, [](const std::filesystem::path& p) { return load_pack(p); },
        [](std::string_view text, const std::string& origin) { return load_pack_text(text, origin); });
}

LanguagePack resolve_pack_unchecked(std::string_view code_or_path) {
    return resolve_with(
        code_or_path, [](const std::filesystem::path& p) { return parse_pack(p); },
        [](std::string_view text, const std::string& origin) { return parse_pack_text(text, origin); });
}

std::vector<std::string> available_pack_codes() {
    std::set<std::string> codes;
    for (const auto& b : bundled_packs()) codes.insert(std::string(b.code));
    if (const char* dir = std::getenv("UNIPY_PACKS"); dir != nullptr && *dir != '\0') {
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
            const auto ext = entry.path().extension();
            if (entry.is_regular_file() && (ext == ".yaml" || ext == ".yml")) {
                codes.insert(entry.path().stem().string());
            }
        }
    }
    return {codes.begin(), codes.end()};
}

}  // namespace unipy::langpack
