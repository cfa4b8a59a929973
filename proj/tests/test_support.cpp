#include "test_support.hpp"

#include <algorithm>
#include <array>

namespace unipy::testing {

std::filesystem::path source_dir() { return UNIPY_SOURCE_DIR; }
std::filesystem::path corpus_dir() { return UNIPY_CORPUS_DIR; }
std::filesystem::path fixtures_dir() { return UNIPY_FIXTURES_DIR; }
std::filesystem::path fixture(std::string_view relative) { return fixtures_dir() / relative; }
std::filesystem::path unipy_binary() { return UNIPY_BIN; }

std::vector<std::filesystem::path> corpus_programs() {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(corpus_dir())) {
        if (entry.is_regular_file() && entry.path().extension() == ".py") out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

process::Result run_cli(const std::vector<std::string>& args, std::optional<std::string> stdin_data) {
    process::Spec spec;
    spec.argv.push_back(unipy_binary().string());
    spec.argv.insert(spec.argv.end(), args.begin(), args.end());
    spec.stdin_data = std::move(stdin_data);
    return process::run(spec);
}

std::size_t count_lines(std::string_view text) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') ++n;
        else if (text[i] == '\r' && (i + 1 == text.size() || text[i + 1] != '\n')) ++n;
    }
    return n;
}

std::string SourceFuzzer::next(std::size_t max_pieces) {
    static constexpr std::array<std::string_view, 48> kPool = {
        "x", "total", "_tmp", "print", "if", "else", "is", " ", "  ", "\t", "\n", "\r\n", "\r",
        "(", ")", ":", "==", "=", "+", ",", ".", "**", "->", "0", "42", "3.5", "0x1F", "1e-3",
        "'", "\"", "'''", "\\", "#", "# note", "f'", "r\"",
        "اگر", "لکھو", "ورنہ", "کچھ", "جب تک", "۔", "،", "۲۰۲۵", "١٢", "अगर", "\xff", "\xd9",
    };
    std::uniform_int_distribution<std::size_t> len(0, max_pieces);
    std::uniform_int_distribution<std::size_t> pick(0, kPool.size() - 1);
    std::string out;
    for (std::size_t i = len(rng_); i > 0; --i) out += kPool[pick(rng_)];
    return out;
}

}  // namespace unipy::testing
