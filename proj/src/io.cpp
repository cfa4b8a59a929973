#include "unipy/io.hpp"

#include <fstream>
#include <sstream>

#include "unipy/error.hpp"

namespace unipy::io {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("cannot write " + path.string());
}

bool strip_bom(std::string& text) {
    if (!text.starts_with(kUtf8Bom)) return false;
    text.erase(0, kUtf8Bom.size());
    return true;
}

}  // namespace unipy::io
