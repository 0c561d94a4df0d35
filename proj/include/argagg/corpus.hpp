#ifndef ARGAGG_CORPUS_HPP
#define ARGAGG_CORPUS_HPP

#include "argagg/error.hpp"
#include "argagg/framework.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace argagg {

struct CorpusEntry {
    std::string name;
    Framework framework;
    /// Leading `%` comment lines, comment marker stripped.
    std::string notes;
};

inline std::string read_text_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string leading_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        auto s = line.find_first_not_of(" \t\r");
        if (s == std::string::npos) continue;
        if (line[s] != '%') break;
        auto body = line.substr(s + 1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
        out += body + "\n";
    }
    return out;
}

inline CorpusEntry load_corpus_entry(const std::filesystem::path& p) {
    auto text = read_text_file(p);
    return {p.stem().string(), parse_framework(text), leading_comments(text)};
}

/// Every `*.apx` file in `dir`, ordered by file name.
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".apx") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const auto& f : files) out.push_back(load_corpus_entry(f));
    return out;
}

}  // namespace argagg

#endif
