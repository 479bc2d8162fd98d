#include "streamsum/lexicon.hpp"

#include <cctype>

namespace streamsum {

namespace {

bool is_word_byte(unsigned char c) {
    // non-ASCII bytes are treated as word characters (UTF-8 passthrough)
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

std::size_t codepoints(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text, int min_len) {
    std::vector<std::string> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        unsigned char c = text[i];
        // URLs: skip from "http" to the next whitespace
        if (text.compare(i, 7, "http://") == 0 || text.compare(i, 8, "https://") == 0) {
            while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            continue;
        }
        // @-mentions: skip the whole handle
        if (c == '@') {
            ++i;
            while (i < n && is_word_byte(text[i])) ++i;
            continue;
        }
        if (!is_word_byte(c) && c != '#') {
            ++i;
            continue;
        }
        if (c == '#') ++i;  // keep hashtag body
        std::string tok;
        while (i < n && is_word_byte(text[i])) {
            unsigned char b = text[i];
            tok.push_back(b < 0x80 ? static_cast<char>(std::tolower(b)) : text[i]);
            ++i;
        }
        if (tok.empty()) continue;
        if (tok == "rt") continue;
        if (codepoints(tok) < static_cast<std::size_t>(min_len)) continue;
        out.push_back(std::move(tok));
    }
    return out;
}

}  // namespace streamsum
