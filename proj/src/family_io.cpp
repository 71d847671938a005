#include "hfam/family_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace hfam {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

long long parse_int(const std::string& tok, int line, const char* what) {
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || tok.empty()) {
        throw parse_error(std::string("invalid ") + what + " '" + tok + "'", line);
    }
    return value;
}

Word parse_set_line(const std::string& line, const GroundSet& ground, int line_no) {
    if (line.front() == '{') {
        if (line.back() != '}') throw parse_error("unterminated set", line_no);
        const std::string body = trimmed(line.substr(1, line.size() - 2));
        Word a = 0;
        if (!body.empty()) {
            std::stringstream items(body);
            std::string tok;
            int prev = 0;
            while (std::getline(items, tok, ',')) {
                const long long e = parse_int(trimmed(tok), line_no, "element");
                if (e < 1 || e > ground.n) {
                    throw parse_error("element " + std::to_string(e) + " outside ground set [1, " +
                                          std::to_string(ground.n) + "]",
                                      line_no);
                }
                if (e <= prev) throw parse_error("elements must be strictly ascending", line_no);
                prev = static_cast<int>(e);
                a |= Word{1} << (e - 1);
            }
        }
        return a;
    }

    // Bare hex word.
    unsigned long value = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value, 16);
    if (ec != std::errc{} || ptr != last) throw parse_error("invalid set line '" + line + "'", line_no);
    if (value > full_word(ground.n)) throw parse_error("set word out of range", line_no);
    return static_cast<Word>(value);
}

}  // namespace

SetFamily read_family(std::istream& in, const ParseOptions& opts) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    bool have_header = false;
    int n = 0;
    std::vector<Word> words;
    std::map<Word, int> first_seen;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trimmed(line);
        if (t.empty()) continue;
        if (!have_header) {
            if (t.rfind("n=", 0) != 0) throw parse_error("expected 'n=<int>' header", line_no);
            const long long value = parse_int(t.substr(2), line_no, "ground set size");
            if (value < 1 || value > kMaxGroundSize) {
                throw parse_error("ground set size must be in [1, " +
                                      std::to_string(kMaxGroundSize) + "]",
                                  line_no);
            }
            n = static_cast<int>(value);
            have_header = true;
            header_line = line_no;
            continue;
        }
        const Word a = parse_set_line(t, GroundSet(n), line_no);
        const auto [it, fresh] = first_seen.emplace(a, line_no);
        if (!fresh && opts.strict) {
            throw parse_error("duplicate set (first at line " + std::to_string(it->second) + ")",
                              line_no);
        }
        words.push_back(a);
    }
    if (!have_header) throw parse_error("missing 'n=<int>' header", line_no);
    (void)header_line;
    return SetFamily(GroundSet(n), std::move(words));
}

SetFamily parse_family(const std::string& text, const ParseOptions& opts) {
    std::istringstream in(text);
    return read_family(in, opts);
}

void write_family(std::ostream& out, const SetFamily& family, bool hex) {
    out << "n=" << family.n() << '\n';
    for (Word m : family) {
        if (hex) {
            std::ostringstream word;
            word << std::hex << m;
            out << word.str() << '\n';
        } else {
            out << set_to_string(m) << '\n';
        }
    }
}

std::string family_to_text(const SetFamily& family, bool hex) {
    std::ostringstream out;
    write_family(out, family, hex);
    return out.str();
}

std::string family_to_compact(const SetFamily& family) {
    std::ostringstream out;
    out << "n=" << family.n() << ';' << std::hex;
    bool first = true;
    for (Word m : family) {
        if (!first) out << ',';
        out << m;
        first = false;
    }
    return out.str();
}

SetFamily family_from_compact(const std::string& text) {
    const auto sep = text.find(';');
    if (sep == std::string::npos || text.rfind("n=", 0) != 0) {
        throw parse_error("invalid compact family encoding '" + text + "'");
    }
    const long long n = parse_int(text.substr(2, sep - 2), 0, "ground set size");
    if (n < 1 || n > kMaxGroundSize) throw parse_error("ground set size out of range");
    const GroundSet ground(static_cast<int>(n));

    std::vector<Word> words;
    std::stringstream items(text.substr(sep + 1));
    std::string tok;
    while (std::getline(items, tok, ',')) {
        tok = trimmed(tok);
        if (tok.empty()) continue;
        unsigned long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, 16);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw parse_error("invalid compact word '" + tok + "'");
        }
        if (value > full_word(ground.n)) throw parse_error("set word out of range");
        words.push_back(static_cast<Word>(value));
    }
    return SetFamily(ground, std::move(words));
}

}  // namespace hfam
