#include "mbl/windowing.hpp"

#include <fstream>
#include <ostream>

#include "mbl/util.hpp"

namespace mbl {

std::vector<WordRecord> parse_lexicon(std::istream& in) {
    std::vector<WordRecord> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line.front() == '#') continue;

        const std::string where = "line " + std::to_string(line_no) + ": ";
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw Error(where + "missing tab between word and labels");
        const std::string_view word_text = std::string_view(line).substr(0, tab);
        if (word_text.empty()) throw Error(where + "empty word");

        WordRecord rec;
        try {
            rec.letters = utf8_decode(word_text);
        } catch (const Error& e) {
            throw Error(where + e.what());
        }
        if (rec.letters.find(kPadding) != std::u32string::npos) {
            throw Error(where + "word contains the padding symbol '_'");
        }
        for (auto label : split(std::string_view(line).substr(tab + 1), ' ')) {
            label = trim(label);
            if (!label.empty()) rec.labels.emplace_back(label);
        }
        if (rec.labels.size() != rec.letters.size()) {
            throw Error(where + std::to_string(rec.letters.size()) + " letters but " +
                        std::to_string(rec.labels.size()) + " labels");
        }
        rec.word_id = words.size();
        words.push_back(std::move(rec));
    }
    return words;
}

std::vector<WordRecord> load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open lexicon " + path);
    return parse_lexicon(in);
}

void write_lexicon(std::ostream& out, std::span<const WordRecord> words) {
    for (const auto& w : words) {
        out << utf8_encode(w.letters) << '\t';
        for (std::size_t i = 0; i < w.labels.size(); ++i) {
            if (i > 0) out << ' ';
            out << w.labels[i];
        }
        out << '\n';
    }
}

std::vector<InstanceToken> generate_windows(const WordRecord& word, std::size_t width) {
    if (width == 0 || width % 2 == 0) {
        throw Error("window width must be odd and positive, got " + std::to_string(width));
    }
    if (word.labels.size() != word.letters.size()) {
        throw Error("word " + std::to_string(word.word_id) + ": letters and labels differ in length");
    }
    const auto half = static_cast<std::ptrdiff_t>(width / 2);
    const auto len = static_cast<std::ptrdiff_t>(word.letters.size());
    std::vector<InstanceToken> tokens;
    tokens.reserve(word.letters.size());
    for (std::ptrdiff_t focus = 0; focus < len; ++focus) {
        InstanceToken tok;
        tok.features.reserve(width);
        for (std::ptrdiff_t k = focus - half; k <= focus + half; ++k) {
            tok.features.push_back(k < 0 || k >= len ? kPadding : word.letters[k]);
        }
        tok.label = word.labels[focus];
        tok.word_id = word.word_id;
        tok.position = static_cast<std::size_t>(focus);
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

std::vector<InstanceToken> generate_windows(std::span<const WordRecord> words, std::size_t width) {
    std::vector<InstanceToken> tokens;
    for (const auto& w : words) {
        auto part = generate_windows(w, width);
        tokens.insert(tokens.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return tokens;
}

}  // namespace mbl
