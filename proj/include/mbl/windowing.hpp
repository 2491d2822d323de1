#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

#include "mbl/instance_model.hpp"

namespace mbl {

/// One lexicon entry: letters aligned one-to-one with class labels. Silent
/// letters carry a null-phoneme label such as "/-/0".
struct WordRecord {
    std::u32string letters;
    std::vector<ClassLabel> labels;
    std::size_t word_id = 0;
};

/// Reads `<word>\t<label> <label> ...` lines. '#' comments and blank lines
/// are skipped; word_id counts data lines from 0.
std::vector<WordRecord> parse_lexicon(std::istream& in);
std::vector<WordRecord> load_lexicon(const std::string& path);

void write_lexicon(std::ostream& out, std::span<const WordRecord> words);

/// One token per letter, focus letter centred, `_` beyond the word edges.
std::vector<InstanceToken> generate_windows(const WordRecord& word, std::size_t width);

/// Windows every word in order (word order, then position).
std::vector<InstanceToken> generate_windows(std::span<const WordRecord> words, std::size_t width);

}  // namespace mbl
