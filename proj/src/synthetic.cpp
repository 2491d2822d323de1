#include "mbl/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mbl/random.hpp"
#include "mbl/util.hpp"

namespace mbl {

namespace {

constexpr std::string_view kConsonants = "bcdfghklmnprstvwz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::string_view kClusters[] = {"ch", "sh", "th", "st", "br", "pl", "tr", "gr"};
constexpr std::string_view kIrregular[] = {"@", "U", "O", "3:", "aI", "eI"};

bool is_vowel(char c) { return kVowels.find(c) != std::string_view::npos; }
bool is_consonant(char c) { return c != 0 && !is_vowel(c); }

struct Morpheme {
    std::string letters;
    std::size_t irregular_at = std::string::npos;  // offset of an irregular vowel
    std::string irregular_phoneme;
    bool attracts_stress = false;
};

Morpheme make_morpheme(Rng& rng, double irregular_rate) {
    Morpheme m;
    const std::size_t syllables = 1 + rng.below(2);
    for (std::size_t s = 0; s < syllables; ++s) {
        switch (rng.below(6)) {
            case 0: break;  // vowel-initial
            case 1: m.letters += kClusters[rng.below(std::size(kClusters))]; break;
            default: m.letters += kConsonants[rng.below(kConsonants.size())]; break;
        }
        m.letters += kVowels[rng.below(kVowels.size())];
        if (rng.chance(0.2)) m.letters += kVowels[rng.below(kVowels.size())];
        if (rng.chance(0.45)) {
            const char c = kConsonants[rng.below(kConsonants.size())];
            m.letters += c;
            if (rng.chance(0.15)) m.letters += c;
        }
    }
    if (rng.chance(irregular_rate)) {
        std::vector<std::size_t> vowels;
        for (std::size_t i = 0; i < m.letters.size(); ++i) {
            if (is_vowel(m.letters[i])) vowels.push_back(i);
        }
        m.irregular_at = vowels[rng.below(vowels.size())];
        m.irregular_phoneme = kIrregular[rng.below(std::size(kIrregular))];
    }
    m.attracts_stress = rng.chance(0.1);
    return m;
}

std::string phoneme_at(const std::string& w, std::size_t i) {
    auto at = [&](std::size_t k) -> char { return k < w.size() ? w[k] : 0; };
    const char c = w[i];
    const char prev = i > 0 ? w[i - 1] : 0;
    const char next = at(i + 1);
    const char next2 = at(i + 2);

    if (c == 'h' && (prev == 'c' || prev == 's' || prev == 't')) return "-";
    if (is_consonant(c) && prev == c) return "-";
    if (c == 'e' && i + 1 == w.size() && w.size() > 2) return "-";
    if (is_vowel(c)) {
        if (is_vowel(prev)) return "-";
        if (is_vowel(next)) return std::string{c, next};
        const bool open = next == 0 || (is_consonant(next) && is_vowel(next2));
        return open ? std::string{c, ':'} : std::string{c};
    }
    switch (c) {
        case 'c':
            if (next == 'h') return "tS";
            return (next == 'e' || next == 'i') ? "s" : "k";
        case 's': return next == 'h' ? "S" : "s";
        case 't': return next == 'h' ? "T" : "t";
        case 'g': return (next == 'e' || next == 'i') ? "dZ" : "g";
        default: return std::string{c};
    }
}

WordRecord make_word(const std::vector<const Morpheme*>& parts) {
    std::string w;
    std::vector<std::size_t> starts;
    for (const auto* m : parts) {
        starts.push_back(w.size());
        w += m->letters;
    }
    std::size_t stressed = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k]->attracts_stress) stressed = k;
    }
    std::vector<std::string> phonemes(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) phonemes[i] = phoneme_at(w, i);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto* m = parts[k];
        if (m->irregular_at != std::string::npos && phonemes[starts[k] + m->irregular_at] != "-") {
            phonemes[starts[k] + m->irregular_at] = m->irregular_phoneme;
        }
    }
    WordRecord rec;
    for (std::size_t i = 0; i < w.size(); ++i) {
        rec.letters.push_back(static_cast<char32_t>(w[i]));
        const char stress = i == starts[stressed] ? '1' : '0';
        rec.labels.push_back("/" + phonemes[i] + "/" + stress);
    }
    return rec;
}

}  // namespace

std::vector<WordRecord> synthetic_lexicon(const SyntheticConfig& config) {
    if (config.words == 0) throw Error("synthetic lexicon needs at least one word");
    if (config.morphemes == 0) throw Error("synthetic lexicon needs at least one morpheme");
    if (!(config.ambiguity_rate >= 0.0 && config.ambiguity_rate < 1.0)) {
        throw Error("ambiguity rate must lie in [0,1)");
    }
    Rng rng(config.seed);
    std::vector<Morpheme> inventory;
    inventory.reserve(config.morphemes);
    for (std::size_t i = 0; i < config.morphemes; ++i) {
        inventory.push_back(make_morpheme(rng, config.irregular_rate));
    }
    // Zipf-like weights, exponent 0.9.
    std::vector<double> cumulative(inventory.size());
    double total = 0.0;
    for (std::size_t i = 0; i < inventory.size(); ++i) {
        total += 1.0 / std::pow(static_cast<double>(i + 1), 0.9);
        cumulative[i] = total;
    }
    auto pick = [&]() -> const Morpheme* {
        const double r = rng.unit() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        const auto idx = std::min<std::size_t>(it - cumulative.begin(), inventory.size() - 1);
        return &inventory[idx];
    };

    const auto variants = static_cast<std::size_t>(
        std::llround(config.ambiguity_rate * static_cast<double>(config.words)));
    const std::size_t regular = config.words - variants;
    if (regular == 0) throw Error("ambiguity rate leaves no regular words");

    std::vector<WordRecord> words;
    words.reserve(config.words);
    for (std::size_t i = 0; i < regular; ++i) {
        std::vector<const Morpheme*> parts(1 + rng.below(3));
        for (auto& p : parts) p = pick();
        words.push_back(make_word(parts));
    }
    for (std::size_t v = 0; v < variants; ++v) {
        WordRecord variant = words[rng.below(regular)];
        for (auto& label : variant.labels) {
            if (label.back() == '1') {
                label.back() = '2';
                break;
            }
        }
        words.push_back(std::move(variant));
    }
    for (std::size_t i = 0; i < words.size(); ++i) words[i].word_id = i;
    return words;
}

}  // namespace mbl
