#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mbl/windowing.hpp"

namespace mbl {

/// Parameters for a generated letter-aligned lexicon.
///
/// Words are built from a Zipf-weighted inventory of morphemes over a small
/// alphabet. Letters map to phonemes through context rules (vowel length,
/// soft c/g, silent doubled consonants and final e, h-digraphs) plus a few
/// morpheme-specific irregular vowels; the first letter of the stressed
/// morpheme carries stress 1, everything else 0. A fraction of the words is
/// repeated as a variant whose stressed letter carries secondary stress 2
/// instead, which plants identical windows with conflicting classes.
struct SyntheticConfig {
    std::size_t words = 2000;
    double ambiguity_rate = 0.05;  ///< share of the output words that are stress variants
    std::size_t morphemes = 300;
    double irregular_rate = 0.15;
    std::uint64_t seed = 1;
};

std::vector<WordRecord> synthetic_lexicon(const SyntheticConfig& config);

}  // namespace mbl
