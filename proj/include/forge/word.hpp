#pragma once

#include <string>

namespace forge {

// A word is an ordered sequence of symbols. Dataset words store the letters
// 'a'..'z' directly; the markov interpreter stores dense per-alphabet symbol
// ids instead (see markov.hpp). The rewrite primitives work on either.
using Word = std::string;

inline constexpr int kLetterCount = 26;

inline bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

inline bool is_letter_word(const Word& w) {
    for (char c : w)
        if (!is_letter(c)) return false;
    return true;
}

}  // namespace forge
