// language.hpp -- length-truncated formal languages and their quantale. The
// full language quantale is infinite; truncating at a word-length bound keeps
// star computable while remaining a unital quantale.

#pragma once

#include <string>
#include <vector>

#include "rtc/quantale.hpp"

namespace rtc {

/// A finite set of words of length <= max_len over an ordered alphabet.
/// Words are kept in shortlex order (length first, then lexicographic).
class Language {
public:
    Language() = default;

    /// Validates that alphabet symbols are distinct and every word respects
    /// the alphabet and the length bound.
    Language(std::string alphabet, std::size_t max_len, std::vector<std::string> words);

    static Language empty(std::string alphabet, std::size_t max_len) {
        return Language(std::move(alphabet), max_len, {});
    }

    /// The unit {epsilon}.
    static Language epsilon(std::string alphabet, std::size_t max_len) {
        return Language(std::move(alphabet), max_len, {""});
    }

    const std::string& alphabet() const { return alphabet_; }
    std::size_t max_len() const { return max_len_; }
    const std::vector<std::string>& words() const { return words_; }
    bool contains(const std::string& w) const;
    std::size_t size() const { return words_.size(); }

    bool operator==(const Language&) const = default;

private:
    std::string alphabet_;
    std::size_t max_len_ = 0;
    std::vector<std::string> words_; // shortlex sorted, unique
};

/// Shortlex comparison used for all word ordering.
bool shortlex_less(const std::string& a, const std::string& b);

/// All words of length <= k over the alphabet, in shortlex order.
std::vector<std::string> all_words(const std::string& alphabet, std::size_t k);

Language lang_union(const Language& l, const Language& m);

/// Concatenations uv with |uv| <= the bound; longer products are dropped.
Language lang_concat(const Language& l, const Language& m);

/// Star in the truncated quantale: all concatenations of zero or more
/// L-words, cut at the length bound.
Language lang_star(const Language& l);

/// Same language under a smaller bound (words above it are dropped).
Language truncate(const Language& l, std::size_t new_max_len);

/// Languages over alphabet with bound k, under union and truncated
/// concatenation. Enumerable while 2^|A^{<=k}| stays within 2^16.
Quantale<Language> language_quantale(const std::string& alphabet, std::size_t k);

} // namespace rtc
