#include "rtc/language.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rtc {

namespace {

void require_same_carrier(const Language& l, const Language& m, const char* op) {
    if (l.alphabet() != m.alphabet() || l.max_len() != m.max_len())
        throw std::invalid_argument(std::string(op) +
                                    ": languages have different alphabets or bounds");
}

} // namespace

bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Language::Language(std::string alphabet, std::size_t max_len, std::vector<std::string> words)
    : alphabet_(std::move(alphabet)), max_len_(max_len), words_(std::move(words)) {
    std::string sorted_alpha = alphabet_;
    std::sort(sorted_alpha.begin(), sorted_alpha.end());
    if (std::adjacent_find(sorted_alpha.begin(), sorted_alpha.end()) != sorted_alpha.end())
        throw std::invalid_argument("alphabet symbols must be distinct");

    for (const auto& w : words_) {
        if (w.size() > max_len_)
            throw std::invalid_argument("word \"" + w + "\" exceeds the length bound");
        for (char c : w)
            if (alphabet_.find(c) == std::string::npos)
                throw std::invalid_argument("word \"" + w + "\" uses symbols outside the alphabet");
    }
    std::sort(words_.begin(), words_.end(), shortlex_less);
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Language::contains(const std::string& w) const {
    return std::binary_search(words_.begin(), words_.end(), w, shortlex_less);
}

std::vector<std::string> all_words(const std::string& alphabet, std::size_t k) {
    std::vector<std::string> out{""};
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= k; ++len) {
        std::vector<std::string> next;
        next.reserve(layer.size() * alphabet.size());
        for (const auto& w : layer)
            for (char c : alphabet) next.push_back(w + c);
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
        if (layer.empty()) break;
    }
    return out;
}

Language lang_union(const Language& l, const Language& m) {
    require_same_carrier(l, m, "lang_union");
    std::vector<std::string> words = l.words();
    words.insert(words.end(), m.words().begin(), m.words().end());
    return Language(l.alphabet(), l.max_len(), std::move(words));
}

Language lang_concat(const Language& l, const Language& m) {
    require_same_carrier(l, m, "lang_concat");
    std::vector<std::string> words;
    for (const auto& u : l.words())
        for (const auto& v : m.words())
            if (u.size() + v.size() <= l.max_len()) words.push_back(u + v);
    return Language(l.alphabet(), l.max_len(), std::move(words));
}

Language lang_star(const Language& l) {
    // Iterate S -> {eps} u LS from the empty language. Each productive step
    // adds at least one word, so the loop is bounded by the carrier size.
    Language current = Language::empty(l.alphabet(), l.max_len());
    while (true) {
        Language next = lang_union(Language::epsilon(l.alphabet(), l.max_len()),
                                   lang_concat(l, current));
        if (next == current) return current;
        current = std::move(next);
    }
}

Language truncate(const Language& l, std::size_t new_max_len) {
    std::vector<std::string> words;
    for (const auto& w : l.words())
        if (w.size() <= new_max_len) words.push_back(w);
    return Language(l.alphabet(), new_max_len, std::move(words));
}

Quantale<Language> language_quantale(const std::string& alphabet, std::size_t k) {
    Quantale<Language> q;
    q.name = "language quantale (|A|=" + std::to_string(alphabet.size()) +
             ", k=" + std::to_string(k) + ")";
    q.bottom = Language::empty(alphabet, k);
    q.unit = Language::epsilon(alphabet, k);
    q.join = [](const Language& a, const Language& b) { return lang_union(a, b); };
    q.multiply = [](const Language& a, const Language& b) { return lang_concat(a, b); };
    q.show = [](const Language& l) {
        std::string out = "{";
        bool first = true;
        for (const auto& w : l.words()) {
            if (!first) out += ",";
            first = false;
            out += w.empty() ? "<eps>" : w;
        }
        return out + "}";
    };

    const std::vector<std::string> carrier_words = all_words(alphabet, k);
    const std::size_t word_count = carrier_words.size();
    if (word_count <= 16) {
        q.enumerate = [alphabet, k, carrier_words]() {
            std::vector<Language> all;
            all.reserve(std::size_t{1} << carrier_words.size());
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << carrier_words.size());
                 ++mask) {
                std::vector<std::string> words;
                for (std::size_t i = 0; i < carrier_words.size(); ++i)
                    if ((mask >> i) & 1u) words.push_back(carrier_words[i]);
                all.emplace_back(alphabet, k, std::move(words));
            }
            return all;
        };
    }
    q.sample = [alphabet, k, carrier_words](std::mt19937& rng) {
        std::uniform_real_distribution<double> density(0.0, 1.0);
        std::bernoulli_distribution bit(density(rng));
        std::vector<std::string> words;
        for (const auto& w : carrier_words)
            if (bit(rng)) words.push_back(w);
        return Language(alphabet, k, std::move(words));
    };
    q.star_step_cap = word_count + 2;
    return q;
}

} // namespace rtc
