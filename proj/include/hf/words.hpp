#pragma once

#include "hf/errors.hpp"
#include "hf/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hf {

// Default cap on operations that enumerate all of C_{q,n}.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// q-ary alphabet; symbols are represented as the integers 0..q-1.
struct Alphabet {
    int q;
    explicit Alphabet(int q_) : q(q_) {
        if (q < 2) throw BadParameters("alphabet size must be at least 2");
    }
    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.q == b.q; }
};

// A validated homopolymer-free word: symbols in [0,q) with no two adjacent
// symbols equal. Immutable after construction.
class Word {
  public:
    // Validating factory. Throws WordError on an empty sequence, a symbol
    // outside [0,q), or an adjacent repeat.
    static Word validate(std::vector<int> symbols, Alphabet alphabet);

    // Non-validating factory for callers that construct words symbol by
    // symbol and already maintain the invariants (enumeration, patterns).
    static Word unchecked(std::vector<int> symbols, Alphabet alphabet);

    int q() const { return q_; }
    int length() const { return static_cast<int>(symbols_.size()); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<int>& symbols() const { return symbols_; }

    friend bool operator==(const Word& a, const Word& b) {
        return a.q_ == b.q_ && a.symbols_ == b.symbols_;
    }
    friend bool operator<(const Word& a, const Word& b) { return a.symbols_ < b.symbols_; }

  private:
    Word(std::vector<int> symbols, int q) : symbols_(std::move(symbols)), q_(q) {}
    std::vector<int> symbols_;
    int q_;
};

// Binary indicator sequence of equality between symbols ell apart.
// Storage is 0-based: bits[k] is the indicator for 1-based position k+1,
// i.e. bits[k] = 1 iff symbols[k-1] == symbols[k-1+ell]. bits[0] is always 0,
// as are all positions past n-ell+1.
struct CharacteristicSequence {
    int ell;
    std::vector<std::uint8_t> bits;

    // Indicator at 1-based position i.
    int tau(int i) const { return bits[static_cast<std::size_t>(i - 1)]; }
    // Sum of indicators over 1-based positions lo..hi inclusive (empty when lo > hi).
    int sum(int lo, int hi) const;
};

// Requires 1 < ell < n; throws BadEll otherwise.
CharacteristicSequence characteristic_sequence(const Word& a, int ell);

// |C_{q,n}| = q * (q-1)^(n-1), exact.
BigInt count_hf(Alphabet alphabet, int n);

// Visits every word of C_{q,n} exactly once in lexicographic order. The
// symbol buffer handed to the visitor is reused between calls.
template <class Visitor>
void for_each_hf(Alphabet alphabet, int n, Visitor&& visit) {
    if (n < 1) throw BadParameters("word length must be at least 1");
    const int q = alphabet.q;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i % 2;
    for (;;) {
        visit(static_cast<const std::vector<int>&>(w));
        int i = n - 1;
        for (; i >= 0; --i) {
            int next = w[static_cast<std::size_t>(i)] + 1;
            if (i > 0 && next == w[static_cast<std::size_t>(i - 1)]) ++next;
            if (next <= q - 1) {
                w[static_cast<std::size_t>(i)] = next;
                break;
            }
        }
        if (i < 0) return;
        for (int j = i + 1; j < n; ++j)
            w[static_cast<std::size_t>(j)] = (w[static_cast<std::size_t>(j - 1)] == 0) ? 1 : 0;
    }
}

// Deterministic lexicographic stream over C_{q,n}.
class WordStream {
  public:
    WordStream(Alphabet alphabet, int n);
    std::optional<Word> next();

  private:
    Alphabet alphabet_;
    int n_;
    std::vector<int> current_;
    bool done_;
};

// Materializes C_{q,n}; throws BudgetExceeded when |C_{q,n}| > budget.
std::vector<Word> all_hf_words(Alphabet alphabet, int n, std::uint64_t budget = kDefaultBudget);

// Number of positions where the two words differ. Requires equal lengths
// (LengthMismatch) and equal alphabets (BadParameters).
int hamming_distance(const Word& a, const Word& b);

// Word text format: concatenated decimal digits for q <= 10 ("1213234"),
// comma-separated integers for larger alphabets.
std::string to_text(const Word& w);
// DNA rendering 0->A, 1->C, 2->G, 3->T; requires q == 4.
std::string to_dna(const Word& w);
// Accepts the digit/comma forms, plus ACGT letters when q == 4.
Word parse_word(const std::string& text, Alphabet alphabet);

}  // namespace hf
