#pragma once

#include "hf/spheres.hpp"
#include "hf/words.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hf {

// A set of homopolymer-free words of common length and alphabet. Words stay
// in the order they were given; pairwise distinctness is enforced.
class Code {
  public:
    static Code from_words(std::vector<Word> words);

    int q() const { return q_; }
    int length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }

    // Minimum pairwise Hamming distance; cached after the first call.
    // Throws EmptyDistance when the code has fewer than two words.
    int min_distance() const;

  private:
    Code(std::vector<Word> words, int q, int n) : words_(std::move(words)), q_(q), n_(n) {}
    std::vector<Word> words_;
    int q_;
    int n_;
    mutable std::optional<int> min_distance_;
};

// Per-codeword cumulative sphere sums up to the given radius, their extremes
// and their exact mean. Ties for c_min/c_max resolve to the
// lexicographically smallest attaining codeword.
struct CodeSphereStats {
    int radius;
    std::vector<BigInt> cumulative;  // aligned with code word order
    Word c_min;
    Word c_max;
    BigInt w_min;
    BigInt w_max;
    BigRat u_bar;
};
CodeSphereStats code_sphere_stats(const Code& code, int radius);

enum class ScanOrder { Lexicographic, SeededShuffle };

// Scans C_{q,n} (lexicographically, or shuffled by the seed) and keeps every
// word at distance >= d from all previously kept words. The result has
// minimum distance >= d, and its size is at least
// ceil(|C_{q,n}| / S(a_max, d-1)) because each kept word rules out at most
// that many candidates.
Code greedy_construct(Alphabet alphabet, int n, int d,
                      ScanOrder order = ScanOrder::Lexicographic, std::uint64_t seed = 0,
                      std::uint64_t budget = kDefaultBudget);

// Deterministic random sample of `size` distinct words from C_{q,n}.
Code random_code(Alphabet alphabet, int n, std::size_t size, std::uint64_t seed,
                 std::uint64_t budget = kDefaultBudget);

struct CodeClaim {
    int q;
    int n;
    std::size_t m;
    std::optional<int> d;
};

// Outcome of checking a raw word list against a claimed (n, M, d)_q shape.
// Violations are reported, not thrown.
struct VerificationReport {
    bool accepted = false;
    std::vector<std::string> violations;
    std::size_t valid_words = 0;
    std::optional<int> computed_distance;
};
VerificationReport verify_code(const std::vector<std::vector<int>>& words,
                               const CodeClaim& claim);

// Code file format: a "# q=<q> n=<n>" header line, then one word per line in
// the word text format.
void write_code_file(std::ostream& out, const Code& code);
Code read_code_file(std::istream& in);

}  // namespace hf
