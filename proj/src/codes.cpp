#include "hf/codes.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace hf {

Code Code::from_words(std::vector<Word> words) {
    if (words.empty()) throw BadParameters("a code needs at least one word");
    const int q = words.front().q();
    const int n = words.front().length();
    std::set<std::vector<int>> seen;
    for (const Word& w : words) {
        if (w.q() != q) throw BadParameters("codewords must share one alphabet");
        if (w.length() != n) throw LengthMismatch("codewords must share one length");
        if (!seen.insert(w.symbols()).second)
            throw BadParameters("duplicate codeword " + to_text(w));
    }
    return Code(std::move(words), q, n);
}

int Code::min_distance() const {
    if (words_.size() < 2)
        throw EmptyDistance("minimum distance needs at least two codewords");
    if (!min_distance_) {
        int best = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::size_t j = i + 1; j < words_.size(); ++j)
                best = std::min(best, hamming_distance(words_[i], words_[j]));
        min_distance_ = best;
    }
    return *min_distance_;
}

CodeSphereStats code_sphere_stats(const Code& code, int radius) {
    if (radius < 0) throw RadiusOutOfRange("radius must be nonnegative");
    CodeSphereStats stats{radius, {}, code.words().front(), code.words().front(), 0, 0, 0};
    stats.cumulative.reserve(code.size());
    BigInt total = 0;
    bool first = true;
    for (const Word& w : code.words()) {
        BigInt sum = cumulative_sphere_sum(w, radius);
        total += sum;
        if (first) {
            stats.w_min = sum;
            stats.w_max = sum;
            stats.c_min = w;
            stats.c_max = w;
            first = false;
        } else {
            if (sum < stats.w_min || (sum == stats.w_min && w < stats.c_min)) {
                stats.w_min = sum;
                stats.c_min = w;
            }
            if (sum > stats.w_max || (sum == stats.w_max && w < stats.c_max)) {
                stats.w_max = sum;
                stats.c_max = w;
            }
        }
        stats.cumulative.push_back(std::move(sum));
    }
    stats.u_bar = BigRat(total, BigInt(code.size()));
    return stats;
}

Code greedy_construct(Alphabet alphabet, int n, int d, ScanOrder order, std::uint64_t seed,
                      std::uint64_t budget) {
    if (d < 1 || d > n) throw BadParameters("distance must satisfy 1 <= d <= n");
    std::vector<Word> pool = all_hf_words(alphabet, n, budget);
    if (order == ScanOrder::SeededShuffle) {
        std::mt19937_64 rng(seed);
        std::shuffle(pool.begin(), pool.end(), rng);
    }
    if (d == 1) return Code::from_words(std::move(pool));  // every candidate survives
    std::vector<Word> kept;
    for (const Word& candidate : pool) {
        bool ok = true;
        for (const Word& w : kept) {
            if (hamming_distance(candidate, w) < d) {
                ok = false;
                break;
            }
        }
        if (ok) kept.push_back(candidate);
    }
    return Code::from_words(std::move(kept));
}

Code random_code(Alphabet alphabet, int n, std::size_t size, std::uint64_t seed,
                 std::uint64_t budget) {
    std::vector<Word> pool = all_hf_words(alphabet, n, budget);
    if (size < 1 || size > pool.size())
        throw BadParameters("requested code size exceeds |C_{q,n}|");
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: only the first `size` slots are needed.
    for (std::size_t i = 0; i < size; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(size), pool.end());
    return Code::from_words(std::move(pool));
}

VerificationReport verify_code(const std::vector<std::vector<int>>& words,
                               const CodeClaim& claim) {
    VerificationReport report;
    std::vector<Word> valid;
    Alphabet alphabet(claim.q);
    for (std::size_t i = 0; i < words.size(); ++i) {
        try {
            Word w = Word::validate(words[i], alphabet);
            if (w.length() != claim.n) {
                report.violations.push_back("word " + std::to_string(i) + " has length " +
                                            std::to_string(w.length()) + ", claimed n=" +
                                            std::to_string(claim.n));
            } else {
                valid.push_back(std::move(w));
            }
        } catch (const WordError& e) {
            report.violations.push_back("word " + std::to_string(i) + ": " + e.what());
        }
    }
    report.valid_words = valid.size();
    for (std::size_t i = 0; i < valid.size(); ++i)
        for (std::size_t j = i + 1; j < valid.size(); ++j)
            if (valid[i] == valid[j])
                report.violations.push_back("duplicate codeword " + to_text(valid[i]));
    if (words.size() != claim.m)
        report.violations.push_back("listing has " + std::to_string(words.size()) +
                                    " words, claimed M=" + std::to_string(claim.m));
    if (valid.size() >= 2) {
        int best = std::numeric_limits<int>::max();
        std::size_t wi = 0, wj = 1;
        for (std::size_t i = 0; i < valid.size(); ++i)
            for (std::size_t j = i + 1; j < valid.size(); ++j) {
                const int dist = hamming_distance(valid[i], valid[j]);
                if (dist < best) {
                    best = dist;
                    wi = i;
                    wj = j;
                }
            }
        report.computed_distance = best;
        if (claim.d && best != *claim.d)
            report.violations.push_back(
                "minimum distance is " + std::to_string(best) + ", claimed d=" +
                std::to_string(*claim.d) + " (witness pair " + to_text(valid[wi]) + ", " +
                to_text(valid[wj]) + ")");
    } else if (claim.d) {
        report.violations.push_back("distance claim needs at least two valid words");
    }
    report.accepted = report.violations.empty();
    return report;
}

void write_code_file(std::ostream& out, const Code& code) {
    out << "# q=" << code.q() << " n=" << code.length() << "\n";
    for (const Word& w : code.words()) out << to_text(w) << "\n";
}

Code read_code_file(std::istream& in) {
    std::string line;
    int q = 0, n = 0;
    if (!std::getline(in, line)) throw BadParameters("empty code file");
    if (std::sscanf(line.c_str(), "# q=%d n=%d", &q, &n) != 2)
        throw BadParameters("code file must start with '# q=<q> n=<n>'");
    Alphabet alphabet(q);
    std::vector<Word> words;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        Word w = parse_word(line, alphabet);
        if (w.length() != n) throw LengthMismatch("word length disagrees with the header");
        words.push_back(std::move(w));
    }
    return Code::from_words(std::move(words));
}

}  // namespace hf
