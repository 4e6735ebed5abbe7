#include "hf/words.hpp"

#include <algorithm>
#include <sstream>

namespace hf {

Word Word::validate(std::vector<int> symbols, Alphabet alphabet) {
    if (symbols.empty()) throw WordError(WordError::Kind::Empty, 0, "empty symbol sequence");
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] < 0 || symbols[i] >= alphabet.q)
            throw WordError(WordError::Kind::OutOfRange, i,
                            "symbol out of range at position " + std::to_string(i));
        if (i + 1 < symbols.size() && symbols[i] == symbols[i + 1])
            throw WordError(WordError::Kind::RepeatAt, i,
                            "adjacent repeat at position " + std::to_string(i));
    }
    return Word(std::move(symbols), alphabet.q);
}

Word Word::unchecked(std::vector<int> symbols, Alphabet alphabet) {
    return Word(std::move(symbols), alphabet.q);
}

int CharacteristicSequence::sum(int lo, int hi) const {
    int total = 0;
    const int n = static_cast<int>(bits.size());
    lo = std::max(lo, 1);
    hi = std::min(hi, n);
    for (int i = lo; i <= hi; ++i) total += tau(i);
    return total;
}

CharacteristicSequence characteristic_sequence(const Word& a, int ell) {
    const int n = a.length();
    if (ell <= 1 || ell >= n) throw BadEll("ell must satisfy 1 < ell < n");
    CharacteristicSequence cs;
    cs.ell = ell;
    cs.bits.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i + ell <= n; ++i) {  // 1-based source position i pairs with i+ell
        if (a[static_cast<std::size_t>(i - 1)] == a[static_cast<std::size_t>(i - 1 + ell)])
            cs.bits[static_cast<std::size_t>(i)] = 1;
    }
    return cs;
}

BigInt count_hf(Alphabet alphabet, int n) {
    if (n < 1) throw BadParameters("word length must be at least 1");
    return BigInt(alphabet.q) * pow_big(alphabet.q - 1, static_cast<unsigned>(n - 1));
}

WordStream::WordStream(Alphabet alphabet, int n) : alphabet_(alphabet), n_(n), done_(false) {
    if (n < 1) throw BadParameters("word length must be at least 1");
    current_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) current_[static_cast<std::size_t>(i)] = i % 2;
}

std::optional<Word> WordStream::next() {
    if (done_) return std::nullopt;
    Word out = Word::unchecked(current_, alphabet_);
    int i = n_ - 1;
    for (; i >= 0; --i) {
        int next = current_[static_cast<std::size_t>(i)] + 1;
        if (i > 0 && next == current_[static_cast<std::size_t>(i - 1)]) ++next;
        if (next <= alphabet_.q - 1) {
            current_[static_cast<std::size_t>(i)] = next;
            break;
        }
    }
    if (i < 0) {
        done_ = true;
    } else {
        for (int j = i + 1; j < n_; ++j)
            current_[static_cast<std::size_t>(j)] =
                (current_[static_cast<std::size_t>(j - 1)] == 0) ? 1 : 0;
    }
    return out;
}

std::vector<Word> all_hf_words(Alphabet alphabet, int n, std::uint64_t budget) {
    if (count_hf(alphabet, n) > budget)
        throw BudgetExceeded("enumeration of C_{" + std::to_string(alphabet.q) + "," +
                             std::to_string(n) + "} exceeds the budget");
    std::vector<Word> words;
    for_each_hf(alphabet, n, [&](const std::vector<int>& w) {
        words.push_back(Word::unchecked(w, alphabet));
    });
    return words;
}

int hamming_distance(const Word& a, const Word& b) {
    if (a.length() != b.length()) throw LengthMismatch("words have different lengths");
    if (a.q() != b.q()) throw BadParameters("words have different alphabets");
    int d = 0;
    for (int i = 0; i < a.length(); ++i)
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) ++d;
    return d;
}

std::string to_text(const Word& w) {
    std::ostringstream out;
    if (w.q() <= 10) {
        for (int i = 0; i < w.length(); ++i) out << w[static_cast<std::size_t>(i)];
    } else {
        for (int i = 0; i < w.length(); ++i) {
            if (i) out << ',';
            out << w[static_cast<std::size_t>(i)];
        }
    }
    return out.str();
}

namespace {
constexpr char kDnaLetters[] = {'A', 'C', 'G', 'T'};
}

std::string to_dna(const Word& w) {
    if (w.q() != 4) throw BadParameters("DNA rendering requires q == 4");
    std::string out;
    out.reserve(static_cast<std::size_t>(w.length()));
    for (int i = 0; i < w.length(); ++i)
        out.push_back(kDnaLetters[w[static_cast<std::size_t>(i)]]);
    return out;
}

Word parse_word(const std::string& text, Alphabet alphabet) {
    std::vector<int> symbols;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string field;
        while (std::getline(in, field, ',')) symbols.push_back(std::stoi(field));
    } else {
        const bool dna = alphabet.q == 4 &&
                         text.find_first_of("ACGTacgt") != std::string::npos;
        for (char c : text) {
            if (dna) {
                switch (c) {
                    case 'A': case 'a': symbols.push_back(0); break;
                    case 'C': case 'c': symbols.push_back(1); break;
                    case 'G': case 'g': symbols.push_back(2); break;
                    case 'T': case 't': symbols.push_back(3); break;
                    default: throw BadParameters("invalid DNA letter in word text");
                }
            } else {
                if (c < '0' || c > '9') throw BadParameters("invalid digit in word text");
                symbols.push_back(c - '0');
            }
        }
    }
    return Word::validate(std::move(symbols), alphabet);
}

}  // namespace hf
