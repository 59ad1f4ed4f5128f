#pragma once

// Words over the generator alphabet {1,2,3} and the combinatorial functions
// that drive the trace formulas: winding number, adjacency counters, the
// reduction/straightening moves on cyclic words and the tail deletions used
// by the recursive formula.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chtg {

using Letter = std::uint8_t;

/// k+1 and k-1 inside {1,2,3}.
constexpr Letter next_letter(Letter k) { return k == 3 ? 1 : static_cast<Letter>(k + 1); }
constexpr Letter prev_letter(Letter k) { return k == 1 ? 3 : static_cast<Letter>(k - 1); }
/// The letter different from both a and b (a != b).
constexpr Letter third_letter(Letter a, Letter b) { return static_cast<Letter>(6 - a - b); }

class Word {
public:
    Word() = default;
    /// Throws InvalidArgument unless every letter is in {1,2,3}.
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<int> letters);

    /// Parses the compact digit form ("1231"); "e" and "" are the empty word.
    static Word parse(std::string_view text);
    /// Compact digit form; the empty word is "e".
    std::string str() const;

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word rotated(std::size_t k) const;
    Word reversed() const;
    /// a^m for m >= 0; a^{-m} is the reversed word (the generators are involutions).
    Word power(int m) const;
    Word concat(const Word& other) const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

/// A rotation class of words, stored as its lexicographically minimal rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(const Word& w);

    const Word& word() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }
    std::string str() const { return canonical_.str(); }

    auto operator<=>(const CyclicWord&) const = default;

private:
    Word canonical_;
};

Word min_rotation(const Word& w);

/// Representative of the class of w under rotation and reversal.
Word bracelet_representative(const Word& w);

/// Residue of a modulo 3 in {-1, 0, 1}.
constexpr int chi(int a)
{
    const int m = ((a % 3) + 3) % 3;
    return m == 2 ? -1 : m;
}

/// Sum of chi(a_{m+1} - a_m) around the cycle; always divisible by 3.
int chi_sum(std::span<const Letter> a);
/// Winding number of the closed loop a_1 -> ... -> a_n -> a_1.
int winding(std::span<const Letter> a);
inline int winding(const Word& a) { return winding(a.letters()); }

/// 1 iff {a,b} = {k-1, k+1}.
constexpr int psi(Letter k, Letter a, Letter b)
{
    const Letter lo = prev_letter(k);
    const Letter hi = next_letter(k);
    return ((a == lo && b == hi) || (a == hi && b == lo)) ? 1 : 0;
}

/// Number of cyclic adjacencies {k-1, k+1}.
int u_count(Letter k, std::span<const Letter> a);
inline int u_count(Letter k, const Word& a) { return u_count(k, a.letters()); }

int n_count(Letter k, std::span<const Letter> a);
inline int n_count(Letter k, const Word& a) { return n_count(k, a.letters()); }

constexpr int v_count(Letter k, Letter a, Letter b, Letter c)
{
    return psi(k, a, b) + psi(k, b, c) - psi(k, a, c);
}

/// One elementary move of reduce_straighten.
struct ReductionStep {
    enum class Kind {
        /// (..,k,k,..) -> (..,k,..); also the terminal (k) -> ().
        Reduction,
        /// (..,k,l,k,..) -> (..,k,..); also the terminal (k,l) -> ().
        Straightening,
    };
    Kind kind;
    /// Straightening only: the letter m with {k,l} = {m-1, m+1}; the move
    /// removes one factor 4 r_m^2 from 2^{|b|} r^{u(b)}.
    Letter axis = 0;
    Word after;
};

struct ReductionResult {
    CyclicWord result;
    std::vector<ReductionStep> steps;

    int reductions() const;
    int straightenings(Letter axis) const;
};

/// Fully reduces a cyclic word to (1,2,3)^{w(a)} (up to rotation).
/// Leftmost applicable move first, reductions before straightenings.
ReductionResult reduce_straighten(const Word& a);

/// Move counts of reduce_straighten without the step log.
struct ReductionTally {
    int reductions = 0;
    /// Indexed by axis - 1.
    std::array<int, 3> straightenings{};
    std::size_t final_length = 0;
};

ReductionTally tally_reductions(std::span<const Letter> a);

/// delta: drops a_n (length >= 1).
Word delete_last(const Word& a);
/// delta': drops a_{n-1} (length >= 2).
Word delete_penultimate(const Word& a);
/// delta'': drops a_{n-2} (length >= 3).
Word delete_antepenultimate(const Word& a);

struct Deletions {
    Word last;          // delta a
    Word penultimate;   // delta' a
    Word antepenultimate; // delta'' a
};

/// All three deletions; rejects words shorter than 3.
Deletions deletions(const Word& a);

/// Visits one representative per class of words under rotation and reversal,
/// lengths 1..max_len, ordered by length then lexicographically. With
/// cyclically_reduced only words without cyclically adjacent equal letters
/// are produced.
void for_each_word(std::size_t min_len, std::size_t max_len, bool cyclically_reduced,
                   const std::function<void(const Word&)>& visit);

std::vector<CyclicWord> enumerate_words(std::size_t max_len, bool cyclically_reduced);

} // namespace chtg
