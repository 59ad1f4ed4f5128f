#include "chtg/words.hpp"

#include <algorithm>

#include "chtg/errors.hpp"

namespace chtg {

namespace {

void check_letters(std::span<const Letter> letters)
{
    for (Letter l : letters)
        if (l < 1 || l > 3)
            throw InvalidArgument("letter outside {1,2,3}: " + std::to_string(int(l)));
}

} // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
    check_letters(letters_);
}

Word::Word(std::initializer_list<int> letters)
{
    letters_.reserve(letters.size());
    for (int l : letters) {
        if (l < 1 || l > 3)
            throw InvalidArgument("letter outside {1,2,3}: " + std::to_string(l));
        letters_.push_back(static_cast<Letter>(l));
    }
}

Word Word::parse(std::string_view text)
{
    if (text == "e")
        return {};
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c < '1' || c > '3')
            throw InvalidArgument("invalid word \"" + std::string(text) + "\"");
        letters.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(letters));
}

std::string Word::str() const
{
    if (letters_.empty())
        return "e";
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_)
        s.push_back(static_cast<char>('0' + l));
    return s;
}

Word Word::rotated(std::size_t k) const
{
    if (letters_.empty())
        return *this;
    Word out = *this;
    std::rotate(out.letters_.begin(), out.letters_.begin() + static_cast<std::ptrdiff_t>(k % size()),
                out.letters_.end());
    return out;
}

Word Word::reversed() const
{
    Word out = *this;
    std::reverse(out.letters_.begin(), out.letters_.end());
    return out;
}

Word Word::power(int m) const
{
    const Word base = m < 0 ? reversed() : *this;
    Word out;
    for (int i = 0; i < std::abs(m); ++i)
        out.letters_.insert(out.letters_.end(), base.letters_.begin(), base.letters_.end());
    return out;
}

Word Word::concat(const Word& other) const
{
    Word out = *this;
    out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
    return out;
}

Word min_rotation(const Word& w)
{
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r = w.rotated(k);
        if (r < best)
            best = std::move(r);
    }
    return best;
}

CyclicWord::CyclicWord(const Word& w) : canonical_(min_rotation(w)) {}

Word bracelet_representative(const Word& w)
{
    return std::min(min_rotation(w), min_rotation(w.reversed()));
}

int chi_sum(std::span<const Letter> a)
{
    const std::size_t n = a.size();
    int s = 0;
    for (std::size_t m = 0; m < n; ++m)
        s += chi(int(a[(m + 1) % n]) - int(a[m]));
    return s;
}

int winding(std::span<const Letter> a)
{
    return chi_sum(a) / 3;
}

int u_count(Letter k, std::span<const Letter> a)
{
    const std::size_t n = a.size();
    int u = 0;
    for (std::size_t m = 0; m < n; ++m)
        u += psi(k, a[m], a[(m + 1) % n]);
    return u;
}

int n_count(Letter k, std::span<const Letter> a)
{
    return static_cast<int>(std::count(a.begin(), a.end(), k));
}

int ReductionResult::reductions() const
{
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const ReductionStep& s) {
        return s.kind == ReductionStep::Kind::Reduction;
    }));
}

int ReductionResult::straightenings(Letter axis) const
{
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [axis](const ReductionStep& s) {
        return s.kind == ReductionStep::Kind::Straightening && s.axis == axis;
    }));
}

namespace {

// Applies the moves of reduce_straighten in place, reporting each one.
template <class OnMove>
void run_reductions(std::vector<Letter>& cur, OnMove&& on_move)
{
    using Kind = ReductionStep::Kind;
    while (!cur.empty()) {
        const std::size_t n = cur.size();
        if (n == 1) {
            cur.clear();
            on_move(Kind::Reduction, Letter{0});
            continue;
        }
        if (n == 2 && cur[0] != cur[1]) {
            const Letter axis = third_letter(cur[0], cur[1]);
            cur.clear();
            on_move(Kind::Straightening, axis);
            continue;
        }

        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i] == cur[(i + 1) % n]) {
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>((i + 1) % n));
                on_move(Kind::Reduction, Letter{0});
                moved = true;
                break;
            }
        }
        if (moved)
            continue;

        // n >= 3 and no cyclically adjacent equal letters.
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            const std::size_t k = (i + 2) % n;
            if (cur[i] == cur[k]) {
                const Letter axis = third_letter(cur[i], cur[j]);
                // Remove positions j and k, keeping the letter at i.
                std::vector<Letter> next;
                next.reserve(n - 2);
                for (std::size_t m = 0; m < n; ++m)
                    if (m != j && m != k)
                        next.push_back(cur[m]);
                cur = std::move(next);
                on_move(Kind::Straightening, axis);
                moved = true;
                break;
            }
        }
        if (!moved)
            break;
    }
}

} // namespace

ReductionResult reduce_straighten(const Word& a)
{
    std::vector<Letter> cur(a.begin(), a.end());
    ReductionResult res;
    run_reductions(cur, [&](ReductionStep::Kind kind, Letter axis) {
        res.steps.push_back({kind, axis, Word(cur)});
    });
    res.result = CyclicWord(Word(std::move(cur)));
    return res;
}

ReductionTally tally_reductions(std::span<const Letter> a)
{
    std::vector<Letter> cur(a.begin(), a.end());
    ReductionTally tally;
    run_reductions(cur, [&](ReductionStep::Kind kind, Letter axis) {
        if (kind == ReductionStep::Kind::Reduction)
            ++tally.reductions;
        else
            ++tally.straightenings[axis - 1];
    });
    tally.final_length = cur.size();
    return tally;
}

Word delete_last(const Word& a)
{
    if (a.size() < 1)
        throw InvalidArgument("delete_last needs a nonempty word");
    return Word(std::vector<Letter>(a.begin(), a.end() - 1));
}

Word delete_penultimate(const Word& a)
{
    if (a.size() < 2)
        throw InvalidArgument("delete_penultimate needs length >= 2");
    std::vector<Letter> v(a.begin(), a.end());
    v.erase(v.end() - 2);
    return Word(std::move(v));
}

Word delete_antepenultimate(const Word& a)
{
    if (a.size() < 3)
        throw InvalidArgument("delete_antepenultimate needs length >= 3");
    std::vector<Letter> v(a.begin(), a.end());
    v.erase(v.end() - 3);
    return Word(std::move(v));
}

Deletions deletions(const Word& a)
{
    if (a.size() < 3)
        throw InvalidArgument("deletions need length >= 3, got \"" + a.str() + "\"");
    return {delete_last(a), delete_penultimate(a), delete_antepenultimate(a)};
}

namespace {

// Necklace generation (Fredricksen-Kessler-Maiorana) restricted to words
// with no adjacent equal letters. Prefix-closed, so pruning stays exact.
struct NecklaceWalker {
    std::size_t n;
    bool reduced;
    const std::function<void(const Word&)>& visit;
    std::vector<Letter> a;

    void walk(std::size_t t, std::size_t p)
    {
        if (t > n) {
            if (n % p != 0)
                return;
            // Single letters count as cyclically reduced.
            if (reduced && n > 1 && a[1] == a[n])
                return;
            Word w(std::vector<Letter>(a.begin() + 1, a.end()));
            if (min_rotation(w.reversed()) < w)
                return;
            visit(w);
            return;
        }
        const Letter lo = t == 1 ? Letter{1} : a[t - p];
        for (Letter c = lo; c <= 3; ++c) {
            if (reduced && t > 1 && c == a[t - 1])
                continue;
            a[t] = c;
            walk(t + 1, c == a[t - p] && t > 1 ? p : t);
        }
    }
};

} // namespace

void for_each_word(std::size_t min_len, std::size_t max_len, bool cyclically_reduced,
                   const std::function<void(const Word&)>& visit)
{
    for (std::size_t n = std::max<std::size_t>(min_len, 1); n <= max_len; ++n) {
        NecklaceWalker walker{n, cyclically_reduced, visit, std::vector<Letter>(n + 1, 0)};
        walker.walk(1, 1);
    }
}

std::vector<CyclicWord> enumerate_words(std::size_t max_len, bool cyclically_reduced)
{
    std::vector<CyclicWord> out;
    for_each_word(1, max_len, cyclically_reduced,
                  [&](const Word& w) { out.emplace_back(w); });
    return out;
}

} // namespace chtg
