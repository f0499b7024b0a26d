#include "labyext/multiset.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace laby {

namespace {
std::atomic<int> g_ground_cap{16};

void check_element(int e)
{
    if (e < 1)
        throw std::invalid_argument("multiset element must be >= 1, got " + std::to_string(e));
    if (e > ground_element_cap())
        throw std::invalid_argument("multiset element " + std::to_string(e) +
                                    " exceeds ground element cap " + std::to_string(ground_element_cap()));
}
}  // namespace

int ground_element_cap()
{
    return g_ground_cap.load();
}

void set_ground_element_cap(int cap)
{
    if (cap < 1)
        throw std::invalid_argument("ground element cap must be >= 1");
    g_ground_cap.store(cap);
}

Multiset Multiset::from_elements(const std::vector<int>& elems)
{
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    Multiset ms;
    for (int e : sorted) {
        check_element(e);
        if (!ms.entries_.empty() && ms.entries_.back().first == e)
            ms.entries_.back().second++;
        else
            ms.entries_.emplace_back(e, 1);
    }
    return ms;
}

Multiset Multiset::from_pairs(const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<std::pair<int, int>> sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    Multiset ms;
    for (auto [e, d] : sorted) {
        check_element(e);
        if (d < 0)
            throw std::invalid_argument("multiset degree must be >= 0");
        if (d == 0)
            continue;
        if (!ms.entries_.empty() && ms.entries_.back().first == e)
            ms.entries_.back().second += d;
        else
            ms.entries_.emplace_back(e, d);
    }
    return ms;
}

long Multiset::cardinality() const
{
    long n = 0;
    for (auto& [e, d] : entries_)
        n += d;
    return n;
}

std::vector<int> Multiset::support() const
{
    std::vector<int> s;
    s.reserve(entries_.size());
    for (auto& [e, d] : entries_)
        s.push_back(e);
    return s;
}

int Multiset::degree_of(int element) const
{
    for (auto& [e, d] : entries_)
        if (e == element)
            return d;
    return 0;
}

bool Multiset::is_strict() const
{
    for (auto& [e, d] : entries_)
        if (d != 1)
            return false;
    return true;
}

std::vector<int> Multiset::word() const
{
    std::vector<int> w;
    w.reserve(cardinality());
    for (auto& [e, d] : entries_)
        for (int i = 0; i < d; ++i)
            w.push_back(e);
    return w;
}

Multiset operator+(const Multiset& a, const Multiset& b)
{
    Multiset out;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first))
            out.entries_.push_back(*ia++);
        else if (ia == a.entries_.end() || ib->first < ia->first)
            out.entries_.push_back(*ib++);
        else {
            out.entries_.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    return out;
}

bool Multiset::operator<(const Multiset& o) const
{
    auto wa = word(), wb = o.word();
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

std::string Multiset::to_string() const
{
    if (entries_.empty())
        return "{}";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, d] : entries_) {
        if (!first)
            out << ' ';
        out << e << '^' << d;
        first = false;
    }
    return out.str();
}

Multiset Multiset::parse(const std::string& text)
{
    std::string body = text;
    // Tolerate optional braces around either form.
    if (!body.empty() && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    for (char& c : body)
        if (c == ',')
            c = ' ';
    std::istringstream in(body);
    std::vector<std::pair<int, int>> pairs;
    std::string tok;
    while (in >> tok) {
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                pairs.emplace_back(std::stoi(tok), 1);
            } else {
                pairs.emplace_back(std::stoi(tok.substr(0, caret)), std::stoi(tok.substr(caret + 1)));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse multiset token '" + tok + "'");
        }
    }
    return from_pairs(pairs);
}

namespace {
void compositions_rec(const std::vector<int>& supp, long card, size_t pos, std::vector<std::pair<int, int>>& acc,
                      std::vector<Multiset>& out)
{
    if (pos + 1 == supp.size()) {
        acc.emplace_back(supp[pos], static_cast<int>(card));
        out.push_back(Multiset::from_pairs(acc));
        acc.pop_back();
        return;
    }
    long remaining_slots = static_cast<long>(supp.size() - pos - 1);
    // Larger first degree gives the lexicographically smaller word.
    for (long d = card - remaining_slots; d >= 1; --d) {
        acc.emplace_back(supp[pos], static_cast<int>(d));
        compositions_rec(supp, card - d, pos + 1, acc, out);
        acc.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& parts, std::vector<Multiset>& out)
{
    if (remaining == 0) {
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < parts.size(); ++i)
            pairs.emplace_back(static_cast<int>(i) + 1, parts[i]);
        out.push_back(Multiset::from_pairs(pairs));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(remaining - p, p, parts, out);
        parts.pop_back();
    }
}
}  // namespace

std::vector<Multiset> multisets_with_support_and_card(const std::vector<int>& supp, long card)
{
    std::vector<int> s = supp;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("support must not contain repeated elements");
    if (card < 0)
        throw std::invalid_argument("cardinality must be >= 0");
    std::vector<Multiset> out;
    if (s.empty())
        return card == 0 ? std::vector<Multiset>{Multiset{}} : out;
    if (card < static_cast<long>(s.size()))
        return out;
    std::vector<std::pair<int, int>> acc;
    compositions_rec(s, card, 0, acc, out);
    return out;
}

std::vector<Multiset> partition_representatives(int m)
{
    if (m < 1)
        throw std::invalid_argument("partition_representatives requires m >= 1");
    std::vector<Multiset> out;
    std::vector<int> parts;
    partitions_rec(m, m, parts, out);
    return out;
}

}  // namespace laby
