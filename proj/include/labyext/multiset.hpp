#pragma once

#include <string>
#include <utility>
#include <vector>

namespace laby {

// Ground elements are positive integers bounded by a process-wide cap.
// Everything in scope lives on supports inside [n] for small n; the cap
// catches runaway enumeration early.
int ground_element_cap();
void set_ground_element_cap(int cap);

// A finite multiset over positive integers, stored as (element, degree)
// pairs with strictly increasing elements and degrees >= 1.  Immutable
// value type; equality is structural.
class Multiset {
  public:
    Multiset() = default;

    // Builds from an arbitrary list of elements ("1,1,2" style).
    static Multiset from_elements(const std::vector<int>& elems);
    // Builds from (element, degree) pairs; degrees of repeated elements add up.
    static Multiset from_pairs(const std::vector<std::pair<int, int>>& pairs);

    const std::vector<std::pair<int, int>>& pairs() const { return entries_; }

    bool empty() const { return entries_.empty(); }
    long cardinality() const;
    int support_size() const { return static_cast<int>(entries_.size()); }
    std::vector<int> support() const;
    int degree_of(int element) const;
    bool contains(int element) const { return degree_of(element) > 0; }
    // True when every degree equals 1.
    bool is_strict() const;

    // The multiset expanded as a nondecreasing word, e.g. {1,1,2}.
    std::vector<int> word() const;

    friend Multiset operator+(const Multiset& a, const Multiset& b);

    bool operator==(const Multiset& o) const { return entries_ == o.entries_; }
    bool operator!=(const Multiset& o) const { return !(*this == o); }
    // Canonical order: lexicographic on the expanded word.  This fixes all
    // row/column orders downstream, keeping golden outputs byte-stable.
    bool operator<(const Multiset& o) const;

    // Prints "1^3 2^1"; degree 1 is printed explicitly.
    std::string to_string() const;
    // Accepts "1^3 2" (degree 1 may be elided) and the "1,1,1,2" list form.
    static Multiset parse(const std::string& text);

  private:
    std::vector<std::pair<int, int>> entries_;
};

// All multisets with support exactly `supp` and cardinality exactly `card`,
// in canonical order.  Empty when card < |supp| (no such multiset).
std::vector<Multiset> multisets_with_support_and_card(const std::vector<int>& supp, long card);

// One representative {1^l1, 2^l2, ...} per integer partition l1 >= l2 >= ...
// of m, in canonical order ({1^m} first).  Rejects m < 1.
std::vector<Multiset> partition_representatives(int m);

}  // namespace laby
