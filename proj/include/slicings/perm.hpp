#ifndef SLICINGS_PERM_HPP
#define SLICINGS_PERM_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "slicings/errors.hpp"
#include "slicings/rules.hpp"

namespace slicings {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Baxter permutations avoid the vincular patterns 2-41-3 and 3-14-2: no
// positions i < j, k > j + 1 with s[j+1] < s[i] < s[k] < s[j], and no
// occurrences of the reverse inequality chain.
inline bool is_baxter(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  for (int j = 0; j + 1 < n; ++j)
    for (int i = 0; i < j; ++i)
      for (int k = j + 2; k < n; ++k) {
        if (p[j + 1] < p[i] && p[i] < p[k] && p[k] < p[j]) return false;
        if (p[j] < p[k] && p[k] < p[i] && p[i] < p[j + 1]) return false;
      }
  return true;
}

enum class BivincularPattern { P41323, P42313 };

// Occurrence test for the two bivincular patterns of length 5: positions
// i < j < k < l < q with s[q] = s[k] + 1 and s[q] < s[i], where the middle
// three entries form 132 (for 41323+) or 231 (for 42313+), reading the
// pattern on values s[j], s[k], s[l].
inline bool contains_bivincular(const Permutation& p, BivincularPattern which) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          for (int q = l + 1; q < n; ++q) {
            if (p[q] != p[k] + 1 || p[q] >= p[i]) continue;
            if (which == BivincularPattern::P41323) {
              if (p[j] < p[l] && p[l] < p[k]) return true;
            } else {
              if (p[l] < p[j] && p[j] < p[k]) return true;
            }
          }
  return false;
}

// Class S: Baxter permutations avoiding both bivincular patterns.
inline bool in_class_s(const Permutation& p) {
  return is_baxter(p) &&
         !contains_bivincular(p, BivincularPattern::P41323) &&
         !contains_bivincular(p, BivincularPattern::P42313);
}

namespace detail {

// True when the suffix starting after position `pos` contains values
// a, b, c at increasing positions with a > threshold, b < a and c = a + 1.
inline bool suffix_has_212(const Permutation& p, int pos, int threshold) {
  const int n = static_cast<int>(p.size());
  for (int a = pos + 1; a < n; ++a) {
    if (p[a] <= threshold) continue;
    for (int b = a + 1; b < n; ++b) {
      if (p[b] >= p[a]) continue;
      for (int c = b + 1; c < n; ++c)
        if (p[c] == p[a] + 1) return true;
    }
  }
  return false;
}

}  // namespace detail

// Insertion slots for growing a class-S permutation by its maximum value.
// Left sites sit immediately left of certain left-to-right maxima, right
// sites immediately right of the right-to-left maxima.  Returned as
// insertion indices in 0..n, each list in increasing position order.
struct ActiveSites {
  std::vector<int> left;
  std::vector<int> right;
};

inline ActiveSites active_sites_s(const Permutation& p) {
  if (!in_class_s(p)) throw NotInS();
  const int n = static_cast<int>(p.size());
  ActiveSites sites;
  int best = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] > best) {
      best = p[i];
      // The site left of a left-to-right maximum stays active as long as the
      // suffix right of the maximum has no blocking pattern.
      if (!detail::suffix_has_212(p, i, p[i])) sites.left.push_back(i);
    }
  }
  best = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (p[i] > best) {
      best = p[i];
      sites.right.push_back(i + 1);
    }
  }
  std::sort(sites.right.begin(), sites.right.end());
  return sites;
}

inline Permutation insert_max(const Permutation& p, int site) {
  Permutation q = p;
  q.insert(q.begin() + site, static_cast<int>(p.size()) + 1);
  return q;
}

// Generating-tree label of a class-S permutation: number of left and right
// active sites.
inline Label class_s_label(const Permutation& p) {
  const ActiveSites sites = active_sites_s(p);
  return Label::binary(static_cast<int>(sites.left.size()),
                       static_cast<int>(sites.right.size()));
}

// Children of a class-S permutation under the NewSch growth: insertions at
// the left sites from left to right, then at the right sites from right to
// left (the site right of the maximum coming last).
inline std::vector<Permutation> children_s(const Permutation& p) {
  const ActiveSites sites = active_sites_s(p);
  std::vector<Permutation> out;
  for (int site : sites.left) out.push_back(insert_max(p, site));
  for (auto it = sites.right.rbegin(); it != sites.right.rend(); ++it)
    out.push_back(insert_max(p, *it));
  return out;
}

// Class-S permutations of size n in growth order.
inline std::vector<Permutation> class_s_level(int n) {
  std::vector<Permutation> cur{Permutation{1}};
  for (int sz = 1; sz < n; ++sz) {
    std::vector<Permutation> next;
    for (const Permutation& p : cur)
      for (Permutation& c : children_s(p)) next.push_back(std::move(c));
    cur = std::move(next);
  }
  return cur;
}

// Permutation sitting at a given child-index path of the Baxter generating
// tree, under the growth of Baxter permutations by maximum insertion: child
// p < h inserts left of the (p+1)-th left-to-right maximum, child h + j - 1
// inserts right of the j-th right-to-left maximum counted from the right.
inline Permutation bax_tree_permutation(const std::vector<int>& path) {
  Permutation p{1};
  for (int child : path) {
    std::vector<int> left, right;
    int best = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (p[i] > best) {
        best = p[i];
        left.push_back(i);
      }
    best = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] > best) {
        best = p[i];
        right.push_back(i + 1);
      }
    const int h = static_cast<int>(left.size());
    const int k = static_cast<int>(right.size());
    if (child < 0 || child >= h + k)
      throw std::invalid_argument("child index out of range");
    const int site = child < h ? left[child] : right[child - h];
    p = insert_max(p, site);
  }
  return p;
}

// Children of a Baxter permutation under growth by maximum insertion, in
// production order: left of each left-to-right maximum from the left, then
// right of each right-to-left maximum from the right.
inline std::vector<Permutation> children_baxter(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<Permutation> out;
  int best = 0;
  for (int i = 0; i < n; ++i)
    if (p[i] > best) {
      best = p[i];
      out.push_back(insert_max(p, i));
    }
  best = 0;
  for (int i = n - 1; i >= 0; --i)
    if (p[i] > best) {
      best = p[i];
      out.push_back(insert_max(p, i + 1));
    }
  return out;
}

// Baxter permutations of size n in growth order.
inline std::vector<Permutation> baxter_level(int n) {
  std::vector<Permutation> cur{Permutation{1}};
  for (int sz = 1; sz < n; ++sz) {
    std::vector<Permutation> next;
    for (const Permutation& p : cur)
      for (Permutation& c : children_baxter(p)) next.push_back(std::move(c));
    cur = std::move(next);
  }
  return cur;
}

inline std::string to_string(const Permutation& p) {
  std::string s;
  const bool separated = p.size() > 9;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i && separated) s.push_back(',');
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace slicings

#endif
