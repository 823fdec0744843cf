#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace brute {

std::vector<std::string> dyck_words(int n, int m) {
  std::vector<std::string> out;
  std::string w;
  std::function<void(int, int)> go = [&](int ns, int es) {
    if (ns == n && es == m * n) {
      out.push_back(w);
      return;
    }
    if (ns < n) {
      w.push_back('N');
      go(ns + 1, es);
      w.pop_back();
    }
    if (es < m * n && m * ns >= es + 1) {
      w.push_back('E');
      go(ns, es + 1);
      w.pop_back();
    }
  };
  go(0, 0);
  return out;
}

int area(const std::string& word, int m) {
  const int rows = static_cast<int>(std::count(word.begin(), word.end(), 'N'));
  std::vector<int> start(rows);
  int x = 0, y = 0;
  for (char c : word) {
    if (c == 'N') start[y++] = x;
    else ++x;
  }
  int cells = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = start[r]; c < m * rows; ++c)
      if (c + 1 <= m * r) ++cells;
  return cells;
}

std::vector<int> diagonals(const std::string& word, int m) {
  std::vector<int> a;
  int x = 0, y = 0;
  for (char c : word) {
    if (c == 'N') {
      a.push_back(m * y - x);
      ++y;
    } else {
      ++x;
    }
  }
  return a;
}

bool column_increasing(const std::string& word, const std::vector<int>& labels) {
  int row = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 'N') continue;
    if (i + 1 < word.size() && word[i + 1] == 'N' && labels[row] > labels[row + 1]) return false;
    ++row;
  }
  return true;
}

// For each of the m shifts k, a pair attacks when the (shifted) diagonal gap
// lands in the window for its label order.
int dinv(const std::string& word, const std::vector<int>& labels, int m) {
  const auto a = diagonals(word, m);
  const int n = static_cast<int>(a.size());
  int total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < m; ++k) {
        const int g = a[i] - a[j] + k;
        if (labels[i] < labels[j] && g >= 0 && g <= m - 1) ++total;
        if (labels[i] > labels[j] && g >= 1 && g <= m) ++total;
      }
  return total;
}

std::vector<int> reading_word(const std::string& word, const std::vector<int>& labels, int m) {
  const auto a = diagonals(word, m);
  const int n = static_cast<int>(a.size());
  const int top = *std::max_element(a.begin(), a.end());
  std::vector<int> out;
  for (int diag = top; diag >= 0; --diag)
    for (int row = n - 1; row >= 0; --row)
      if (a[row] == diag) out.push_back(labels[row]);
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition p;
  std::function<void(int, int)> go = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(p);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      p.push_back(part);
      go(left - part, part);
      p.pop_back();
    }
  };
  go(n, n);
  return out;
}

long long kostka(const Partition& shape, const Partition& content) {
  // Fill letter 1, 2, ... as horizontal strips, growing from the empty shape.
  const std::size_t rows = shape.size();
  std::function<long long(std::size_t, std::vector<int>&)> go = [&](std::size_t letter, std::vector<int>& cur) {
    if (letter == content.size()) return cur == std::vector<int>(shape.begin(), shape.end()) ? 1LL : 0LL;
    long long count = 0;
    std::vector<int> next = cur;
    std::function<void(std::size_t, int)> strip = [&](std::size_t r, int left) {
      if (r == rows) {
        if (left == 0) count += go(letter + 1, next);
        return;
      }
      const int cap = std::min(shape[r], r == 0 ? shape[0] : cur[r - 1]);
      for (int add = 0; add <= left && cur[r] + add <= cap; ++add) {
        next[r] = cur[r] + add;
        strip(r + 1, left - add);
      }
      next[r] = cur[r];
    };
    strip(0, content[letter]);
    return count;
  };
  std::vector<int> empty(rows, 0);
  return go(0, empty);
}

Expansion nabla(int n, int m) {
  std::map<unsigned, Poly> fund;
  for (const auto& w : dyck_words(n, m)) {
    const int ar = area(w, m);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    do {
      if (!column_increasing(w, labels)) continue;
      const auto rw = reading_word(w, labels, m);
      std::vector<int> pos(n + 1);
      for (int i = 0; i < n; ++i) pos[rw[i]] = i;
      unsigned mask = 0;
      for (int i = 1; i < n; ++i)
        if (pos[i + 1] < pos[i]) mask |= 1u << (i - 1);
      fund[mask][{dinv(w, labels, m), ar}] += 1;
    } while (std::next_permutation(labels.begin(), labels.end()));
  }

  const auto parts = partitions(n);
  // monomial coefficient of x^lambda in F_S is [S within partial sums of lambda]
  std::map<Partition, Poly> mono;
  for (const auto& lambda : parts) {
    unsigned sums = 0;
    int s = 0;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
      s += lambda[i];
      sums |= 1u << (s - 1);
    }
    Poly& acc = mono[lambda];
    for (const auto& [mask, p] : fund)
      if ((mask & ~sums) == 0)
        for (const auto& [k, c] : p) acc[k] += c;
  }

  // s_nu = sum_lambda K_{nu,lambda} m_lambda; solve from the top partition down.
  Expansion out;
  for (const auto& lambda : parts) {
    Poly c = mono[lambda];
    for (const auto& [nu, cn] : out) {
      const long long k = kostka(nu, lambda);
      if (!k) continue;
      for (const auto& [key, v] : cn) c[key] -= k * v;
    }
    for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
    out[lambda] = c;
  }
  return out;
}

std::string to_string(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p) {
    os << (first ? "" : " + ") << c << "*q^" << k.first << "*t^" << k.second;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace brute
