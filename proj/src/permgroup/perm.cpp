#include "pellab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pellab/error.hpp"

namespace pellab {

namespace {

void require_same_size(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SizeMismatch, "permutations act on " + std::to_string(a.size()) +
                                             " and " + std::to_string(b.size()) + " points");
  }
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Perm Perm::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int y : images) {
    if (y < 1 || static_cast<std::size_t>(y) > images.size() || seen[y - 1]) {
      throw Error(ErrorCode::InvalidArgument, "image sequence is not a bijection");
    }
    seen[y - 1] = true;
  }
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cyc) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<bool> used(n, false);
  for (const auto& c : cyc) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 1 || static_cast<std::size_t>(x) > n || used[x - 1]) {
        throw Error(ErrorCode::InvalidArgument,
                    "cycle entry " + std::to_string(x) + " out of range or repeated");
      }
      used[x - 1] = true;
      v[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(v));
}

Perm Perm::descending_cycle(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i == 0 ? static_cast<int>(n) : static_cast<int>(i);
  return Perm(std::move(v));
}

Perm Perm::transposition(std::size_t n, int a, int b) { return from_cycles(n, {{a, b}}); }

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  require_same_size(a, b);
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(static_cast<int>(i + 1)));
  return Perm::from_images(std::move(v));
}

Perm inverse(const Perm& a) {
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[a.images()[i] - 1] = static_cast<int>(i + 1);
  return Perm::from_images(std::move(v));
}

Perm conjugate(const Perm& a, const Perm& g) {
  require_same_size(a, g);
  return compose_perm(inverse(g), compose_perm(a, g));
}

Perm power(const Perm& a, long k) {
  const Perm base = k < 0 ? inverse(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Perm result = Perm::identity(a.size());
  Perm sq = base;
  while (e > 0) {
    if (e & 1UL) result = compose_perm(result, sq);
    e >>= 1UL;
    if (e > 0) sq = compose_perm(sq, sq);
  }
  return result;
}

std::vector<int> cycle_type(const Perm& a) {
  std::vector<int> lengths;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = static_cast<int>(i + 1); !seen[x - 1]; x = a(x)) {
      seen[x - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<int> fixed_points(const Perm& a) {
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.images()[i] == static_cast<int>(i + 1)) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

std::vector<std::vector<int>> cycles(const Perm& a) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a.images()[i] == static_cast<int>(i + 1)) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(i + 1); !seen[x - 1]; x = a(x)) {
      seen[x - 1] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int branching(const Perm& a) {
  return static_cast<int>(a.size()) - static_cast<int>(cycle_type(a).size());
}

bool is_full_cycle(const Perm& a) {
  const auto type = cycle_type(a);
  return type.size() == 1 && static_cast<std::size_t>(type.front()) == a.size();
}

bool is_transitive(std::span<const Perm> gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  const std::size_t n = gens.front().size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = n;
  for (const auto& g : gens) {
    require_same_size(gens.front(), g);
    for (std::size_t x = 1; x <= n; ++x) {
      const int rx = find_root(parent, static_cast<int>(x));
      const int ry = find_root(parent, g(static_cast<int>(x)));
      if (rx != ry) {
        parent[rx] = ry;
        --components;
      }
    }
  }
  return components == 1;
}

std::string to_string(const Perm& a) {
  const auto cs = cycles(a);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Perm parse_perm(std::string_view text, std::size_t n) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse,
                "permutation parse error at position " + std::to_string(pos) + ": " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<std::vector<int>> cyc;
  std::vector<bool> used(n, false);
  skip_ws();
  if (pos == text.size()) fail("empty permutation");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    std::vector<int> c;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a point label");
      if (pos - start > 9) fail("point label too large");
      const int x = std::stoi(std::string(text.substr(start, pos - start)));
      if (x < 1 || static_cast<std::size_t>(x) > n) {
        pos = start;
        fail("point " + std::to_string(x) + " outside 1.." + std::to_string(n));
      }
      if (used[x - 1]) {
        pos = start;
        fail("point " + std::to_string(x) + " repeated");
      }
      used[x - 1] = true;
      c.push_back(x);
      skip_ws();
      if (pos == text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    cyc.push_back(std::move(c));
  }
  return Perm::from_cycles(n, cyc);
}

}  // namespace pellab
