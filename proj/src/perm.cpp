#include "petrie/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace petrie {

namespace {

bool is_bijection(const std::vector<int>& images) {
  std::vector<char> seen(images.size() + 1, 0);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string describe(const std::vector<int>& images) {
  std::ostringstream os;
  for (std::size_t i = 0; i < images.size(); ++i) os << (i ? " " : "") << images[i];
  return os.str();
}

int parse_int(std::string_view tok, std::string_view whole) {
  if (tok.empty()) throw ParseError("empty token in '" + std::string(whole) + "'");
  int v = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw ParseError("point out of range in '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  while (i < s.size()) {
    while (i < s.size() && sep(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !sep(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Permutation parse_cycles(std::string_view text) {
  std::string_view body = text;
  int explicit_degree = 0;
  if (auto at = text.rfind('@'); at != std::string_view::npos) {
    explicit_degree = parse_int(trim(text.substr(at + 1)), text);
    if (explicit_degree < 1) throw ParseError("degree must be positive in '" + std::string(text) + "'");
    body = text.substr(0, at);
  }

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  body = trim(body);
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    if (body[i] != '(') throw ParseError("malformed cycle notation '" + std::string(text) + "'");
    auto close = body.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unclosed cycle in '" + std::string(text) + "'");
    std::string_view inner = trim(body.substr(i + 1, close - i - 1));
    if (inner.find('(') != std::string_view::npos)
      throw ParseError("nested cycle in '" + std::string(text) + "'");
    std::vector<int> cyc;
    auto toks = split_tokens(inner);
    if (toks.size() == 1 && toks[0].size() > 1) {
      for (char c : toks[0]) cyc.push_back(parse_int(std::string_view(&c, 1), text));
    } else {
      for (auto t : toks) cyc.push_back(parse_int(t, text));
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }

  int max_point = 0;
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1) throw ParseError("point out of range in '" + std::string(text) + "'");
      max_point = std::max(max_point, v);
    }
  }
  int n = explicit_degree ? explicit_degree : max_point;
  if (n < 1) throw ParseError("cannot infer degree of '" + std::string(text) + "'; use the @n suffix");
  if (max_point > n) throw ParseError("point " + std::to_string(max_point) + " exceeds degree in '" + std::string(text) + "'");

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (used[v]) throw ParseError("point " + std::to_string(v) + " repeated in '" + std::string(text) + "'");
      used[v] = 1;
    }
    for (std::size_t j = 0; j < c.size(); ++j) images[c[j] - 1] = c[(j + 1) % c.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace

StepMap::StepMap(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw PreconditionError("map must have degree >= 1");
  const int n = degree();
  for (int v : images_) {
    if (v < 1 || v > n) throw PreconditionError("map value " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  for (std::size_t i = 0; i + 1 < images_.size(); ++i) {
    if (images_[i] == images_[i + 1])
      throw AdmissibilityError("map takes value " + std::to_string(images_[i]) + " at consecutive points " +
                               std::to_string(i + 1) + " and " + std::to_string(i + 2));
  }
}

bool StepMap::is_bijective() const { return is_bijection(images_); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw PreconditionError("permutation must have degree >= 1");
  if (!is_bijection(images_)) throw PreconditionError("not a permutation: [" + describe(images_) + "]");
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycle(std::span<const int> chain, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    int from = chain[i];
    if (from < 1 || from > n) throw PreconditionError("cycle point out of range");
    v[from - 1] = chain[(i + 1) % chain.size()];
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

Permutation parse_permutation(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty permutation text");
  if (t.front() == '(') return parse_cycles(t);

  std::string cleaned(t);
  for (char& c : cleaned) {
    if (c == '[' || c == ']') c = ' ';
  }
  std::vector<int> images;
  for (auto tok : split_tokens(cleaned)) images.push_back(parse_int(tok, text));
  if (images.empty()) throw ParseError("empty permutation text");
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : images) {
    if (v < 1 || v > n) throw ParseError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n) + " in '" + std::string(text) + "'");
    if (seen[v]) throw ParseError("duplicate value " + std::to_string(v) + " in '" + std::string(text) + "'");
    seen[v] = 1;
  }
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& p) { return describe(p.images()); }

std::string to_cycle_string(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::ostringstream os;
  int max_moved = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start] || p(start) == start) continue;
    os << '(';
    int x = start;
    bool first = true;
    do {
      seen[x] = 1;
      max_moved = std::max(max_moved, x);
      os << (first ? "" : " ") << x;
      first = false;
      x = p(x);
    } while (x != start);
    os << ')';
  }
  std::string s = os.str();
  if (s.empty()) s = "()";
  if (max_moved < n) s += "@" + std::to_string(n);
  return s;
}

StepMap compose(const StepMap& outer, const StepMap& inner) {
  if (outer.degree() != inner.degree())
    throw DimensionMismatch("compose: degrees " + std::to_string(outer.degree()) + " and " +
                            std::to_string(inner.degree()) + " differ");
  std::vector<int> v(static_cast<std::size_t>(inner.degree()));
  for (int i = 1; i <= inner.degree(); ++i) v[i - 1] = outer(inner(i));
  return StepMap(std::move(v));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree())
    throw DimensionMismatch("compose: degrees " + std::to_string(outer.degree()) + " and " +
                            std::to_string(inner.degree()) + " differ");
  std::vector<int> v(static_cast<std::size_t>(inner.degree()));
  for (int i = 1; i <= inner.degree(); ++i) v[i - 1] = outer(inner(i));
  return Permutation(std::move(v));
}

Permutation dual(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - p(n + 1 - i);
  return Permutation(std::move(v));
}

bool is_cyclic(const Permutation& p) {
  int len = 0;
  int x = 1;
  do {
    x = p(x);
    ++len;
  } while (x != 1);
  return len == p.degree();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool RangePermutation::valid() const {
  std::vector<int> rel;
  rel.reserve(images.size());
  for (int v : images) rel.push_back(v - first + 1);
  return !images.empty() && is_bijection(rel);
}

Permutation family_sigma_nk(int n, int k) {
  if (k < 4 || n < 2 || n > k)
    throw PreconditionError("family_sigma_nk requires k >= 4 and 2 <= n <= k (got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  std::vector<int> v(static_cast<std::size_t>(k));
  v[0] = n;
  for (int i = n; i <= k - 1; ++i) v[i - 1] = i + 1;
  v[k - 1] = n - 1;
  for (int j = 2; j <= n - 1; ++j) v[j - 1] = j - 1;
  return Permutation(std::move(v));
}

std::pair<Permutation, Permutation> family_thm12(int k) {
  if (k < 5) throw PreconditionError("family_thm12 requires k >= 5");
  std::vector<int> alpha{1, 3, 2};
  for (int i = 5; i <= k; ++i) alpha.push_back(i);
  alpha.push_back(4);
  std::vector<int> theta{1};
  for (int i = k; i >= 5; --i) theta.push_back(i);
  theta.insert(theta.end(), {2, 3, 4});
  return {Permutation::from_cycle(alpha, k), Permutation::from_cycle(theta, k)};
}

std::pair<Permutation, Permutation> family_thm13(int k) {
  if (k < 5) throw PreconditionError("family_thm13 requires k >= 5");
  std::vector<int> beta{1, 3, 2};
  for (int i = 4; i <= k; ++i) beta.push_back(i);
  std::vector<int> delta{1};
  for (int i = k; i >= 5; --i) delta.push_back(i);
  delta.insert(delta.end(), {3, 2, 4});
  return {Permutation::from_cycle(beta, k), Permutation::from_cycle(delta, k)};
}

Cor11Family family_cor11(const Permutation& pi, int k) {
  const int j = pi.degree();
  if (j < 3) throw PreconditionError("family_cor11 requires deg(pi) >= 3");
  if (!(pi(j - 1) < pi(j) && pi(j) < j)) throw PreconditionError("family_cor11 requires pi(j-1) < pi(j) < j");
  if (k < j + 2) throw PreconditionError("family_cor11 requires k >= j + 2");

  std::vector<int> sigma(static_cast<std::size_t>(k)), rho(sigma.size()), mu(sigma.size()), nu(sigma.size());
  for (int x = 1; x <= k; ++x) {
    // sigma
    if (x <= j - 1) sigma[x - 1] = pi(x);
    else if (x <= k - 1) sigma[x - 1] = x + 1;
    else sigma[x - 1] = pi(j);
    // rho
    if (x <= j) rho[x - 1] = pi(x) != j ? pi(x) : j + 1;
    else if (x <= k - 1) rho[x - 1] = x + 1;
    else rho[x - 1] = j;
    // mu
    if (x <= j) mu[x - 1] = pi(x) != j ? pi(x) : k;
    else mu[x - 1] = x - 1;
    // nu
    if (x <= j - 1) nu[x - 1] = pi(x);
    else if (x == j) nu[x - 1] = k;
    else if (x == j + 1) nu[x - 1] = pi(j);
    else nu[x - 1] = x - 1;
  }
  return {Permutation(std::move(sigma)), Permutation(std::move(rho)), Permutation(std::move(mu)),
          Permutation(std::move(nu))};
}

Thm4Family family_thm4_combine(const Permutation& sigma_l, const Permutation& rho_l, const RangePermutation& xi,
                               const RangePermutation& eta, int k) {
  const int l = sigma_l.degree();
  if (l < 4 || k < l + 1) throw PreconditionError("family_thm4_combine requires l >= 4 and k >= l + 1");
  if (rho_l.degree() != l) throw DimensionMismatch("family_thm4_combine: sigma_l and rho_l differ in degree");
  for (const RangePermutation* r : {&xi, &eta}) {
    if (r->first != l - 1 || r->last() != k || !r->valid())
      throw PreconditionError("family_thm4_combine: xi and eta must permute {l-1..k}");
  }
  if (sigma_l(l) != l - 1) throw PreconditionError("family_thm4_combine requires sigma_l(l) = l-1");
  if (!(sigma_l(l - 1) < l - 1)) throw PreconditionError("family_thm4_combine requires sigma_l(l-1) < l-1");
  if (xi(l) != l - 1) throw PreconditionError("family_thm4_combine requires xi(l) = l-1");
  if (eta(l - 1) != l) throw PreconditionError("family_thm4_combine requires eta(l-1) = l");
  if (!(eta(l) > l)) throw PreconditionError("family_thm4_combine requires eta(l) > l");

  std::vector<int> sx(static_cast<std::size_t>(k)), se(sx.size()), re(sx.size());
  for (int x = 1; x <= k; ++x) {
    if (x <= l - 1) {
      sx[x - 1] = sigma_l(x) != l ? sigma_l(x) : xi(l - 1);
      se[x - 1] = sigma_l(x);
      re[x - 1] = rho_l(x);
    } else {
      sx[x - 1] = xi(x);
      se[x - 1] = eta(x);
      re[x - 1] = eta(x) != l - 1 ? eta(x) : rho_l(l);
    }
  }
  return {Permutation(std::move(sx)), Permutation(std::move(se)), Permutation(std::move(re))};
}

}  // namespace petrie
