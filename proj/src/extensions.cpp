#include "petrie/extensions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace petrie {

namespace {

void check_right(int k, const RightSpec& spec) {
  const int n = spec.size();
  if (n < 1) throw PreconditionError("right spec: filler must be nonempty");
  if (spec.filler.first != k + 1)
    throw PreconditionError("right spec: filler must permute {" + std::to_string(k + 1) + ".." +
                            std::to_string(k + n) + "} for a degree-" + std::to_string(k) + " base");
  if (!spec.filler.valid()) throw PreconditionError("right spec: filler is not a permutation of its range");
  if (spec.slot < k + 1 || spec.slot > k + n)
    throw PreconditionError("right spec: slot " + std::to_string(spec.slot) + " outside [" +
                            std::to_string(k + 1) + ", " + std::to_string(k + n) + "]");
}

void check_left(const LeftSpec& spec) {
  const int m = spec.size();
  if (m < 1) throw PreconditionError("left spec: filler must be nonempty");
  if (spec.slot < 1 || spec.slot > m)
    throw PreconditionError("left spec: slot " + std::to_string(spec.slot) + " outside [1, " + std::to_string(m) + "]");
}

std::vector<int> iota_from(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), first);
  return v;
}

// Relative dual of a permutation of {first..first+n-1}, placed at new_first.
RangePermutation dual_range(const RangePermutation& r, int new_first) {
  const int n = static_cast<int>(r.images.size());
  RangePermutation out{new_first, std::vector<int>(r.images.size())};
  for (int i = 1; i <= n; ++i) {
    const int rel = r.images[static_cast<std::size_t>(n - i)] - r.first + 1;
    out.images[static_cast<std::size_t>(i - 1)] = new_first + n - rel;
  }
  return out;
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Right: return "right";
    case Mode::Left: return "left";
    case Mode::TwoSided: return "two-sided";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "right") return Mode::Right;
  if (text == "left") return Mode::Left;
  if (text == "two-sided" || text == "two_sided" || text == "twosided") return Mode::TwoSided;
  throw ParseError("unknown mode '" + std::string(text) + "' (expected right, left or two-sided)");
}

Permutation right_extend(const Permutation& base, const RightSpec& spec) {
  const int k = base.degree();
  check_right(k, spec);
  const int n = spec.size();
  std::vector<int> v(static_cast<std::size_t>(k + n));
  for (int i = 1; i <= k - 1; ++i) v[i - 1] = base(i);
  v[k - 1] = spec.filler(spec.slot);
  for (int j = k + 1; j <= k + n; ++j) v[j - 1] = j == spec.slot ? base(k) : spec.filler(j);
  return Permutation(std::move(v));
}

Permutation left_extend(const Permutation& base, const LeftSpec& spec) {
  check_left(spec);
  const int k = base.degree();
  const int m = spec.size();
  const int s = spec.slot;
  std::vector<int> v(static_cast<std::size_t>(m + k));
  for (int i = 1; i <= m; ++i) v[i - 1] = i == s ? m + base(1) : spec.filler(i);
  v[m] = spec.filler(s);
  for (int j = m + 2; j <= m + k; ++j) v[j - 1] = m + base(j - m);
  return Permutation(std::move(v));
}

Permutation two_sided_extend(const Permutation& base, const TwoSidedSpec& spec) {
  check_left(spec.left);
  const int k = base.degree();
  const int m = spec.left.size();
  check_right(m + k, spec.right);
  const int n = spec.right.size();
  const int s = spec.left.slot;
  const int t = spec.right.slot;
  if (k < 2) throw PreconditionError("two-sided extension needs a base of degree >= 2");
  std::vector<int> v(static_cast<std::size_t>(m + k + n));
  for (int i = 1; i <= m; ++i) v[i - 1] = i == s ? m + base(1) : spec.left.filler(i);
  v[m] = spec.left.filler(s);
  for (int j = m + 2; j <= m + k - 1; ++j) v[j - 1] = m + base(j - m);
  v[m + k - 1] = spec.right.filler(t);
  for (int j = m + k + 1; j <= m + k + n; ++j) v[j - 1] = j == t ? m + base(k) : spec.right.filler(j);
  return Permutation(std::move(v));
}

Permutation extend(const Permutation& base, const ExtensionSpec& spec) {
  return std::visit(
      [&](const auto& s) -> Permutation {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RightSpec>) return right_extend(base, s);
        else if constexpr (std::is_same_v<T, LeftSpec>) return left_extend(base, s);
        else return two_sided_extend(base, s);
      },
      spec);
}

std::optional<RightDecomposition> decompose_right(const Permutation& tau, int k) {
  const int total = tau.degree();
  if (k < 1 || k >= total) return std::nullopt;
  if (tau(k) <= k) return std::nullopt;
  int t = 0;
  for (int j = k + 1; j <= total; ++j) {
    if (tau(j) <= k) {
      if (t) return std::nullopt;
      t = j;
    }
  }
  if (!t) return std::nullopt;
  std::vector<int> base(static_cast<std::size_t>(k));
  for (int i = 1; i <= k - 1; ++i) base[i - 1] = tau(i);
  base[k - 1] = tau(t);
  RangePermutation beta{k + 1, std::vector<int>(static_cast<std::size_t>(total - k))};
  for (int j = k + 1; j <= total; ++j) beta.images[static_cast<std::size_t>(j - k - 1)] = j == t ? tau(k) : tau(j);
  return RightDecomposition{Permutation(std::move(base)), RightSpec{std::move(beta), t}};
}

std::optional<LeftDecomposition> decompose_left(const Permutation& tau, int m) {
  const int total = tau.degree();
  if (m < 1 || m >= total) return std::nullopt;
  if (tau(m + 1) > m) return std::nullopt;
  int s = 0;
  for (int i = 1; i <= m; ++i) {
    if (tau(i) > m) {
      if (s) return std::nullopt;
      s = i;
    }
  }
  if (!s) return std::nullopt;
  const int k = total - m;
  std::vector<int> base(static_cast<std::size_t>(k));
  base[0] = tau(s) - m;
  for (int j = 2; j <= k; ++j) base[j - 1] = tau(j + m) - m;
  std::vector<int> alpha(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) alpha[i - 1] = i == s ? tau(m + 1) : tau(i);
  return LeftDecomposition{Permutation(std::move(base)), LeftSpec{Permutation(std::move(alpha)), s}};
}

std::optional<TwoSidedDecomposition> decompose_two_sided(const Permutation& tau, int m, int k) {
  // T(alpha, sigma, beta, s, t) = L(alpha, R(sigma, beta - m, t - m), s).
  if (k < 2) return std::nullopt;
  auto outer = decompose_left(tau, m);
  if (!outer) return std::nullopt;
  auto inner = decompose_right(outer->base, k);
  if (!inner) return std::nullopt;
  RightSpec right = inner->spec;
  right.filler.first += m;
  for (int& v : right.filler.images) v += m;
  right.slot += m;
  return TwoSidedDecomposition{inner->base, TwoSidedSpec{outer->spec, std::move(right)}};
}

ExtensionSpec mirror(const ExtensionSpec& spec, int k) {
  return std::visit(
      [k](const auto& s) -> ExtensionSpec {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RightSpec>) {
          const int n = s.size();
          RangePermutation a = dual_range(s.filler, 1);
          return LeftSpec{Permutation(std::move(a.images)), k + n + 1 - s.slot};
        } else if constexpr (std::is_same_v<T, LeftSpec>) {
          const int m = s.size();
          RangePermutation alpha{1, s.filler.images()};
          return RightSpec{dual_range(alpha, k + 1), k + m + 1 - s.slot};
        } else {
          const int m = s.left.size();
          const int n = s.right.size();
          const int total = m + k + n;
          RangePermutation a = dual_range(s.right.filler, 1);
          RangePermutation alpha{1, s.left.filler.images()};
          return TwoSidedSpec{LeftSpec{Permutation(std::move(a.images)), total + 1 - s.right.slot},
                              RightSpec{dual_range(alpha, n + k + 1), total + 1 - s.left.slot}};
        }
      },
      spec);
}

unsigned long long count_specs(int size) {
  unsigned long long f = 1;
  for (int i = 2; i <= size; ++i) f *= static_cast<unsigned long long>(i);
  return f * static_cast<unsigned long long>(size);
}

RightSpecStream::RightSpecStream(int k, int n) : k_(k), n_(n), filler_(iota_from(k + 1, n)), slot_(k + 1) {
  if (k < 1 || n < 1) throw PreconditionError("right spec stream: need k >= 1 and n >= 1");
}

std::optional<RightSpec> RightSpecStream::next() {
  if (done_) return std::nullopt;
  RightSpec out{RangePermutation{k_ + 1, filler_}, slot_};
  if (++slot_ > k_ + n_) {
    slot_ = k_ + 1;
    if (!std::next_permutation(filler_.begin(), filler_.end())) done_ = true;
  }
  return out;
}

LeftSpecStream::LeftSpecStream(int m) : m_(m), filler_(iota_from(1, m)) {
  if (m < 1) throw PreconditionError("left spec stream: need m >= 1");
}

std::optional<LeftSpec> LeftSpecStream::next() {
  if (done_) return std::nullopt;
  LeftSpec out{Permutation(filler_), slot_};
  if (++slot_ > m_) {
    slot_ = 1;
    if (!std::next_permutation(filler_.begin(), filler_.end())) done_ = true;
  }
  return out;
}

TwoSidedSpecStream::TwoSidedSpecStream(int m, int k, int n)
    : m_(m), k_(k), n_(n), left_(m), cur_left_(left_.next()), right_(m + k, n) {}

std::optional<TwoSidedSpec> TwoSidedSpecStream::next() {
  while (cur_left_) {
    if (auto r = right_.next()) return TwoSidedSpec{*cur_left_, std::move(*r)};
    cur_left_ = left_.next();
    right_ = RightSpecStream(m_ + k_, n_);
  }
  return std::nullopt;
}

SynchronizedStream::SynchronizedStream(const Permutation& sigma, const Permutation& rho, Mode mode, int m, int n)
    : sigma_(sigma), rho_(rho), mode_(mode), specs_(std::in_place_index<1>, std::max(m, 1)) {
  if (sigma.degree() != rho.degree())
    throw DimensionMismatch("synchronized extensions need bases of equal degree (" + std::to_string(sigma.degree()) +
                            " vs " + std::to_string(rho.degree()) + ")");
  const int k = sigma.degree();
  switch (mode) {
    case Mode::Right: specs_.emplace<RightSpecStream>(k, n); break;
    case Mode::Left: specs_.emplace<LeftSpecStream>(m); break;
    case Mode::TwoSided: specs_.emplace<TwoSidedSpecStream>(m, k, n); break;
  }
}

std::optional<SynchronizedPair> SynchronizedStream::next() {
  return std::visit(
      [this](auto& stream) -> std::optional<SynchronizedPair> {
        auto spec = stream.next();
        if (!spec) return std::nullopt;
        ExtensionSpec es = *spec;
        return SynchronizedPair{es, extend(sigma_, es), extend(rho_, es)};
      },
      specs_);
}

SynchronizedStream enumerate_synchronized_right(const Permutation& sigma, const Permutation& rho, int n) {
  return SynchronizedStream(sigma, rho, Mode::Right, 0, n);
}

SynchronizedStream enumerate_synchronized_left(const Permutation& sigma, const Permutation& rho, int m) {
  return SynchronizedStream(sigma, rho, Mode::Left, m, 0);
}

SynchronizedStream enumerate_synchronized_two_sided(const Permutation& sigma, const Permutation& rho, int m, int n) {
  return SynchronizedStream(sigma, rho, Mode::TwoSided, m, n);
}

std::vector<Shape> shapes_up_to(Mode mode, int bound_m, int bound_n) {
  std::vector<Shape> out;
  switch (mode) {
    case Mode::Right:
      for (int n = 1; n <= bound_n; ++n) out.push_back({0, n});
      break;
    case Mode::Left:
      for (int m = 1; m <= bound_m; ++m) out.push_back({m, 0});
      break;
    case Mode::TwoSided:
      for (int total = 2; total <= bound_m + bound_n; ++total)
        for (int m = 1; m <= bound_m; ++m)
          if (int n = total - m; n >= 1 && n <= bound_n) out.push_back({m, n});
      break;
  }
  return out;
}

namespace {

nlohmann::json right_json(const RightSpec& s) { return {{"filler", s.filler.images}, {"slot", s.slot}}; }
nlohmann::json left_json(const LeftSpec& s) { return {{"filler", s.filler.images()}, {"slot", s.slot}}; }

RightSpec right_from(const nlohmann::json& j) {
  auto v = j.at("filler").get<std::vector<int>>();
  if (v.empty()) throw ParseError("right spec: empty filler");
  RightSpec r{RangePermutation{*std::min_element(v.begin(), v.end()), std::move(v)}, j.at("slot").get<int>()};
  if (!r.filler.valid()) throw ParseError("right spec: filler must permute a contiguous range");
  return r;
}

LeftSpec left_from(const nlohmann::json& j) {
  auto v = j.at("filler").get<std::vector<int>>();
  try {
    return LeftSpec{Permutation(std::move(v)), j.at("slot").get<int>()};
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("left spec: ") + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const ExtensionSpec& spec) {
  return std::visit(
      [](const auto& s) -> nlohmann::json {
        using T = std::decay_t<decltype(s)>;
        nlohmann::json j;
        if constexpr (std::is_same_v<T, RightSpec>) {
          j = right_json(s);
          j["kind"] = "right";
        } else if constexpr (std::is_same_v<T, LeftSpec>) {
          j = left_json(s);
          j["kind"] = "left";
        } else {
          j["kind"] = "two-sided";
          j["left"] = left_json(s.left);
          j["right"] = right_json(s.right);
        }
        return j;
      },
      spec);
}

ExtensionSpec spec_from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "right") return right_from(j);
    if (kind == "left") return left_from(j);
    if (kind == "two-sided") return TwoSidedSpec{left_from(j.at("left")), right_from(j.at("right"))};
    throw ParseError("unknown spec kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed extension spec: ") + e.what());
  }
}

std::string describe(const ExtensionSpec& spec) {
  auto list = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << ']';
    return os.str();
  };
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RightSpec>)
          return "right filler " + list(s.filler.images) + " slot " + std::to_string(s.slot);
        else if constexpr (std::is_same_v<T, LeftSpec>)
          return "left filler " + list(s.filler.images()) + " slot " + std::to_string(s.slot);
        else
          return "two-sided left filler " + list(s.left.filler.images()) + " slot " + std::to_string(s.left.slot) +
                 ", right filler " + list(s.right.filler.images) + " slot " + std::to_string(s.right.slot);
      },
      spec);
}

}  // namespace petrie
