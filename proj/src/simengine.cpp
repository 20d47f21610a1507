#include "petrie/simengine.hpp"

#include "petrie/algebra.hpp"
#include "petrie/petrie.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace petrie {

std::string to_string(Strength s) { return s == Strength::Similar ? "similar" : "weakly-similar"; }

std::string to_string(Discriminator d) {
  switch (d) {
    case Discriminator::Determinant: return "determinant";
    case Discriminator::Trace: return "trace";
    case Discriminator::Charpoly: return "charpoly";
    case Discriminator::InvariantFactors: return "invariant-factors";
  }
  return "?";
}

Discriminator parse_discriminator(std::string_view text) {
  for (auto d : {Discriminator::Determinant, Discriminator::Trace, Discriminator::Charpoly,
                 Discriminator::InvariantFactors})
    if (to_string(d) == text) return d;
  throw ParseError("unknown discriminator: " + std::string(text));
}

std::string to_string(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Refuted: return "refuted";
    case Verdict::Outcome::ConsistentUpTo: return "consistent";
    case Verdict::Outcome::Certified: return "certified";
  }
  return "?";
}

Bounds bounds_for(Mode mode, int bound) {
  if (bound < 1) throw PreconditionError("bound must be >= 1");
  switch (mode) {
    case Mode::Right: return {0, bound};
    case Mode::Left: return {bound, 0};
    case Mode::TwoSided: return {bound, bound};
  }
  return {};
}

Bounds default_bounds(Mode mode) { return bounds_for(mode, mode == Mode::TwoSided ? 2 : 3); }

namespace {

std::string join_polys(const std::vector<RatPoly>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + "]";
}

}  // namespace

std::optional<Discriminator> separate(const IntMatrix& a, const IntMatrix& b, Strength strength) {
  if (a.rows() != b.rows()) throw DimensionMismatch("separate: matrix sizes differ");
  if (det(a) != det(b)) return Discriminator::Determinant;
  if (trace(a) != trace(b)) return Discriminator::Trace;
  if (charpoly(a) != charpoly(b)) return Discriminator::Charpoly;
  if (strength == Strength::Similar && invariant_factors(a) != invariant_factors(b))
    return Discriminator::InvariantFactors;
  return std::nullopt;
}

std::string invariant_text(const IntMatrix& a, Discriminator d) {
  switch (d) {
    case Discriminator::Determinant: return det(a).str();
    case Discriminator::Trace: return trace(a).str();
    case Discriminator::Charpoly: return charpoly(a).to_string();
    case Discriminator::InvariantFactors: return join_polys(invariant_factors(a));
  }
  return {};
}

bool replay(const Permutation& sigma, const Permutation& rho, const Refutation& r) {
  const Permutation se = extend(sigma, r.spec);
  const Permutation re = extend(rho, r.spec);
  if (!(se == r.sigma) || !(re == r.rho)) return false;
  const IntMatrix a = petrie_matrix(se), b = petrie_matrix(re);
  const std::string va = invariant_text(a, r.discriminator), vb = invariant_text(b, r.discriminator);
  return va != vb && va == r.value_sigma && vb == r.value_rho;
}

namespace {

void require_pair(const Permutation& sigma, const Permutation& rho, Mode mode, Bounds bounds) {
  if (sigma.degree() != rho.degree()) throw DimensionMismatch("degrees differ: " + std::to_string(sigma.degree()) +
                                                              " vs " + std::to_string(rho.degree()));
  if (sigma.degree() < 3) throw PreconditionError("similarity checks need degree >= 3");
  const bool ok = mode == Mode::Right ? bounds.n >= 1 : mode == Mode::Left ? bounds.m >= 1
                                                                          : bounds.m >= 1 && bounds.n >= 1;
  if (!ok) throw PreconditionError("bound must be >= 1");
}

// Runs the search, filling log; returns the first refutation.
std::optional<Refutation> search(const Permutation& sigma, const Permutation& rho, Mode mode, Strength strength,
                                 Bounds bounds, std::vector<Verdict::LogEntry>* log) {
  if (sigma == rho) {
    if (log)
      for (const Shape& sh : shapes_up_to(mode, bounds.m, bounds.n)) log->push_back({sh, 0});
    return std::nullopt;
  }
  for (const Shape& sh : shapes_up_to(mode, bounds.m, bounds.n)) {
    SynchronizedStream stream(sigma, rho, mode, sh.m, sh.n);
    std::size_t count = 0;
    while (auto p = stream.next()) {
      ++count;
      const IntMatrix a = petrie_matrix(p->sigma), b = petrie_matrix(p->rho);
      if (auto d = separate(a, b, strength)) {
        if (log) log->push_back({sh, count});
        return Refutation{p->spec, *d, p->sigma, p->rho, invariant_text(a, *d), invariant_text(b, *d)};
      }
    }
    if (log) log->push_back({sh, count});
  }
  return std::nullopt;
}

}  // namespace

std::optional<Refutation> refute(const Permutation& sigma, const Permutation& rho, Mode mode, Strength strength,
                                 Bounds bounds) {
  require_pair(sigma, rho, mode, bounds);
  return search(sigma, rho, mode, strength, bounds, nullptr);
}

Verdict check_pair(const Permutation& sigma, const Permutation& rho, Mode mode, Strength strength, Bounds bounds,
                   CheckOptions opts) {
  require_pair(sigma, rho, mode, bounds);
  Verdict v;
  v.mode = mode;
  v.strength = strength;
  v.bounds = bounds;
  v.petrie_similar = similar(petrie_matrix(sigma), petrie_matrix(rho));
  v.refutation = search(sigma, rho, mode, strength, bounds, &v.log);
  if (v.refutation) {
    v.outcome = Verdict::Outcome::Refuted;
    return v;
  }
  v.outcome = Verdict::Outcome::ConsistentUpTo;
  if (opts.try_certificate && !(sigma == rho)) {
    // A certificate for similarity covers weak similarity as well.
    if (auto c = find_certificate(sigma, rho, mode, bounds.m, bounds.n)) {
      v.certificate = std::move(c);
      v.outcome = Verdict::Outcome::Certified;
    }
  }
  return v;
}

std::vector<Verdict> propagate_check(const Permutation& sigma, const Permutation& rho, const ExtensionSpec& spec,
                                     const std::vector<Mode>& modes, Strength strength, int bound) {
  const Permutation se = extend(sigma, spec);
  const Permutation re = extend(rho, spec);
  std::vector<Verdict> out;
  for (Mode m : modes) out.push_back(check_pair(se, re, m, strength, bounds_for(m, bound), {false}));
  return out;
}

// Classification ----------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ClassificationReport classify(int n, Mode mode, Strength strength, Bounds bounds, ClassifyOptions opts) {
  if (n < 3) throw PreconditionError("classify needs n >= 3");
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i + 1; j < perms.size(); ++j) pairs.emplace_back(i, j);

  // Size-1 extensions first: cheap and they separate almost everything.
  std::vector<std::optional<Refutation>> results(pairs.size());
  parallel_for(pairs.size(), opts.jobs, [&](std::size_t idx) {
    const auto& [i, j] = pairs[idx];
    results[idx] = refute(perms[i], perms[j], mode, strength, bounds);
  });

  UnionFind classes(perms.size());
  std::vector<std::size_t> consistent;
  ClassificationReport report{n, mode, strength, bounds, {}, {}};
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& [i, j] = pairs[idx];
    if (results[idx]) {
      report.refutations.push_back({{perms[i], perms[j]}, std::move(*results[idx])});
    } else {
      classes.unite(i, j);
      consistent.push_back(idx);
    }
  }

  std::vector<std::optional<Certificate>> certs(consistent.size());
  if (opts.certify)
    parallel_for(consistent.size(), opts.jobs, [&](std::size_t c) {
      const auto& [i, j] = pairs[consistent[c]];
      certs[c] = find_certificate(perms[i], perms[j], mode, bounds.m, bounds.n);
    });

  UnionFind certified(perms.size());
  std::map<std::size_t, std::vector<std::string>> cert_names;
  for (std::size_t c = 0; c < consistent.size(); ++c) {
    if (!certs[c]) continue;
    const auto& [i, j] = pairs[consistent[c]];
    certified.unite(i, j);
    cert_names[classes.find(i)].push_back(pair_key(perms[i], perms[j]) + ": " + certs[c]->name);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < perms.size(); ++i) groups[classes.find(i)].push_back(i);
  for (auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    ClassInfo info;
    info.certified = true;
    info.petrie_similar = true;
    for (std::size_t x : members) {
      info.members.push_back(perms[x]);
      if (certified.find(x) != certified.find(members.front())) info.certified = false;
      if (!similar(petrie_matrix(perms[x]), petrie_matrix(perms[members.front()]))) info.petrie_similar = false;
    }
    info.certificates = cert_names[root];
    report.classes.push_back(std::move(info));
  }
  return report;
}

// JSON --------------------------------------------------------------------

std::string pair_key(const Permutation& a, const Permutation& b) { return to_string(a) + "|" + to_string(b); }

nlohmann::json to_json(const Refutation& r) {
  return {{"spec", to_json(r.spec)},
          {"discriminator", to_string(r.discriminator)},
          {"extended", {r.sigma.images(), r.rho.images()}},
          {"values", {r.value_sigma, r.value_rho}}};
}

Refutation refutation_from_json(const nlohmann::json& j) {
  try {
    Refutation r;
    r.spec = spec_from_json(j.at("spec"));
    r.discriminator = parse_discriminator(j.at("discriminator").get<std::string>());
    r.sigma = Permutation(j.at("extended").at(0).get<std::vector<int>>());
    r.rho = Permutation(j.at("extended").at(1).get<std::vector<int>>());
    r.value_sigma = j.at("values").at(0).get<std::string>();
    r.value_rho = j.at("values").at(1).get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed refutation JSON: ") + ex.what());
  }
}

namespace {

nlohmann::json bounds_json(Bounds b) { return {{"m", b.m}, {"n", b.n}}; }

}  // namespace

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j = {{"schema_version", 1},
                      {"outcome", to_string(v.outcome)},
                      {"mode", to_string(v.mode)},
                      {"strength", to_string(v.strength)},
                      {"bound", bounds_json(v.bounds)},
                      {"petrie_similar", v.petrie_similar}};
  nlohmann::json log = nlohmann::json::array();
  for (const auto& e : v.log) log.push_back({{"m", e.shape.m}, {"n", e.shape.n}, {"checked", e.checked}});
  j["log"] = log;
  if (v.refutation) j["refutation"] = to_json(*v.refutation);
  if (v.certificate)
    j["certificate"] = {{"name", v.certificate->name},
                        {"params", v.certificate->params},
                        {"witnesses", v.certificate->witnesses}};
  return j;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json classes = nlohmann::json::array(), info = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& p : c.members) members.push_back(p.images());
    classes.push_back(members);
    info.push_back({{"status", c.certified ? "certified" : "candidate"},
                    {"petrie_similar", c.petrie_similar},
                    {"certificates", c.certificates}});
  }
  nlohmann::json refutations = nlohmann::json::object();
  for (const auto& [pair, ref] : r.refutations) refutations[pair_key(pair.first, pair.second)] = to_json(ref);
  return {{"schema_version", 1},
          {"format_version", kReportFormatVersion},
          {"degree", r.degree},
          {"mode", to_string(r.mode)},
          {"strength", to_string(r.strength)},
          {"bound", bounds_json(r.bounds)},
          {"classes", classes},
          {"class_info", info},
          {"refutations", refutations}};
}

ClassificationReport report_from_json(const nlohmann::json& j) {
  try {
    ClassificationReport r;
    r.degree = j.at("degree").get<int>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    const auto s = j.at("strength").get<std::string>();
    if (s == "similar") r.strength = Strength::Similar;
    else if (s == "weakly-similar") r.strength = Strength::WeaklySimilar;
    else throw ParseError("unknown strength: " + s);
    r.bounds = {j.at("bound").at("m").get<int>(), j.at("bound").at("n").get<int>()};
    const auto& classes = j.at("classes");
    const auto& info = j.at("class_info");
    if (classes.size() != info.size()) throw ParseError("classes and class_info differ in length");
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ClassInfo c;
      for (const auto& m : classes[i]) c.members.emplace_back(m.get<std::vector<int>>());
      c.certified = info[i].at("status").get<std::string>() == "certified";
      c.petrie_similar = info[i].at("petrie_similar").get<bool>();
      c.certificates = info[i].at("certificates").get<std::vector<std::string>>();
      r.classes.push_back(std::move(c));
    }
    for (const auto& [key, val] : j.at("refutations").items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos) throw ParseError("bad refutation key: " + key);
      r.refutations.push_back({{parse_permutation(key.substr(0, bar)), parse_permutation(key.substr(bar + 1))},
                               refutation_from_json(val)});
    }
    std::sort(r.refutations.begin(), r.refutations.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed report JSON: ") + ex.what());
  }
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int n, Mode mode, Strength strength, Bounds b) {
  std::ostringstream name;
  name << "classify-n" << n << '-' << to_string(mode) << '-' << to_string(strength) << "-m" << b.m << "-n" << b.n
       << "-v" << kReportFormatVersion << ".json";
  return dir / name.str();
}

std::optional<ClassificationReport> load_cached(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.value("format_version", -1) != kReportFormatVersion) return std::nullopt;
    return report_from_json(j);
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void store_cached(const std::filesystem::path& file, const ClassificationReport& r) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << to_json(r).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace petrie
