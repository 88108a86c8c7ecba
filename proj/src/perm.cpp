#include "septic/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace septic {

namespace {

constexpr int kFact[8] = {1, 1, 2, 6, 24, 120, 720, 5040};

}  // namespace

const std::array<GaloisLabel, 7>& allLabels() {
  static const std::array<GaloisLabel, 7> labels = {GaloisLabel::C7,  GaloisLabel::D7,
                                                    GaloisLabel::F21, GaloisLabel::F42,
                                                    GaloisLabel::PSL32, GaloisLabel::A7,
                                                    GaloisLabel::S7};
  return labels;
}

std::string labelString(GaloisLabel g) {
  switch (g) {
    case GaloisLabel::C7: return "C7";
    case GaloisLabel::D7: return "D7";
    case GaloisLabel::F21: return "C7:C3";
    case GaloisLabel::F42: return "C7:C6";
    case GaloisLabel::PSL32: return "PSL(3,2)";
    case GaloisLabel::A7: return "A7";
    case GaloisLabel::S7: return "S7";
  }
  return "unknown";
}

std::optional<GaloisLabel> parseLabel(std::string_view text) {
  for (GaloisLabel g : allLabels()) {
    if (labelString(g) == text) return g;
  }
  return std::nullopt;
}

int groupOrder(GaloisLabel g) {
  switch (g) {
    case GaloisLabel::C7: return 7;
    case GaloisLabel::D7: return 14;
    case GaloisLabel::F21: return 21;
    case GaloisLabel::F42: return 42;
    case GaloisLabel::PSL32: return 168;
    case GaloisLabel::A7: return 2520;
    case GaloisLabel::S7: return 5040;
  }
  return 0;
}

Perm7::Perm7() { std::iota(img_.begin(), img_.end(), std::uint8_t{0}); }

Perm7::Perm7(const Images& images) : img_(images) {
  std::array<bool, 7> seen{};
  for (auto v : img_) {
    if (v >= 7 || seen[v]) throw DomainError("Perm7: images do not form a bijection of 7 points");
    seen[v] = true;
  }
}

Perm7 Perm7::fromCycles(std::string_view cycles) {
  Images img;
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<int> cur;
  bool open = false;
  auto close = [&] {
    for (size_t i = 0; i < cur.size(); ++i) {
      img[static_cast<size_t>(cur[i])] = static_cast<std::uint8_t>(cur[(i + 1) % cur.size()]);
    }
    cur.clear();
  };
  for (char c : cycles) {
    if (c == '(') {
      open = true;
    } else if (c == ')') {
      close();
      open = false;
    } else if (c >= '1' && c <= '7' && open) {
      cur.push_back(c - '1');
    } else if (c != ' ' && c != ',') {
      throw DomainError("Perm7: bad cycle notation '" + std::string(cycles) + "'");
    }
  }
  return Perm7(img);
}

Perm7 Perm7::affine(int a, int b) {
  if (a % 7 == 0) throw DomainError("Perm7::affine: multiplier divisible by 7");
  Images img;
  for (int i = 0; i < 7; ++i) img[static_cast<size_t>(i)] = static_cast<std::uint8_t>(((a * i + b) % 7 + 7) % 7);
  return Perm7(img);
}

Perm7 operator*(const Perm7& a, const Perm7& b) {
  Perm7::Images img;
  for (size_t i = 0; i < 7; ++i) img[i] = a.img_[b.img_[i]];
  Perm7 out;
  out.img_ = img;
  return out;
}

Perm7 Perm7::inverse() const {
  Perm7 out;
  for (size_t i = 0; i < 7; ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Perm7::isIdentity() const { return *this == Perm7(); }

FactorPattern Perm7::cycleType() const {
  std::array<bool, 7> seen{};
  std::vector<int> lens;
  for (size_t i = 0; i < 7; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return FactorPattern(std::move(lens));
}

bool Perm7::isEven() const {
  const auto ct = cycleType();
  int transpositions = 0;
  for (int len : ct.degrees) transpositions += len - 1;
  return transpositions % 2 == 0;
}

int Perm7::order() const {
  int o = 1;
  for (int len : cycleType().degrees) o = std::lcm(o, len);
  return o;
}

int Perm7::rank() const {
  int r = 0;
  for (size_t i = 0; i < 7; ++i) {
    int smaller = 0;
    for (size_t j = i + 1; j < 7; ++j) smaller += img_[j] < img_[i];
    r += smaller * kFact[6 - i];
  }
  return r;
}

Perm7 Perm7::unrank(int r) {
  std::vector<std::uint8_t> pool = {0, 1, 2, 3, 4, 5, 6};
  Images img;
  for (size_t i = 0; i < 7; ++i) {
    const int f = kFact[6 - i];
    img[i] = pool[static_cast<size_t>(r / f)];
    pool.erase(pool.begin() + r / f);
    r %= f;
  }
  return Perm7(img);
}

std::string Perm7::toCycleString() const {
  std::string out;
  std::array<bool, 7> seen{};
  for (size_t i = 0; i < 7; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      out += static_cast<char>('1' + j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(std::vector<Perm7> generators) : generators_(std::move(generators)) {
  std::deque<Perm7> queue{Perm7()};
  member_[static_cast<size_t>(Perm7().rank())] = true;
  while (!queue.empty()) {
    Perm7 p = queue.front();
    queue.pop_front();
    elements_.push_back(p);
    for (const auto& g : generators_) {
      Perm7 q = g * p;
      auto r = static_cast<size_t>(q.rank());
      if (!member_[r]) {
        member_[r] = true;
        queue.push_back(q);
      }
    }
  }
  std::sort(elements_.begin(), elements_.end());
}

PermGroup PermGroup::fromElements(std::vector<Perm7> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  // Greedy generating set; every element lies in the closure, so equal
  // orders mean the set was closed.
  std::vector<Perm7> gens;
  PermGroup g(gens);
  for (const auto& e : elements) {
    if (g.contains(e)) continue;
    gens.push_back(e);
    g = PermGroup(gens);
  }
  if (g.order() != elements.size()) throw DomainError("PermGroup: element set not closed");
  return g;
}

PermGroup PermGroup::symmetric() {
  return PermGroup({Perm7::fromCycles("(12)"), Perm7::fromCycles("(1234567)")});
}

bool PermGroup::contains(const Perm7& p) const { return member_[static_cast<size_t>(p.rank())]; }

bool PermGroup::isSubgroupOf(const PermGroup& g) const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const Perm7& p) { return g.contains(p); });
}

bool PermGroup::isTransitive() const {
  std::array<bool, 7> hit{};
  for (const auto& e : elements_) hit[static_cast<size_t>(e(0))] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::set<FactorPattern> PermGroup::cycleTypes() const {
  std::set<FactorPattern> out;
  for (const auto& e : elements_) out.insert(e.cycleType());
  return out;
}

const std::vector<Triple>& fanoLines() {
  static const std::vector<Triple> lines = [] {
    std::vector<Triple> out;
    for (int i = 0; i < 7; ++i) {
      Triple t = {i, (i + 2) % 7, (i + 3) % 7};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return lines;
}

const std::vector<Triple>& f42Triples() {
  static const std::vector<Triple> triples = [] {
    const int oneBased[14][3] = {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 7}, {1, 5, 6}, {1, 5, 7}, {2, 3, 5},
                                 {2, 3, 7}, {2, 4, 5}, {2, 6, 7}, {3, 4, 6}, {3, 5, 6}, {4, 5, 7}, {4, 6, 7}};
    std::vector<Triple> out;
    for (const auto& t : oneBased) out.push_back({t[0] - 1, t[1] - 1, t[2] - 1});
    return out;
  }();
  return triples;
}

PermGroup tripleSetStabilizer(const std::vector<Triple>& triples) {
  std::vector<Triple> sorted = triples;
  for (auto& t : sorted) std::sort(t.begin(), t.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm7> stab;
  for (int r = 0; r < 5040; ++r) {
    const Perm7 p = Perm7::unrank(r);
    std::vector<Triple> image;
    image.reserve(sorted.size());
    for (const auto& t : sorted) {
      Triple u = {p(t[0]), p(t[1]), p(t[2])};
      std::sort(u.begin(), u.end());
      image.push_back(u);
    }
    std::sort(image.begin(), image.end());
    if (image == sorted) stab.push_back(p);
  }
  return PermGroup::fromElements(std::move(stab));
}

const std::map<GaloisLabel, PermGroup>& catalog() {
  static const std::map<GaloisLabel, PermGroup> groups = [] {
    const Perm7 c = Perm7::affine(1, 1);
    std::map<GaloisLabel, PermGroup> out;
    out.emplace(GaloisLabel::C7, PermGroup({c}));
    out.emplace(GaloisLabel::D7, PermGroup({c, Perm7::affine(6, 0)}));
    out.emplace(GaloisLabel::F21, PermGroup({c, Perm7::affine(2, 0)}));
    out.emplace(GaloisLabel::F42, PermGroup({c, Perm7::affine(3, 0)}));
    out.emplace(GaloisLabel::PSL32, tripleSetStabilizer(fanoLines()));
    std::vector<Perm7> a7gens;
    for (int i = 2; i < 7; ++i) {
      Perm7::Images img = {0, 1, 2, 3, 4, 5, 6};
      img[0] = 1;
      img[1] = static_cast<std::uint8_t>(i);
      img[static_cast<size_t>(i)] = 0;
      a7gens.emplace_back(img);
    }
    out.emplace(GaloisLabel::A7, PermGroup(a7gens));
    out.emplace(GaloisLabel::S7, PermGroup::symmetric());
    return out;
  }();
  return groups;
}

const PermGroup& catalogGroup(GaloisLabel g) { return catalog().at(g); }

std::vector<Perm7> cosets(const PermGroup& h, const PermGroup& g) {
  if (!h.isSubgroupOf(g)) throw DomainError("cosets: H is not a subgroup of G");
  std::array<bool, 5040> covered{};
  std::vector<Perm7> reps;
  for (const auto& s : g.elements()) {  // ascending, so the first hit is the coset minimum
    if (covered[static_cast<size_t>(s.rank())]) continue;
    reps.push_back(s);
    for (const auto& x : h.elements()) covered[static_cast<size_t>((s * x).rank())] = true;
  }
  return reps;
}

FactorPattern orbitPartitionOn3Sets(const PermGroup& g) {
  auto code = [](int a, int b, int c) { return (1 << a) | (1 << b) | (1 << c); };
  std::array<bool, 128> seen{};
  std::vector<int> lens;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      for (int c = b + 1; c < 7; ++c) {
        if (seen[static_cast<size_t>(code(a, b, c))]) continue;
        int len = 0;
        for (const auto& p : g.elements()) {
          auto k = static_cast<size_t>(code(p(a), p(b), p(c)));
          if (!seen[k]) {
            seen[k] = true;
            ++len;
          }
        }
        lens.push_back(len);
      }
    }
  }
  return FactorPattern(std::move(lens));
}

FactorPattern orbitLengthsOnCosets(const PermGroup& g, const PermGroup& h) {
  const PermGroup s7 = PermGroup::symmetric();
  const auto reps = cosets(h, s7);
  std::array<int, 5040> cosetOf{};
  for (size_t i = 0; i < reps.size(); ++i) {
    for (const auto& x : h.elements()) cosetOf[static_cast<size_t>((reps[i] * x).rank())] = static_cast<int>(i);
  }
  std::vector<bool> seen(reps.size(), false);
  std::vector<int> lens;
  for (size_t i = 0; i < reps.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (const auto& e : g.elements()) {
      auto j = static_cast<size_t>(cosetOf[static_cast<size_t>((e * reps[i]).rank())]);
      if (!seen[j]) {
        seen[j] = true;
        ++len;
      }
    }
    lens.push_back(len);
  }
  return FactorPattern(std::move(lens));
}

}  // namespace septic
