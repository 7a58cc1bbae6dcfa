#include "ordkit/umodule.hpp"

#include <algorithm>

namespace ordkit {

FunctionModule::FunctionModule(FinPoset lattice, DoctrinePair pair)
    : x_(std::move(lattice)), pair_(std::move(pair)) {
  if (!x_.is_complete_lattice()) throw ModuleError("FunctionModule: base is not a complete lattice");
  bottom_zero_ = pair_.phi.contains_empty;
  binary_joins_ = pair_.phi.member(FinPoset::antichain(2), 0b11);
  binary_meets_ = pair_.psi.member(FinPoset::antichain(2), 0b11);
  top_ = pair_.psi.contains_empty;
}

bool FunctionModule::is_element(const Element& a) const {
  if ((int)a.size() != x_.size()) return false;
  for (const Rat& v : a)
    if (!in_unit(v)) return false;
  if (!(a[*x_.top()] == Rat(1))) return false;
  for (int i = 0; i < x_.size(); ++i)
    for (int j = 0; j < x_.size(); ++j) {
      if (!(a[*x_.meet(i, j)] == rat_min(a[i], a[j]))) return false;
      if (binary_joins_ && !(a[*x_.join(i, j)] == rat_max(a[i], a[j]))) return false;
    }
  if (bottom_zero_ && !(a[*x_.bottom()] == Rat(0))) return false;
  return true;
}

void FunctionModule::require_element(const Element& a) const {
  if (!is_element(a)) throw ModuleError("FunctionModule: table " + describe(a) + " is not a carrier element");
}

bool FunctionModule::leq(const Element& a, const Element& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

FunctionModule::Element FunctionModule::act(const PLMap& u, const Element& a) const {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = u.eval(a[i]);
  return out;
}

FunctionModule::Element FunctionModule::meet(const Element& a, const Element& b) const {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = rat_min(a[i], b[i]);
  return out;
}

FunctionModule::Element FunctionModule::top() const {
  if (!top_) throw ModuleError("FunctionModule: the pair carries no empty meet");
  return Element(x_.size(), Rat(1));
}

Rat FunctionModule::rho(const Element& a, const Element& b) const {
  Rat best(0);
  for (std::size_t i = 0; i < a.size(); ++i) best = rat_max(best, dot_minus(a[i], b[i]));
  return best;
}

bool FunctionModule::compatible(const Element& a, const Element& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != Rat(0) && a[i] != Rat(1)) return false;
  return true;
}

std::string FunctionModule::incompatibility_witness(const Element& a, const Element& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != Rat(0) && a[i] != Rat(1))
      return "at element " + std::to_string(i) + ": v' = piece_iso(0," + b[i].str() +
             ") sends b to 1 while u' = piece_iso(" + a[i].str() + ",1) sends a to 0";
  return "pieces are compatible";
}

FunctionModule::Element FunctionModule::orbit_closure_least(const Element& a, const Rat& r) const {
  if (!(Rat(0) < r && r <= Rat(1))) throw ModuleError("orbit closure needs r in (0,1]");
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] >= r ? Rat(1) : Rat(0);
  return out;
}

std::optional<Rat> FunctionModule::separation_threshold(const Element& a, const Element& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return a[i];
  return std::nullopt;
}

std::string FunctionModule::describe(const Element& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

FunctionModule::Element FunctionModule::indicator(Mask upper) const {
  Element out(x_.size(), Rat(0));
  for (int i : mask_elements(upper)) out[i] = Rat(1);
  return out;
}

std::vector<Mask> FunctionModule::indicator_supports() const {
  std::vector<Mask> out;
  const Mask full = x_.full_mask();
  for (Mask s = 0;; ++s) {
    if (x_.is_upper(s) && is_element(indicator(s))) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

bool PLModule::compatible(const Element& a, const Element& b) const {
  std::vector<Rat> cand = a.breakpoints();
  for (const Rat& x : b.breakpoints()) cand.push_back(x);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const Rat& x : cand)
    if (b.eval(x) != Rat(0) && a.eval(x) != Rat(1)) return false;
  // Within each open cell both maps are affine: if b is positive anywhere in
  // the cell it is positive on a right-open piece, forcing a to be 1 on the
  // whole cell.
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
    if (b.limit_from_left(cand[i + 1]) != Rat(0) && a.limit_from_right(cand[i]) != Rat(1))
      return false;
  }
  return true;
}

std::string PLModule::incompatibility_witness(const Element& a, const Element& b) const {
  std::vector<Rat> cand = a.breakpoints();
  for (const Rat& x : b.breakpoints()) cand.push_back(x);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const Rat& x : cand)
    if (b.eval(x) != Rat(0) && a.eval(x) != Rat(1))
      return "at t=" + x.str() + ": b(t)=" + b.eval(x).str() + " > 0 while a(t)=" +
             a.eval(x).str() + " < 1";
  for (std::size_t i = 0; i + 1 < cand.size(); ++i)
    if (b.limit_from_left(cand[i + 1]) != Rat(0) && a.limit_from_right(cand[i]) != Rat(1))
      return "on (" + cand[i].str() + "," + cand[i + 1].str() + "): b positive while a below 1";
  return "pieces are compatible";
}

IntervalFilter closed_invariant_filter(const IntervalModule&, const DoctrinePair& pair,
                                       const std::vector<Rat>& generators) {
  for (const Rat& g : generators)
    if (!in_unit(g)) throw ModuleError("closed_invariant_filter: generator outside [0,1]");
  for (const Rat& g : generators)
    if (g != Rat(1)) return {IntervalFilterKind::everything};
  if (!generators.empty() || pair.psi.contains_empty) return {IntervalFilterKind::one};
  return {IntervalFilterKind::empty};
}

std::vector<IntervalMorphism> morphisms_to_I(const IntervalModule&, const DoctrinePair& pair) {
  std::vector<IntervalMorphism> out;
  if (!pair.psi.contains_empty) out.push_back({IntervalFilter{IntervalFilterKind::empty}});
  out.push_back({IntervalFilter{IntervalFilterKind::one}});
  out.push_back({IntervalFilter{IntervalFilterKind::everything}});
  return out;
}

bool FunctionFilter::member(const FunctionModule& m, const FunctionModule::Element& a) const {
  for (Mask s : supports) {
    bool all_one = true;
    for (int i : mask_elements(s))
      if (a[i] != Rat(1)) {
        all_one = false;
        break;
      }
    if (all_one) return true;
  }
  (void)m;
  return false;
}

Rat FunctionMorphism::operator()(const FunctionModule::Element& a) const {
  Rat best(0);
  for (Mask s : filter.supports) {
    Rat low(1);
    for (int i : mask_elements(s)) low = rat_min(low, a[i]);
    best = rat_max(best, low);
  }
  return best;
}

namespace {

// Reduce a collection of supports to its minimal antichain (membership only
// depends on minimal supports).
std::vector<Mask> minimal_supports(std::vector<Mask> c) {
  std::vector<Mask> out;
  for (Mask s : c) {
    bool minimal = true;
    for (Mask t : c)
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

FunctionFilter closed_invariant_filter(const FunctionModule& m,
                                       const std::vector<FunctionModule::Element>& generators) {
  const auto supports = m.indicator_supports();
  std::vector<char> in(supports.size(), 0);
  const auto index_of = [&](Mask s) {
    const auto it = std::find(supports.begin(), supports.end(), s);
    if (it == supports.end())
      throw ModuleError("closed_invariant_filter: support is not a carrier indicator");
    return (std::size_t)(it - supports.begin());
  };
  const auto add_upward = [&](Mask s) {
    for (std::size_t k = 0; k < supports.size(); ++k)
      if ((s & ~supports[k]) == 0) in[k] = 1;  // every valid superset
  };
  for (const auto& g : generators) {
    m.require_element(g);
    Mask s = 0;
    for (int i = 0; i < m.lattice().size(); ++i)
      if (g[i] == Rat(1)) s |= Mask(1) << i;
    index_of(s);
    add_upward(s);
  }
  if (m.has_top()) add_upward(m.lattice().full_mask());
  if (m.has_binary_meets()) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < supports.size(); ++a)
        for (std::size_t b = 0; b < supports.size(); ++b)
          if (in[a] && in[b]) {
            const std::size_t c = index_of(supports[a] & supports[b]);
            if (!in[c]) {
              in[c] = 1;
              changed = true;
            }
          }
    }
  }
  std::vector<Mask> chosen;
  for (std::size_t k = 0; k < supports.size(); ++k)
    if (in[k]) chosen.push_back(supports[k]);
  return FunctionFilter{minimal_supports(std::move(chosen))};
}

std::vector<FunctionMorphism> morphisms_to_I(const FunctionModule& m) {
  const auto supports = m.indicator_supports();
  const std::size_t k = supports.size();
  if (k > 20) throw ModuleError("morphisms_to_I: too many indicator supports");
  std::vector<FunctionMorphism> out;
  for (std::size_t pick = 0; pick < (std::size_t(1) << k); ++pick) {
    const auto has = [&](std::size_t i) { return (pick >> i) & 1u; };
    bool valid = true;
    // upward closed
    for (std::size_t a = 0; a < k && valid; ++a)
      for (std::size_t b = 0; b < k && valid; ++b)
        if (has(a) && (supports[a] & ~supports[b]) == 0 && !has(b)) valid = false;
    // binary meets when the pair carries them
    if (valid && m.has_binary_meets())
      for (std::size_t a = 0; a < k && valid; ++a)
        for (std::size_t b = 0; b < k && valid; ++b)
          if (has(a) && has(b)) {
            const Mask inter = supports[a] & supports[b];
            const auto it = std::find(supports.begin(), supports.end(), inter);
            if (it == supports.end() || !has((std::size_t)(it - supports.begin()))) valid = false;
          }
    // the top element's support when the pair carries a top
    if (valid && m.has_top()) {
      const auto it = std::find(supports.begin(), supports.end(), m.lattice().full_mask());
      if (it == supports.end() || !has((std::size_t)(it - supports.begin()))) valid = false;
    }
    if (!valid) continue;
    std::vector<Mask> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (has(i)) chosen.push_back(supports[i]);
    out.push_back({FunctionFilter{minimal_supports(std::move(chosen))}});
  }
  return out;
}

}  // namespace ordkit
