#include "glab/gl.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace glab::gl {

// ---------------------------------------------------------------------------
// Construction and normalization

MF atom(const std::string& name) {
  auto n = std::make_shared<MNode>();
  n->kind = MKind::Atom;
  n->name = name;
  return n;
}

MF bottom() {
  static const MF b = [] {
    auto n = std::make_shared<MNode>();
    n->kind = MKind::Bottom;
    return MF(n);
  }();
  return b;
}

MF implies(MF l, MF r) {
  auto n = std::make_shared<MNode>();
  n->kind = MKind::Implies;
  n->a = std::move(l);
  n->b = std::move(r);
  return n;
}

MF box(MF f) {
  auto n = std::make_shared<MNode>();
  n->kind = MKind::Box;
  n->a = std::move(f);
  return n;
}

MF m_not(MF f) { return implies(std::move(f), bottom()); }
MF top() { return m_not(bottom()); }
MF m_and(MF l, MF r) { return m_not(implies(std::move(l), m_not(std::move(r)))); }
MF m_or(MF l, MF r) { return implies(m_not(std::move(l)), std::move(r)); }
MF iff(MF l, MF r) { return m_and(implies(l, r), implies(r, l)); }
MF diamond(MF f) { return m_not(box(m_not(std::move(f)))); }

bool equal(const MF& x, const MF& y) {
  if (x.get() == y.get()) return true;
  if (!x || !y || x->kind != y->kind) return false;
  switch (x->kind) {
    case MKind::Atom: return x->name == y->name;
    case MKind::Bottom: return true;
    case MKind::Implies: return equal(x->a, y->a) && equal(x->b, y->b);
    case MKind::Box: return equal(x->a, y->a);
  }
  return false;
}

std::set<std::string> atoms_of(const MF& f) {
  std::set<std::string> out;
  std::function<void(const MNode*)> go = [&](const MNode* n) {
    if (!n) return;
    if (n->kind == MKind::Atom) out.insert(n->name);
    go(n->a.get());
    go(n->b.get());
  };
  go(f.get());
  return out;
}

std::string print(const MF& f) {
  std::ostringstream os;
  std::function<void(const MNode*)> go = [&](const MNode* n) {
    switch (n->kind) {
      case MKind::Atom: os << n->name; return;
      case MKind::Bottom: os << "ff"; return;
      case MKind::Box: os << "[]"; go(n->a.get()); return;
      case MKind::Implies:
        if (n->b->kind == MKind::Bottom) {  // print as negation
          os << "~";
          go(n->a.get());
          return;
        }
        os << "(";
        go(n->a.get());
        os << " -> ";
        go(n->b.get());
        os << ")";
        return;
    }
  };
  go(f.get());
  return os.str();
}

// ---------------------------------------------------------------------------
// Modal parser

namespace {

struct MLexer {
  const std::string& s;
  std::size_t pos = 0;

  void ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

  bool take(const std::string& tok) {
    ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  char peek() {
    ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

struct MParser {
  MLexer lx;

  [[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("modal parse error at position " +
                             std::to_string(lx.pos) + ": " + what);
  }

  MF unary() {
    if (lx.take("[]")) return box(unary());
    if (lx.take("<>")) return diamond(unary());
    if (lx.take("~")) return m_not(unary());
    if (lx.take("(")) {
      MF f = iff_level();
      if (!lx.take(")")) fail("expected ')'");
      return f;
    }
    lx.ws();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      ++lx.pos;
    if (lx.pos == start) fail("expected formula");
    std::string w = lx.s.substr(start, lx.pos - start);
    if (w == "ff") return bottom();
    if (w == "tt") return top();
    return atom(w);
  }

  MF and_level() {
    MF f = unary();
    while (lx.take("&")) f = m_and(std::move(f), unary());
    return f;
  }

  MF or_level() {
    MF f = and_level();
    while (lx.take("|")) f = m_or(std::move(f), and_level());
    return f;
  }

  MF imp_level() {  // right-associative
    MF f = or_level();
    if (lx.take("->")) return implies(std::move(f), imp_level());
    return f;
  }

  MF iff_level() {
    MF f = imp_level();
    while (lx.take("<->")) f = iff(std::move(f), imp_level());
    return f;
  }
};

}  // namespace

MF parse(const std::string& text) {
  MParser p{MLexer{text}};
  MF f = p.iff_level();
  p.lx.ws();
  if (p.lx.pos != text.size()) p.fail("trailing input");
  return f;
}

// ---------------------------------------------------------------------------
// Kripke model basics

bool is_transitive(const KripkeModel& m) {
  std::set<std::pair<int, int>> e(m.edges.begin(), m.edges.end());
  for (auto [a, b] : e)
    for (auto [c, d] : e)
      if (b == c && !e.count({a, d})) return false;
  return true;
}

bool is_irreflexive(const KripkeModel& m) {
  for (auto [a, b] : m.edges)
    if (a == b) return false;
  return true;
}

bool model_check(const KripkeModel& m, int world, const MF& f) {
  if (world < 0 || world >= m.worlds)
    throw std::out_of_range("model_check: unknown world " + std::to_string(world));
  std::vector<std::vector<int>> succ(m.worlds);
  for (auto [a, b] : m.edges) succ[a].push_back(b);
  std::map<std::pair<const MNode*, int>, bool> memo;
  std::function<bool(const MNode*, int)> eval = [&](const MNode* n, int w) -> bool {
    auto key = std::make_pair(n, w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = false;
    switch (n->kind) {
      case MKind::Bottom: r = false; break;
      case MKind::Atom: {
        auto vi = m.valuation.find(n->name);
        r = vi != m.valuation.end() && vi->second.count(w);
        break;
      }
      case MKind::Implies: r = !eval(n->a.get(), w) || eval(n->b.get(), w); break;
      case MKind::Box:
        r = true;
        for (int v : succ[w])
          if (!eval(n->a.get(), v)) { r = false; break; }
        break;
    }
    memo[key] = r;
    return r;
  };
  return eval(f.get(), world);
}

nlohmann::json model_to_json(const KripkeModel& m) {
  nlohmann::json j;
  j["worlds"] = m.worlds;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : m.edges) j["edges"].push_back({a, b});
  j["valuation"] = nlohmann::json::object();
  for (const auto& [name, ws] : m.valuation) j["valuation"][name] = ws;
  j["root"] = m.root;
  return j;
}

KripkeModel model_from_json(const nlohmann::json& j) {
  KripkeModel m;
  m.worlds = j.at("worlds").get<int>();
  for (const auto& e : j.at("edges")) m.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  for (auto it = j.at("valuation").begin(); it != j.at("valuation").end(); ++it)
    m.valuation[it.key()] = it.value().get<std::set<int>>();
  m.root = j.at("root").get<int>();
  return m;
}

// ---------------------------------------------------------------------------
// The sequent engine

namespace {

// Fixed-width bitset over the interned subformula universe.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t universe = 0) : w((universe + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= (1ull << (i & 63)); }
  void clear(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }

  int first_common(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i] & o.w[i];
      if (x) return static_cast<int>(i * 64 + __builtin_ctzll(x));
    }
    return -1;
  }

  bool operator==(const Bits& o) const { return w == o.w; }

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        int bit = __builtin_ctzll(x);
        fn(static_cast<int>(i * 64 + bit));
        x &= x - 1;
      }
    }
  }
};

struct SeqKey {
  Bits g, d;
  bool operator==(const SeqKey& o) const { return g == o.g && d == o.d; }
};

struct SeqKeyHash {
  std::size_t operator()(const SeqKey& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ull;
    };
    for (auto v : k.g.w) mix(v);
    mix(0x9e3779b97f4a7c15ull);
    for (auto v : k.d.w) mix(v);
    return h;
  }
};

// Tree-shaped countermodel under construction; world 0 is the root and sees
// every other world.
struct IModel {
  std::vector<std::vector<int>> true_atoms;  // per world, interned atom ids
  std::vector<std::pair<int, int>> edges;
};
using IModelPtr = std::shared_ptr<const IModel>;

struct Result {
  bool proved = false;
  DerivPtr deriv;
  IModelPtr model;  // may be null in K4 mode (loop-based failure)
};

struct Engine {
  Mode mode;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  // Interned universe.
  std::vector<const MNode*> id2node;
  std::vector<MF> id2mf;
  std::vector<int> kind;      // MKind as int
  std::vector<int> child_a, child_b;
  std::vector<int> atom_id;   // per node, index into atom_names or -1
  std::vector<std::string> atom_names;
  std::map<std::string, int> atom_index;
  std::map<std::tuple<int, int, int, int>, int> cons;  // (kind, a, b, atom) -> id

  std::unordered_map<SeqKey, Result, SeqKeyHash> memo;
  std::vector<SeqKey> path;  // K4 loop check: box premises on the current path

  int intern(const MF& f) {
    int k = static_cast<int>(f->kind);
    int a = f->a ? intern(f->a) : -1;
    int b = f->b ? intern(f->b) : -1;
    int at = -1;
    if (f->kind == MKind::Atom) {
      auto it = atom_index.find(f->name);
      if (it == atom_index.end()) {
        at = static_cast<int>(atom_names.size());
        atom_index[f->name] = at;
        atom_names.push_back(f->name);
      } else {
        at = it->second;
      }
    }
    auto key = std::make_tuple(k, a, b, at);
    auto it = cons.find(key);
    if (it != cons.end()) return it->second;
    int id = static_cast<int>(id2mf.size());
    cons[key] = id;
    id2mf.push_back(f);
    id2node.push_back(f.get());
    kind.push_back(k);
    child_a.push_back(a);
    child_b.push_back(b);
    atom_id.push_back(at);
    return id;
  }

  std::size_t universe() const { return id2mf.size(); }

  std::vector<MF> to_list(const Bits& s) const {
    std::vector<MF> out;
    s.for_each([&](int i) { out.push_back(id2mf[i]); });
    return out;
  }

  DerivPtr mk_deriv(Rule r, const Bits& g, const Bits& d, int principal,
                    std::vector<DerivPtr> premises) const {
    auto node = std::make_shared<Derivation>();
    node->rule = r;
    node->left = to_list(g);
    node->right = to_list(d);
    node->principal = principal >= 0 ? id2mf[principal] : nullptr;
    node->premises = std::move(premises);
    return node;
  }

  Result prove(const Bits& g, const Bits& d) {
    if (++nodes > budget) throw BudgetError(nodes, memo.size());

    SeqKey key{g, d};
    auto mit = memo.find(key);
    if (mit != memo.end()) return mit->second;

    Result res = prove_uncached(g, d);
    // K4 failures can be path-dependent (loop check); cache only proofs.
    if (mode == Mode::GL || res.proved) memo[key] = res;
    return res;
  }

  Result prove_uncached(const Bits& g, const Bits& d) {
    // Axioms.
    const int bot = 1;  // Bottom interned first (see decide_ids)
    if (g.test(bot))
      return Result{true, mk_deriv(Rule::BottomLeft, g, d, bot, {}), nullptr};
    int shared = g.first_common(d);
    if (shared >= 0)
      return Result{true, mk_deriv(Rule::Axiom, g, d, shared, {}), nullptr};

    // Right implication (invertible, non-branching): smallest id first.
    int pr = -1;
    d.for_each([&](int i) {
      if (pr < 0 && kind[i] == static_cast<int>(MKind::Implies)) pr = i;
    });
    if (pr >= 0) {
      Bits g2 = g, d2 = d;
      d2.clear(pr);
      g2.set(child_a[pr]);
      d2.set(child_b[pr]);
      Result sub = prove(g2, d2);
      if (sub.proved)
        return Result{true, mk_deriv(Rule::ImpRight, g, d, pr, {sub.deriv}), nullptr};
      return Result{false, nullptr, sub.model};
    }

    // Left implication (branching).
    int pl = -1;
    g.for_each([&](int i) {
      if (pl < 0 && kind[i] == static_cast<int>(MKind::Implies)) pl = i;
    });
    if (pl >= 0) {
      Bits g1 = g, d1 = d;
      g1.clear(pl);
      d1.set(child_a[pl]);
      Result r1 = prove(g1, d1);
      if (!r1.proved) return Result{false, nullptr, r1.model};
      Bits g2 = g, d2 = d;
      g2.clear(pl);
      g2.set(child_b[pl]);
      Result r2 = prove(g2, d2);
      if (!r2.proved) return Result{false, nullptr, r2.model};
      return Result{true, mk_deriv(Rule::ImpLeft, g, d, pl, {r1.deriv, r2.deriv}), nullptr};
    }

    // Saturated: only atoms, bottom, boxes remain. Try the box rule for each
    // boxed formula on the right.
    Bits gbox(universe());
    std::vector<int> gbox_bodies;
    g.for_each([&](int i) {
      if (kind[i] == static_cast<int>(MKind::Box)) {
        gbox.set(i);
        gbox_bodies.push_back(child_a[i]);
      }
    });

    std::vector<IModelPtr> children;
    bool missing_child = false;
    Result proof;
    d.for_each([&](int i) {
      if (proof.proved || kind[i] != static_cast<int>(MKind::Box)) return;
      Bits pg = gbox;
      for (int b : gbox_bodies) pg.set(b);
      if (mode == Mode::GL) pg.set(i);  // built-in Loeb step
      Bits pd(universe());
      pd.set(child_a[i]);

      if (mode == Mode::K4) {
        SeqKey pk{pg, pd};
        for (const auto& seen : path)
          if (seen == pk) {  // loop: treat the premise as failed
            missing_child = true;
            return;
          }
        path.push_back(pk);
        Result sub = prove(pg, pd);
        path.pop_back();
        if (sub.proved) {
          proof = Result{true, mk_deriv(Rule::BoxStep, g, d, i, {sub.deriv}), nullptr};
          return;
        }
        if (sub.model) children.push_back(sub.model);
        else missing_child = true;
        return;
      }

      Result sub = prove(pg, pd);
      if (sub.proved) {
        proof = Result{true, mk_deriv(Rule::BoxStep, g, d, i, {sub.deriv}), nullptr};
        return;
      }
      children.push_back(sub.model);
    });
    if (proof.proved) return proof;

    if (missing_child) return Result{false, nullptr, nullptr};

    // Countermodel: this saturated sequent is a world; each failed box premise
    // contributes a subtree whose root falsifies the boxed body.
    auto m = std::make_shared<IModel>();
    std::vector<int> root_atoms;
    g.for_each([&](int i) {
      if (atom_id[i] >= 0) root_atoms.push_back(atom_id[i]);
    });
    m->true_atoms.push_back(std::move(root_atoms));
    for (const auto& child : children) {
      int offset = static_cast<int>(m->true_atoms.size());
      for (const auto& w : child->true_atoms) m->true_atoms.push_back(w);
      for (auto [a, b] : child->edges) m->edges.emplace_back(a + offset, b + offset);
      // The root sees the entire subtree (keeps the relation transitive).
      for (std::size_t w = 0; w < child->true_atoms.size(); ++w)
        m->edges.emplace_back(0, offset + static_cast<int>(w));
    }
    return Result{false, nullptr, m};
  }
};

KripkeModel to_public_model(const Engine& eng, const IModel& im) {
  KripkeModel m;
  m.worlds = static_cast<int>(im.true_atoms.size());
  m.edges = im.edges;
  std::sort(m.edges.begin(), m.edges.end());
  m.root = 0;
  for (int w = 0; w < m.worlds; ++w)
    for (int a : im.true_atoms[w]) m.valuation[eng.atom_names[a]].insert(w);
  return m;
}

KripkeModel minimize(KripkeModel m, const MF& goal) {
  // Greedy world deletion, highest index first, while the model still
  // falsifies the goal at the root.
  for (int w = m.worlds - 1; w >= 0; --w) {
    if (w == m.root) continue;
    KripkeModel trial;
    trial.worlds = m.worlds - 1;
    auto remap = [&](int x) { return x > w ? x - 1 : x; };
    trial.root = remap(m.root);
    for (auto [a, b] : m.edges)
      if (a != w && b != w) trial.edges.emplace_back(remap(a), remap(b));
    for (const auto& [name, ws] : m.valuation) {
      std::set<int> nw;
      for (int x : ws)
        if (x != w) nw.insert(remap(x));
      if (!nw.empty()) trial.valuation[name] = nw;
    }
    if (!model_check(trial, trial.root, goal)) m = std::move(trial);
  }
  return m;
}

}  // namespace

Verdict decide(const MF& f, const DecideOptions& opts) {
  Engine eng;
  eng.mode = opts.mode;
  eng.budget = opts.node_budget;
  // Id 0 is a pad atom never used in sequents; Bottom is always id 1 so the
  // engine can test for it directly.
  eng.intern(atom("\x01__pad"));
  int bot_id = eng.intern(bottom());
  assert(bot_id == 1);
  (void)bot_id;
  int goal = eng.intern(f);

  Bits g(eng.universe()), d(eng.universe());
  d.set(goal);

  Result r = eng.prove(g, d);
  Verdict v;
  if (r.proved) {
    v.is_theorem = true;
    v.trace = r.deriv;
    return v;
  }
  if (r.model) {
    KripkeModel m = to_public_model(eng, *r.model);
    if (opts.minimize_countermodel) m = minimize(std::move(m), f);
    v.counter = std::move(m);
  }
  return v;
}

MF boxplus(const std::vector<MF>& axioms, const MF& goal) {
  if (axioms.empty()) return goal;
  MF conj = m_and(axioms[0], box(axioms[0]));
  for (std::size_t i = 1; i < axioms.size(); ++i)
    conj = m_and(conj, m_and(axioms[i], box(axioms[i])));
  return implies(conj, goal);
}

Verdict global_consequence(const std::vector<MF>& axioms, const MF& goal,
                           const DecideOptions& opts) {
  return decide(boxplus(axioms, goal), opts);
}

// ---------------------------------------------------------------------------
// Trace checker

namespace {

std::set<std::string> set_key(const std::vector<MF>& side) {
  std::set<std::string> out;
  for (const auto& f : side) out.insert(print(f));
  return out;
}

bool contains(const std::vector<MF>& side, const MF& f) {
  for (const auto& g : side)
    if (equal(g, f)) return true;
  return false;
}

std::set<std::string> minus(std::set<std::string> s, const MF& f) {
  s.erase(print(f));
  return s;
}

std::set<std::string> plus_f(std::set<std::string> s, const MF& f) {
  s.insert(print(f));
  return s;
}

}  // namespace

bool replay(const DerivPtr& d, Mode mode) {
  if (!d) return false;
  auto L = set_key(d->left);
  auto R = set_key(d->right);
  switch (d->rule) {
    case Rule::Axiom:
      return d->premises.empty() && d->principal &&
             contains(d->left, d->principal) && contains(d->right, d->principal);
    case Rule::BottomLeft:
      return d->premises.empty() && L.count(print(bottom())) > 0;
    case Rule::ImpRight: {
      if (d->premises.size() != 1 || !d->principal ||
          d->principal->kind != MKind::Implies || !contains(d->right, d->principal))
        return false;
      auto expL = plus_f(L, d->principal->a);
      auto expR = plus_f(minus(R, d->principal), d->principal->b);
      const auto& p = d->premises[0];
      return set_key(p->left) == expL && set_key(p->right) == expR && replay(p, mode);
    }
    case Rule::ImpLeft: {
      if (d->premises.size() != 2 || !d->principal ||
          d->principal->kind != MKind::Implies || !contains(d->left, d->principal))
        return false;
      auto base = minus(L, d->principal);
      auto exp1L = base;
      auto exp1R = plus_f(R, d->principal->a);
      auto exp2L = plus_f(base, d->principal->b);
      auto exp2R = R;
      const auto& p1 = d->premises[0];
      const auto& p2 = d->premises[1];
      return set_key(p1->left) == exp1L && set_key(p1->right) == exp1R &&
             set_key(p2->left) == exp2L && set_key(p2->right) == exp2R &&
             replay(p1, mode) && replay(p2, mode);
    }
    case Rule::BoxStep: {
      if (d->premises.size() != 1 || !d->principal ||
          d->principal->kind != MKind::Box || !contains(d->right, d->principal))
        return false;
      std::set<std::string> expL;
      for (const auto& f : d->left)
        if (f->kind == MKind::Box) {
          expL.insert(print(f));
          expL.insert(print(f->a));
        }
      if (mode == Mode::GL) expL.insert(print(d->principal));
      std::set<std::string> expR{print(d->principal->a)};
      const auto& p = d->premises[0];
      return set_key(p->left) == expL && set_key(p->right) == expR && replay(p, mode);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Small-frame enumeration oracle

namespace {

// All transitive irreflexive relations on k labeled worlds, as per-world
// successor bitmasks. Cached per k.
const std::vector<std::vector<std::uint32_t>>& strict_relations(int k) {
  static std::map<int, std::vector<std::vector<std::uint32_t>>> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) pairs.emplace_back(a, b);

  std::vector<std::vector<std::uint32_t>> rels;
  std::uint64_t total = 1ull << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::uint32_t> succ(k, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((mask >> p) & 1) succ[pairs[p].first] |= (1u << pairs[p].second);
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      std::uint32_t reach = succ[a];
      std::uint32_t m2 = reach;
      while (m2) {
        int b = __builtin_ctz(m2);
        m2 &= m2 - 1;
        if ((succ[b] & ~reach) != 0) { ok = false; break; }
      }
    }
    if (ok) rels.push_back(std::move(succ));
  }
  return cache.emplace(k, std::move(rels)).first->second;
}

}  // namespace

std::optional<KripkeModel> enumerate_refutation(const MF& f, int max_worlds) {
  // Subformulas in evaluation (children-first) order.
  std::vector<const MNode*> order;
  std::map<const MNode*, int> idx;
  std::function<int(const MNode*)> visit = [&](const MNode* n) -> int {
    auto it = idx.find(n);
    if (it != idx.end()) return it->second;
    if (n->a) visit(n->a.get());
    if (n->b) visit(n->b.get());
    int id = static_cast<int>(order.size());
    order.push_back(n);
    idx[n] = id;
    return id;
  };
  visit(f.get());

  auto atom_set = atoms_of(f);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  int na = static_cast<int>(atoms.size());
  std::map<std::string, int> apos;
  for (int i = 0; i < na; ++i) apos[atoms[i]] = i;

  for (int k = 1; k <= max_worlds; ++k) {
    if (static_cast<std::size_t>(na) * k > 24)
      throw std::invalid_argument("enumerate_refutation: too many atom/world bits");
    std::uint64_t vals = 1ull << (na * k);
    for (const auto& succ : strict_relations(k)) {
      for (std::uint64_t val = 0; val < vals; ++val) {
        // truth[i] = bitmask over worlds for subformula i
        std::uint32_t full = (k == 32) ? 0xffffffffu : ((1u << k) - 1);
        std::vector<std::uint32_t> truth(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
          const MNode* n = order[i];
          switch (n->kind) {
            case MKind::Bottom: truth[i] = 0; break;
            case MKind::Atom: {
              int a = apos[n->name];
              std::uint32_t t = 0;
              for (int w = 0; w < k; ++w)
                if ((val >> (a * k + w)) & 1) t |= (1u << w);
              truth[i] = t;
              break;
            }
            case MKind::Implies:
              truth[i] = (~truth[idx[n->a.get()]] | truth[idx[n->b.get()]]) & full;
              break;
            case MKind::Box: {
              std::uint32_t sub = truth[idx[n->a.get()]];
              std::uint32_t t = 0;
              for (int w = 0; w < k; ++w)
                if ((succ[w] & ~sub) == 0) t |= (1u << w);
              truth[i] = t;
              break;
            }
          }
        }
        std::uint32_t goal = truth.back();
        if (goal == full) continue;
        int root = __builtin_ctz(~goal & full);
        KripkeModel m;
        m.worlds = k;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if ((succ[a] >> b) & 1) m.edges.emplace_back(a, b);
        for (int a = 0; a < na; ++a) {
          std::set<int> ws;
          for (int w = 0; w < k; ++w)
            if ((val >> (a * k + w)) & 1) ws.insert(w);
          if (!ws.empty()) m.valuation[atoms[a]] = ws;
        }
        m.root = root;
        return m;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json deriv_to_json(const DerivPtr& d) {
  nlohmann::json j;
  switch (d->rule) {
    case Rule::Axiom: j["rule"] = "axiom"; break;
    case Rule::BottomLeft: j["rule"] = "bottom-left"; break;
    case Rule::ImpLeft: j["rule"] = "imp-left"; break;
    case Rule::ImpRight: j["rule"] = "imp-right"; break;
    case Rule::BoxStep: j["rule"] = "box"; break;
  }
  auto texts = [](const std::vector<MF>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(print(f));
    return out;
  };
  j["left"] = texts(d->left);
  j["right"] = texts(d->right);
  if (d->principal) j["principal"] = print(d->principal);
  j["premises"] = nlohmann::json::array();
  for (const auto& p : d->premises) j["premises"].push_back(deriv_to_json(p));
  return j;
}

}  // namespace

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["verdict"] = v.is_theorem ? "theorem" : "non-theorem";
  if (v.is_theorem && v.trace) j["trace"] = deriv_to_json(v.trace);
  if (!v.is_theorem) {
    if (v.counter) j["countermodel"] = model_to_json(*v.counter);
    else j["countermodel"] = nullptr;
  }
  return j;
}

}  // namespace glab::gl
