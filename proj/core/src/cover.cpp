#include "supconv/cover.hpp"

#include "supconv/error.hpp"
#include "supconv/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace supconv {

namespace {

long ipow_checked(long base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i) {
    require(out <= (1L << 40) / base, ErrorKind::OutOfDomain, "grid denominator too large");
    out *= base;
  }
  return out;
}

bool dominates(const Composition& v, const Composition& o) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < o[i]) return false;
  }
  return true;
}

}  // namespace

RationalVector GoodTranslate::offset_point() const {
  RationalVector out;
  for (int x : offset) out.push_back(make_rational(Integer(x), denominator));
  return out;
}

SimplexGeom GoodTranslate::simplex(int n) const {
  const RationalVector base = offset_point();
  const Rational size = 1 / pow(Rational(n), static_cast<unsigned>(level));
  std::vector<BaryPoint> verts;
  for (std::size_t i = 0; i < base.size(); ++i) {
    RationalVector c = base;
    c[i] += size;
    verts.emplace_back(std::move(c));
  }
  return SimplexGeom(std::move(verts));
}

Integer GoodClosure::denominator(int level) const {
  return Integer(ipow_checked(n, level + options.grid_extra));
}

std::vector<GoodTranslate> GoodClosure::translates(int level) const {
  require(level >= 0 && static_cast<std::size_t>(level) < best.size(), ErrorKind::InvalidInput,
          "level " + std::to_string(level) + " was not explored");
  std::vector<GoodTranslate> out;
  const Integer den = denominator(level);
  for (std::size_t id : best[static_cast<std::size_t>(level)]) {
    const auto& node = nodes[id];
    out.push_back({level, node.offset, den, node.constant, id});
  }
  return out;
}

Rational GoodClosure::replay(std::size_t id) const {
  std::unordered_map<std::size_t, Rational> memo;
  const Rational vertex_scale = 1 / pow(Rational(n), static_cast<unsigned>(k + 1));
  std::function<Rational(std::size_t)> eval = [&](std::size_t i) -> Rational {
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    const DerivationNode& node = nodes.at(i);
    Rational c;
    switch (node.rule) {
      case GoodRule::Base:
        if (node.level != 0 || std::any_of(node.offset.begin(), node.offset.end(), [](int x) { return x != 0; }))
          throw std::logic_error("base node is not T");
        c = 0;
        break;
      case GoodRule::Vertex: {
        const DerivationNode& parent = nodes.at(node.first);
        Composition expected = parent.offset;
        expected.at(static_cast<std::size_t>(node.vertex)) += static_cast<int>(ipow_checked(n, parent.level + options.grid_extra) * (n - 1));
        if (node.level != parent.level + 1 || expected != node.offset)
          throw std::logic_error("vertex rule offset mismatch");
        c = 1 + eval(node.first) * vertex_scale;
        break;
      }
      case GoodRule::Combine: {
        const DerivationNode& a = nodes.at(node.first);
        const DerivationNode& b = nodes.at(node.second);
        if (a.level != node.level || b.level != node.level) throw std::logic_error("combine rule level mismatch");
        for (std::size_t j = 0; j < node.offset.size(); ++j) {
          if (static_cast<long>(node.offset[j]) * n != static_cast<long>(n - 1) * a.offset[j] + b.offset[j])
            throw std::logic_error("combine rule offset mismatch");
        }
        c = 1 + ((n - 1) * eval(node.first) + eval(node.second)) / n;
        break;
      }
    }
    memo.emplace(i, c);
    return c;
  };
  return eval(id);
}

std::vector<std::size_t> GoodClosure::trace(std::size_t id) const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(nodes.size(), false);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (seen[i]) return;
    seen[i] = true;
    const auto& node = nodes[i];
    if (node.rule == GoodRule::Vertex) visit(node.first);
    if (node.rule == GoodRule::Combine) {
      visit(node.first);
      visit(node.second);
    }
    out.push_back(i);
  };
  visit(id);
  return out;
}

GoodClosure closure_good(int k, int n, int max_level, const ClosureOptions& options) {
  check_dimension(k);
  require(n >= 2, ErrorKind::InvalidInput, "closure_good: n must be >= 2");
  require(max_level >= 0, ErrorKind::InvalidInput, "closure_good: max_level must be >= 0");
  require(options.grid_extra >= 0, ErrorKind::InvalidInput, "closure_good: grid_extra must be >= 0");

  GoodClosure g;
  g.k = k;
  g.n = n;
  g.options = options;
  const auto width = static_cast<std::size_t>(k) + 1;
  const Rational vertex_scale = 1 / pow(Rational(n), static_cast<unsigned>(k + 1));

  g.nodes.push_back({0, Composition(width, 0), Rational(0), GoodRule::Base, -1, 0, 0});
  g.best.push_back({0});

  for (int level = 1; level <= max_level && !g.truncated; ++level) {
    std::map<Composition, std::size_t> current;
    auto offer = [&](DerivationNode node) -> bool {
      auto it = current.find(node.offset);
      if (it != current.end() && g.nodes[it->second].constant <= node.constant) return false;
      if (g.nodes.size() >= options.node_budget) {
        g.truncated = true;
        return false;
      }
      g.nodes.push_back(std::move(node));
      current[g.nodes.back().offset] = g.nodes.size() - 1;
      return true;
    };

    const long step = ipow_checked(n, level - 1 + options.grid_extra) * (n - 1);
    for (std::size_t parent : g.best[static_cast<std::size_t>(level - 1)]) {
      for (std::size_t i = 0; i < width; ++i) {
        DerivationNode node;
        node.level = level;
        node.offset = g.nodes[parent].offset;
        node.offset[i] += static_cast<int>(step);
        node.constant = 1 + g.nodes[parent].constant * vertex_scale;
        node.rule = GoodRule::Vertex;
        node.vertex = static_cast<int>(i);
        node.first = parent;
        offer(std::move(node));
      }
    }

    bool changed = true;
    int round = 0;
    for (; changed && round < options.combine_rounds && !g.truncated; ++round) {
      changed = false;
      std::vector<std::size_t> ids;
      for (const auto& [offset, id] : current) ids.push_back(id);
      for (std::size_t a : ids) {
        for (std::size_t b : ids) {
          if (a == b || g.truncated) continue;
          const auto& oa = g.nodes[a].offset;
          const auto& ob = g.nodes[b].offset;
          Composition offset(width);
          bool on_grid = true;
          for (std::size_t j = 0; j < width && on_grid; ++j) {
            const long num = static_cast<long>(n - 1) * oa[j] + ob[j];
            on_grid = num % n == 0;
            offset[j] = static_cast<int>(num / n);
          }
          if (!on_grid) continue;
          DerivationNode node;
          node.level = level;
          node.offset = std::move(offset);
          node.constant = 1 + ((n - 1) * g.nodes[a].constant + g.nodes[b].constant) / n;
          node.rule = GoodRule::Combine;
          node.first = a;
          node.second = b;
          changed = offer(std::move(node)) || changed;
        }
      }
    }
    if (changed && round == options.combine_rounds) g.rounds_exhausted = true;

    std::vector<std::size_t> level_best;
    for (const auto& [offset, id] : current) level_best.push_back(id);
    g.best.push_back(std::move(level_best));
  }
  return g;
}

CoverResult find_cover(const GoodClosure& closure, int level) {
  const int k = closure.k;
  const int n = closure.n;
  CoverResult result;
  if (level < 0 || static_cast<std::size_t>(level) >= closure.best.size()) {
    result.failure = "level " + std::to_string(level) + " was not explored";
    return result;
  }
  const auto candidates = closure.translates(level);
  const Integer denominator = closure.denominator(level);
  const int grid = static_cast<int>(denominator.get_si());
  const auto cells = subdivide(k, grid);

  std::vector<std::vector<std::size_t>> covers(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (dominates(cells[i].v, candidates[c].offset)) covers[c].push_back(i);
    }

  std::vector<char> covered(cells.size(), 0);
  std::vector<int> owner(cells.size(), -1);
  std::vector<std::size_t> chosen;
  std::size_t remaining = cells.size();
  while (remaining > 0) {
    std::size_t best = candidates.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t i : covers[c]) gain += covered[i] ? 0 : 1;
      if (gain > best_gain || (gain == best_gain && gain > 0 && candidates[c].constant < candidates[best].constant)) {
        best = c;
        best_gain = gain;
      }
    }
    if (best_gain == 0) {
      result.failure = "good translates at level " + std::to_string(level) + " leave " + std::to_string(remaining) +
                       " of " + std::to_string(cells.size()) + " cells uncovered";
      return result;
    }
    chosen.push_back(best);
    for (std::size_t i : covers[best]) {
      if (!covered[i]) {
        covered[i] = 1;
        owner[i] = static_cast<int>(chosen.size() - 1);
        --remaining;
      }
    }
  }

  Integer capacity;
  mpz_ui_pow_ui(capacity.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(level * (k + 1)));
  if (Integer(static_cast<long>(chosen.size())) >= capacity) {
    result.failure = "cover uses " + std::to_string(chosen.size()) + " translates, not fewer than n^{l(k+1)} = " +
                     capacity.get_str();
    return result;
  }

  CoverCertificate cert;
  cert.k = k;
  cert.n = n;
  cert.level = level;
  cert.grid_denominator = denominator;
  for (std::size_t c : chosen) {
    cert.family.push_back(candidates[c]);
    cert.sum_constants += candidates[c].constant;
  }
  cert.count = chosen.size();

  // Independent exact confirmation: each cell's vertices and barycenter lie
  // in the translate that claimed it.
  std::vector<SimplexGeom> shapes;
  for (const auto& t : cert.family) shapes.push_back(t.simplex(n));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto verts = cell_vertices(grid, cells[i]);
    RationalVector center(verts.front().coords().size());
    for (const auto& v : verts)
      for (std::size_t j = 0; j < center.size(); ++j) center[j] += v[j] / static_cast<long>(verts.size());
    const SimplexGeom& shape = shapes[static_cast<std::size_t>(owner[i])];
    bool inside = contains(shape, BaryPoint(center));
    for (const auto& v : verts) inside = inside && contains(shape, v);
    if (!inside) throw std::logic_error("cover certificate: a cell escapes its translate");
    ++cert.cells_checked;
  }

  cert.derived_constant = (1 - make_rational(Integer(static_cast<long>(cert.count)), capacity)) / cert.sum_constants;
  result.certificate = std::move(cert);
  return result;
}

CoverSearch search_cover(int k, int n, int max_level, const ClosureOptions& options) {
  CoverSearch search{closure_good(k, n, max_level, options), std::nullopt, {}};
  for (int level = 1; level <= max_level && static_cast<std::size_t>(level) < search.closure.best.size(); ++level) {
    CoverResult r = find_cover(search.closure, level);
    if (r.certificate) {
      search.attempts.emplace_back(level, "success");
      search.certificate = std::move(r.certificate);
      break;
    }
    search.attempts.emplace_back(level, r.failure);
  }
  return search;
}

std::vector<std::pair<SimplexGeom, Composition>> scaled_simplex_cover(int k, int n) {
  check_dimension(k);
  require(n >= k + 1, ErrorKind::OutOfDomain, "the covering needs n >= k+1");
  std::vector<std::pair<SimplexGeom, Composition>> out;
  for (auto& v : enumerate_B(k, n - k)) {
    std::vector<BaryPoint> verts;
    for (int i = 0; i <= k; ++i) {
      Composition c = v;
      c[static_cast<std::size_t>(i)] += k;
      verts.push_back(BaryPoint::from_composition(c, n));
    }
    out.emplace_back(SimplexGeom(std::move(verts)), std::move(v));
  }
  return out;
}

bool scaled_simplex_cover_verified(int k, int n) {
  const auto translates = scaled_simplex_cover(k, n);
  const BaryLattice lat(k, n * k);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& y = lat.composition(i);
    // y lies in (kT + v)/n iff n*y - v >= 0, i.e. y_j >= k v_j at resolution nk.
    const auto it = std::find_if(translates.begin(), translates.end(), [&](const auto& t) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] < k * t.second[j]) return false;
      }
      return true;
    });
    if (it == translates.end() || !contains(it->first, lat.point(i))) return false;
  }
  return true;
}

}  // namespace supconv
