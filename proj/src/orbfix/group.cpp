#include "orbfix/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "orbfix/error.hpp"

namespace orbfix {

GeneratedGroup make_group(std::string label, std::size_t degree,
                          std::vector<Permutation> generators) {
  if (degree == 0)
    fail(ErrorCode::BadParameter, "group degree must be at least 1");
  for (const auto &g : generators)
    if (g.degree() != degree)
      fail(ErrorCode::DegreeMismatch,
           "generator " + to_cycles(g) + " has degree " +
               std::to_string(g.degree()) + ", expected " +
               std::to_string(degree));
  if (generators.empty())
    generators.push_back(identity(degree));
  return GeneratedGroup{std::move(label), degree, std::move(generators)};
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto &level : levels_)
    out.push_back(level.base);
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const auto &level : levels_)
    for (const auto &g : level.generators)
      if (seen.insert(g).second)
        out.push_back(g);
  return out;
}

StabilizerChain StabilizerChain::subchain(std::size_t from) const {
  StabilizerChain out;
  out.degree_ = degree_;
  if (from < levels_.size())
    out.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(from),
                       levels_.end());
  out.compute_order();
  return out;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g,
                                                  std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto &level = levels_[l];
    const auto idx = level.position[g(level.base)];
    if (idx < 0)
      return {std::move(g), l};
    g = compose(level.transversal_inverse[static_cast<std::size_t>(idx)], g);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    fail(ErrorCode::DegreeMismatch,
         "membership test for degree " + std::to_string(p.degree()) +
             " against a chain of degree " + std::to_string(degree_));
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::extend_orbit(std::size_t l, const Permutation &generator) {
  auto &level = levels_[l];
  level.generators.push_back(generator);

  // Old transversal entries stay valid; only points reached through the new
  // generator (and then all generators) are added.
  std::size_t scan_new_from = level.orbit.size();
  for (std::size_t i = 0; i < scan_new_from; ++i) {
    Point image = generator(level.orbit[i]);
    if (level.position[image] < 0) {
      level.position[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      level.transversal.push_back(compose(generator, level.transversal[i]));
      level.transversal_inverse.push_back(inverse(level.transversal.back()));
    }
  }
  for (std::size_t i = scan_new_from; i < level.orbit.size(); ++i) {
    for (const auto &s : level.generators) {
      Point image = s(level.orbit[i]);
      if (level.position[image] < 0) {
        level.position[image] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(image);
        level.transversal.push_back(compose(s, level.transversal[i]));
        level.transversal_inverse.push_back(inverse(level.transversal.back()));
      }
    }
  }
}

void StabilizerChain::compute_order() {
  order_ = 1;
  for (const auto &level : levels_)
    order_ *= level.orbit.size();
}

namespace {

ChainLevel empty_level(std::size_t degree, Point base) {
  ChainLevel level;
  level.base = base;
  level.orbit = {base};
  level.position.assign(degree, -1);
  level.position[base] = 0;
  level.transversal = {identity(degree)};
  level.transversal_inverse = {identity(degree)};
  return level;
}

bool fixes_all(const Permutation &g, std::span<const ChainLevel> levels) {
  for (const auto &level : levels)
    if (g(level.base) != level.base)
      return false;
  return true;
}

} // namespace

StabilizerChain build_chain(std::size_t degree,
                            std::span<const Permutation> generators,
                            std::span<const Point> base_hint) {
  StabilizerChain chain;
  chain.degree_ = degree;

  std::vector<bool> in_base(degree, false);
  for (Point b : base_hint) {
    if (b >= degree)
      fail(ErrorCode::OutOfRange, "base point " + std::to_string(b + 1) +
                                      " exceeds degree " +
                                      std::to_string(degree));
    if (in_base[b])
      fail(ErrorCode::RepeatedPoint,
           "base point " + std::to_string(b + 1) + " listed twice");
    in_base[b] = true;
    chain.levels_.push_back(empty_level(degree, b));
  }

  std::vector<Permutation> gens;
  std::set<Permutation> seen;
  for (const auto &g : generators) {
    if (g.degree() != degree)
      fail(ErrorCode::DegreeMismatch, "generator degree " +
                                          std::to_string(g.degree()) +
                                          " differs from " +
                                          std::to_string(degree));
    if (!g.is_identity() && seen.insert(g).second)
      gens.push_back(g);
  }

  for (const auto &g : gens)
    if (fixes_all(g, chain.levels_))
      chain.levels_.push_back(empty_level(degree, least_moved_point(g)));

  for (const auto &g : gens) {
    for (std::size_t l = 0; l < chain.levels_.size(); ++l) {
      chain.extend_orbit(l, g);
      if (g(chain.levels_[l].base) != chain.levels_[l].base)
        break;
    }
  }

  // Schreier-Sims proper: level i is complete once every Schreier generator
  // of level i sifts to the identity through levels i+1.. .
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t idx = 0; idx < chain.levels_[li].orbit.size() && !restarted;
         ++idx) {
      for (std::size_t s_idx = 0; s_idx < chain.levels_[li].generators.size();
           ++s_idx) {
        const auto &level = chain.levels_[li];
        const auto &s = level.generators[s_idx];
        const Point image = s(level.orbit[idx]);
        const auto image_idx =
            static_cast<std::size_t>(level.position[image]);
        auto schreier =
            compose(level.transversal_inverse[image_idx],
                    compose(s, level.transversal[idx]));
        if (schreier.is_identity())
          continue;
        auto [residue, stop] = chain.sift(std::move(schreier), li + 1);
        if (stop == chain.levels_.size() && residue.is_identity())
          continue;
        if (stop == chain.levels_.size())
          chain.levels_.push_back(
              empty_level(degree, least_moved_point(residue)));
        for (std::size_t l = li + 1; l <= stop; ++l)
          chain.extend_orbit(l, residue);
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }

  chain.compute_order();
  return chain;
}

StabilizerChain build_chain(const GeneratedGroup &group,
                            std::span<const Point> base_hint) {
  return build_chain(group.degree, group.generators, base_hint);
}

bool membership(const StabilizerChain &chain, const Permutation &p) {
  return chain.contains(p);
}

std::vector<Permutation> close_group(const GeneratedGroup &group,
                                     std::size_t cap) {
  std::vector<Permutation> elements{identity(group.degree)};
  std::set<Permutation> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto &s : group.generators) {
      auto next = compose(s, elements[i]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          fail(ErrorCode::CapExceeded,
               "closure of " + group.label + " exceeds " +
                   std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

GeneratedGroup pointwise_stabilizer(const StabilizerChain &chain,
                                    std::span<const Point> points) {
  std::string label = "Stab(";
  for (std::size_t i = 0; i < points.size(); ++i)
    label += (i ? "," : "") + std::to_string(points[i] + 1);
  label += ")";

  auto strong = chain.strong_generators();
  auto rebuilt = build_chain(chain.degree(), strong, points);
  std::vector<Permutation> gens;
  if (points.size() < rebuilt.levels().size())
    gens = rebuilt.levels()[points.size()].generators;
  return make_group(std::move(label), chain.degree(), std::move(gens));
}

std::vector<Point> point_orbit(std::size_t degree,
                               std::span<const Permutation> generators,
                               Point x) {
  std::vector<Point> orbit{x};
  std::vector<bool> seen(degree, false);
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto &s : generators) {
      Point y = s(orbit[i]);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit;
}

ElementStream::ElementStream(const StabilizerChain &chain)
    : chain_(&chain), current_(identity(chain.degree())) {
  seek(std::vector<std::size_t>(chain.levels().size(), 0));
}

ElementStream::ElementStream(const StabilizerChain &chain, std::uint64_t begin,
                             std::uint64_t end)
    : chain_(&chain), current_(identity(chain.degree())) {
  std::uint64_t order = 0;
  if (!fits_u64(chain.order(), order))
    fail(ErrorCode::CapExceeded,
         "group order " + to_decimal(chain.order()) +
             " is too large for indexed element ranges");
  end = std::min(end, order);
  if (begin >= end) {
    done_ = true;
    return;
  }
  remaining_ = end - begin;
  auto levels = chain.levels();
  std::vector<std::size_t> digits(levels.size(), 0);
  std::uint64_t rest = begin;
  for (std::size_t l = levels.size(); l-- > 0;) {
    const auto radix = levels[l].orbit.size();
    digits[l] = static_cast<std::size_t>(rest % radix);
    rest /= radix;
  }
  seek(std::move(digits));
}

void ElementStream::seek(std::vector<std::size_t> digits) {
  digits_ = std::move(digits);
  prefix_.assign(digits_.size(), identity(chain_->degree()));
  rebuild_from(0);
}

void ElementStream::rebuild_from(std::size_t level) {
  auto levels = chain_->levels();
  for (std::size_t l = level; l < levels.size(); ++l) {
    const auto &u = levels[l].transversal[digits_[l]];
    if (l == 0)
      prefix_[0] = u;
    else
      compose_into(prefix_[l], prefix_[l - 1], u);
  }
  current_ = prefix_.empty() ? identity(chain_->degree()) : prefix_.back();
}

bool ElementStream::next() {
  if (done_)
    return false;
  if (remaining_) {
    if (*remaining_ == 0) {
      done_ = true;
      return false;
    }
    --*remaining_;
  }
  if (!started_) {
    started_ = true;
    return true;
  }
  auto levels = chain_->levels();
  std::size_t l = levels.size();
  while (l > 0) {
    --l;
    if (++digits_[l] < levels[l].orbit.size()) {
      rebuild_from(l);
      return true;
    }
    digits_[l] = 0;
  }
  done_ = true;
  return false;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
split_index_range(std::uint64_t order, std::size_t parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (order == 0)
    return out;
  parts = std::max<std::size_t>(1, std::min<std::uint64_t>(parts, order));
  const std::uint64_t chunk = order / parts;
  const std::uint64_t extra = order % parts;
  std::uint64_t begin = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    std::uint64_t len = chunk + (i < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

} // namespace orbfix
