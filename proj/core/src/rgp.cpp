// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tugame/rgp.hpp"

#include <stdexcept>
#include <utility>

#include "tugame/linalg.hpp"

namespace tugame {

namespace {

Vec char_vector(Coalition s, int n) {
  Vec e(n);
  for (int k = 1; k <= n; ++k) {
    if (s.contains(k)) e[k - 1] = Rational(1);
  }
  return e;
}

// The optimal face is a single point iff efficiency plus the universally
// tight equalities already pin x (their span has full rank). Non-universal
// constraints are slack at a relative-interior point and cannot cut the
// affine hull further.
bool least_core_is_point(const TuGame& v, const LeastCoreResult& lc) {
  Mat rows{char_vector(v.grand(), v.n())};
  for (Coalition s : lc.universally_tight) rows.push_back(char_vector(s, v.n()));
  return rank(std::move(rows)) == v.n();
}

Coalition pick_essential(const LeastCoreResult& lc) {
  if (!lc.universally_tight.empty()) return lc.universally_tight.front();
  return lc.tight.front();  // defensive; a nonempty face always has one
}

Coalition relabel(Coalition s, const std::vector<int>& labels) {
  Coalition out;
  for (int b : s.players()) out = out | Coalition::single(labels[b - 1]);
  return out;
}

struct ChainResult {
  Rational value;  // v^k({i}) read off at termination
  std::vector<RgpLevelFlag> flags;
};

// One player's while-loop. `override_level`/`override_alloc` replace the
// pinning allocation at a single level (used by the ambiguity witness probe).
ChainResult run_chain(const TuGame& game, int player,
                      const std::optional<Allocation>& supplied,
                      int override_level = 0,
                      const Allocation* override_alloc = nullptr) {
  TuGame cur = game;
  std::vector<int> labels(game.n());
  for (int k = 0; k < game.n(); ++k) labels[k] = k + 1;

  ChainResult out;
  int level = 1;
  while (cur.n() > 1) {
    const LeastCoreResult lc = least_core(cur);
    const Coalition essential = pick_essential(lc);
    const bool point = least_core_is_point(cur, lc);

    int pos = 0;  // current index of `player`
    for (int b = 0; b < cur.n(); ++b) {
      if (labels[b] == player) { pos = b + 1; break; }
    }
    const Coalition keep =
        essential.contains(pos) ? essential : essential.complement(cur.n());
    const Coalition removed = keep.complement(cur.n());

    const Allocation* pin = &lc.witness;
    if (override_alloc && level == override_level) pin = override_alloc;

    std::vector<Rational> x_removed;
    for (int b : removed.players()) {
      x_removed.push_back(supplied ? (*supplied)[labels[b - 1] - 1]
                                   : (*pin)[b - 1]);
    }

    if (!supplied && !point) {
      RgpLevelFlag flag;
      flag.player = player;
      flag.level = level;
      flag.chosen = relabel(essential, labels);
      for (Coalition alt : lc.universally_tight) {
        if (!(alt == essential)) flag.alternatives.push_back(relabel(alt, labels));
      }
      flag.ambiguous = true;
      out.flags.push_back(std::move(flag));
    }

    cur = rgp_reduce(cur, keep, removed, x_removed);
    std::vector<int> next_labels;
    for (int b : keep.players()) next_labels.push_back(labels[b - 1]);
    labels = std::move(next_labels);
    ++level;
  }
  out.value = cur.value(Coalition::single(1));
  return out;
}

}  // namespace

EssentialCoalition essential_coalition(const TuGame& v) {
  if (v.n() <= 1) {
    throw std::invalid_argument("essential_coalition: need more than one player");
  }
  const LeastCoreResult lc = least_core(v);
  EssentialCoalition out;
  out.epsilon = lc.epsilon;
  out.forced = !lc.universally_tight.empty();
  out.coalition = pick_essential(lc);
  return out;
}

TuGame rgp_reduce(const TuGame& v, Coalition keep, Coalition removed,
                  const std::vector<Rational>& x_removed) {
  if (keep.empty()) throw std::invalid_argument("rgp_reduce: keep must be nonempty");
  if (!((keep | removed) == v.grand()) || !(keep & removed).empty()) {
    throw std::invalid_argument("rgp_reduce: keep and removed must partition the players");
  }
  if (x_removed.size() != static_cast<std::size_t>(removed.size())) {
    throw std::invalid_argument("rgp_reduce: removed payoff arity mismatch");
  }
  Rational x_rem_total;
  for (const auto& r : x_removed) x_rem_total += r;

  const std::vector<int> members = keep.players();
  const int nn = static_cast<int>(members.size());
  std::vector<Rational> vals(std::size_t{1} << nn);
  const std::uint32_t full_new = (std::uint32_t{1} << nn) - 1;
  for (std::uint32_t t = 1; t <= full_new; ++t) {
    Coalition told;
    for (int b = 0; b < nn; ++b) {
      if (t >> b & 1) told = told | Coalition::single(members[b]);
    }
    if (t == full_new) {
      vals[t] = v.value(v.grand()) - x_rem_total;
    } else {
      Rational lifted = v.value(told | removed) - x_rem_total;
      vals[t] = v.value(told) < lifted ? std::move(lifted) : v.value(told);
    }
  }
  return TuGame::unchecked(nn, std::move(vals));
}

RgpRun run_rgp_procedure(const TuGame& v,
                         const std::optional<Allocation>& supplied) {
  if (supplied && supplied->size() != static_cast<std::size_t>(v.n())) {
    throw std::invalid_argument("run_rgp_procedure: supplied arity mismatch");
  }
  RgpRun run;
  run.convex_input = is_convex(v);
  run.per_player.resize(v.n());
  for (int i = 1; i <= v.n(); ++i) {
    ChainResult chain = run_chain(v, i, supplied);
    run.per_player[i - 1] = std::move(chain.value);
    for (auto& f : chain.flags) run.flags.push_back(std::move(f));
  }

  if (!run.flags.empty()) {
    run.verdict = RgpVerdict::SelectionAmbiguous;
    // Witness: the procedure validates ANY supplied least-core allocation, so
    // two distinct vertices yield two distinct answers.
    if (v.n() <= 6) {
      const auto verts = least_core_vertices(v);
      if (verts.size() >= 2) {
        RgpRun a = run_rgp_procedure(v, verts[0]);
        RgpRun b = run_rgp_procedure(v, verts[1]);
        if (!(a.per_player == b.per_player)) {
          run.witness_inputs = {verts[0], verts[1]};
          run.witness_outputs = {a.per_player, b.per_player};
        }
      }
    }
    if (!run.witness_outputs) {
      // Point top-level least-core (or no divergence there): fork the first
      // flagged level with an alternative vertex of that level's game.
      const RgpLevelFlag& f = run.flags.front();
      TuGame cur = v;
      std::vector<int> labels(v.n());
      for (int k = 0; k < v.n(); ++k) labels[k] = k + 1;
      for (int level = 1; level < f.level; ++level) {
        const LeastCoreResult lc = least_core(cur);
        const Coalition essential = pick_essential(lc);
        int pos = 0;
        for (int b = 0; b < cur.n(); ++b) {
          if (labels[b] == f.player) { pos = b + 1; break; }
        }
        const Coalition keep =
            essential.contains(pos) ? essential : essential.complement(cur.n());
        const Coalition removed = keep.complement(cur.n());
        std::vector<Rational> x_removed;
        for (int b : removed.players()) x_removed.push_back(lc.witness[b - 1]);
        cur = rgp_reduce(cur, keep, removed, x_removed);
        std::vector<int> next_labels;
        for (int b : keep.players()) next_labels.push_back(labels[b - 1]);
        labels = std::move(next_labels);
      }
      if (cur.n() <= 6) {
        const Rational base = run.per_player[f.player - 1];
        for (const Allocation& vert : least_core_vertices(cur)) {
          ChainResult alt = run_chain(v, f.player, std::nullopt, f.level, &vert);
          if (alt.value != base) {
            Allocation modified = run.per_player;
            modified[f.player - 1] = alt.value;
            run.witness_outputs = {run.per_player, std::move(modified)};
            break;
          }
        }
      }
    }
    return run;
  }

  run.verdict = run.per_player == prenucleolus_lp_oracle(v)
                    ? RgpVerdict::MatchesNucleolus
                    : RgpVerdict::Mismatch;
  return run;
}

}  // namespace tugame
