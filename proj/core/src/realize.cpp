#include "permprod/realize.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace permprod {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Permutation canonical_full_cycle(int n) {
  std::vector<int> points(n);
  std::iota(points.begin(), points.end(), 1);
  return Permutation::single_cycle(n, points);
}

Permutation canonical_near_cycle(int n) {
  std::vector<int> points(n - 1);
  std::iota(points.begin(), points.end(), 1);
  return Permutation::single_cycle(n, points);
}

int default_retry_cap(int n) {
  return static_cast<int>(100.0 * n * std::max(1.0, std::log(static_cast<double>(n))));
}

// ---------------------------------------------------------------------------
// Constructive realization.
//
// A pair (alpha, beta) with compose(alpha, beta) = w for an n-cycle w is a
// bicolored map on n points: white vertices are the cycles of alpha (fixed
// points included), black vertices the cycles of beta, and each point joins
// its white cycle to its black cycle.  Two facts make every admissible class
// pair constructible:
//
//   * When the graph is a tree (#white + #black = n+1, the minimal index
//     sum), the product is a single n-cycle for every choice of cyclic
//     orders.  Trees with prescribed degrees are built by repeatedly
//     attaching a capacity-1 vertex to a surviving vertex of the other
//     colour.
//
//   * Replacing alpha by compose(rho, alpha), where rho is a 3-cycle
//     (u -> v -> t) through three distinct cycles of alpha with positions on
//     the product cycle in increasing order, merges those three cycles,
//     keeps beta intact, and turns the product w into compose(rho, w), again
//     an n-cycle.  Each such move absorbs index surplus 2 on the white side;
//     the mirror move compose(beta, rho) does the same on the black side.
//
// A part of size l can be assembled from at most floor((l-1)/2) merges, and
// summing those capacities over both sides always covers the required
// surplus except for the pair of fixed-point-free involution classes, which
// the near-cycle variant excludes anyway.
// ---------------------------------------------------------------------------

struct TreeEdge {
  int white;  // index into the white node list
  int black;
};

// Builds a bipartite tree with the given vertex degrees (all >= 1,
// sum(white) == sum(black) == #edges == #nodes - 1).  When forced_white /
// forced_black are set the tree contains that edge; the forced pair counts
// as one merged vertex so the leaf-attachment argument still applies.
std::vector<TreeEdge> build_bipartite_tree(const std::vector<int>& white_caps,
                                           const std::vector<int>& black_caps,
                                           int forced_white, int forced_black) {
  const int p = static_cast<int>(white_caps.size());
  const int q = static_cast<int>(black_caps.size());
  const bool forced = forced_white >= 0;

  // Node ids: 0..p-1 white, p..p+q-1 black.
  const int total = p + q;
  std::vector<int> wcap(total, 0), bcap(total, 0);
  for (int i = 0; i < p; ++i) wcap[i] = white_caps[i];
  for (int j = 0; j < q; ++j) bcap[p + j] = black_caps[j];

  std::vector<int> merge_rep(total);
  std::iota(merge_rep.begin(), merge_rep.end(), 0);

  std::vector<TreeEdge> edges;
  if (forced) {
    edges.push_back({forced_white, forced_black});
    --wcap[forced_white];
    --bcap[p + forced_black];
    merge_rep[p + forced_black] = forced_white;
  }

  auto group_of = [&](int id) { return merge_rep[id]; };
  auto cap_of_group = [&](int g) {
    int sum = 0;
    for (int id = 0; id < total; ++id)
      if (group_of(id) == g) sum += wcap[id] + bcap[id];
    return sum;
  };

  std::vector<bool> done(total, false);
  int vertices_left = forced ? total - 1 : total;

  while (vertices_left > 1) {
    int leaf_group = -1;
    for (int id = 0; id < total; ++id) {
      if (done[id] || group_of(id) != id) continue;
      if (cap_of_group(id) == 1) {
        leaf_group = id;
        break;
      }
    }
    if (leaf_group < 0) throw Error("internal: bipartite tree builder found no leaf");

    int leaf_node = -1;
    bool stub_is_white = false;
    for (int id = 0; id < total; ++id) {
      if (group_of(id) != leaf_group) continue;
      if (wcap[id] > 0) {
        leaf_node = id;
        stub_is_white = true;
        break;
      }
      if (bcap[id] > 0) {
        leaf_node = id;
        stub_is_white = false;
        break;
      }
    }

    // Attach to the fattest group with an opposite stub; with more than two
    // vertices left that group keeps a stub afterwards, so it stays
    // reachable.
    int target = -1;
    for (int id = 0; id < total; ++id) {
      if (done[group_of(id)] || group_of(id) == leaf_group) continue;
      const int cap = stub_is_white ? bcap[id] : wcap[id];
      if (cap <= 0) continue;
      if (vertices_left > 2 && cap_of_group(group_of(id)) < 2) continue;
      if (target < 0 || cap_of_group(group_of(id)) > cap_of_group(group_of(target)))
        target = id;
    }
    if (target < 0) throw Error("internal: bipartite tree builder stuck");

    if (stub_is_white) {
      edges.push_back({leaf_node, target - p});
      --wcap[leaf_node];
      --bcap[target];
    } else {
      edges.push_back({target, leaf_node - p});
      --wcap[target];
      --bcap[leaf_node];
    }
    done[leaf_group] = true;
    --vertices_left;
  }
  for (int id = 0; id < total; ++id)
    if (wcap[id] != 0 || bcap[id] != 0)
      throw Error("internal: bipartite tree builder left spare capacity");
  return edges;
}

// How many merge moves the parts of one side can absorb: each part of size l
// can be assembled from up to floor((l-1)/2) three-way merges.
int merge_capacity(const std::vector<int>& parts) {
  int total = 0;
  for (int part : parts) total += (part - 1) / 2;
  return total;
}

struct SidePlan {
  std::vector<int> piece_size;    // piece sizes fed to the tree builder
  std::vector<int> piece_group;   // originating part index per piece
  std::vector<int> merges;        // three-way merges needed per part
  std::vector<int> big_piece;     // index of the one non-unit piece per part
};

// Rebuilds the piece lists from the per-part merge counts: part i becomes a
// piece of size part - 2*t_i plus 2*t_i single points.
void materialize_pieces(SidePlan& plan, const std::vector<int>& parts) {
  plan.piece_size.clear();
  plan.piece_group.clear();
  plan.big_piece.assign(parts.size(), -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    plan.big_piece[i] = static_cast<int>(plan.piece_size.size());
    plan.piece_size.push_back(parts[i] - 2 * plan.merges[i]);
    plan.piece_group.push_back(i);
    for (int s = 0; s < 2 * plan.merges[i]; ++s) {
      plan.piece_size.push_back(1);
      plan.piece_group.push_back(i);
    }
  }
}

// Distributes `moves` merge moves over the parts (t_i <= floor((part-1)/2)).
// The part listed in `spare_last` receives moves only after everyone else is
// saturated.
SidePlan plan_side(const std::vector<int>& parts, int moves, int spare_last) {
  SidePlan plan;
  plan.merges.assign(parts.size(), 0);
  std::vector<int> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool spare_a = a == spare_last, spare_b = b == spare_last;
    if (spare_a != spare_b) return spare_b;
    return parts[a] > parts[b];
  });
  for (int idx : order) {
    if (moves == 0) break;
    const int take = std::min(moves, (parts[idx] - 1) / 2);
    plan.merges[idx] = take;
    moves -= take;
  }
  if (moves != 0) throw Error("internal: merge plan out of capacity");
  materialize_pieces(plan, parts);
  return plan;
}

// A realized pair with product equal to the canonical cycle of its degree.
struct Realized {
  Permutation alpha;
  Permutation beta;
  int shared_point = 0;  // for a forced pair: a point in both requested parts
};

std::vector<int> cycle_ids(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> id(n, -1);
  int next = 0;
  for (int s = 1; s <= n; ++s) {
    if (id[s - 1] >= 0) continue;
    for (int x = s; id[x - 1] < 0; x = p.apply(x)) id[x - 1] = next;
    ++next;
  }
  return id;
}

// Positions along the cycle `pi` starting from point 1.
std::vector<int> cycle_positions(const Permutation& pi) {
  const int n = pi.degree();
  std::vector<int> pos(n, -1);
  int at = 1;
  for (int step = 0; step < n; ++step) {
    pos[at - 1] = step;
    at = pi.apply(at);
  }
  return pos;
}

// Merges three distinct cycles of `side` that all belong to `group` (as per
// point_group), keeping compose-order so that the product stays a single
// cycle: white merges pre-compose rho, black merges post-compose it.
void apply_merge(bool white_side, Permutation& side, Permutation& pi,
                 const std::vector<int>& point_group, int group) {
  const int n = side.degree();
  const auto ids = cycle_ids(side);
  const auto pos = cycle_positions(pi);

  // Minimal-position point of every cycle of this group.
  std::vector<int> best;  // representative points
  std::vector<int> seen_cycle;
  for (int x = 1; x <= n; ++x) {
    if (point_group[x - 1] != group) continue;
    const int c = ids[x - 1];
    auto it = std::find(seen_cycle.begin(), seen_cycle.end(), c);
    if (it == seen_cycle.end()) {
      seen_cycle.push_back(c);
      best.push_back(x);
    } else {
      int& rep = best[it - seen_cycle.begin()];
      if (pos[x - 1] < pos[rep - 1]) rep = x;
    }
  }
  if (best.size() < 3) throw Error("internal: merge needs three cycles");
  std::sort(best.begin(), best.end(), [&](int a, int b) { return pos[a - 1] < pos[b - 1]; });
  const int u = best[0], v = best[1], t = best[2];
  const Permutation rho = Permutation::from_cycles(n, {{u, v, t}});
  if (white_side) {
    side = compose(rho, side);
    pi = compose(rho, pi);
  } else {
    side = compose(side, rho);
    pi = compose(pi, rho);
  }
}

// Realizes alpha in class lambda, beta in class mu with product (1,...,n).
// Preconditions (index sum n-1+2k, k >= 0, not two fixed-point-free
// involution classes) are the caller's job.  With forced_lambda_part /
// forced_mu_part >= 0 the returned shared_point lies in the cycle built for
// that lambda part and in the cycle built for that mu part.
Realized construct_full_cycle(const std::vector<int>& lambda, const std::vector<int>& mu,
                              int n, int forced_lambda_part, int forced_mu_part) {
  const int ind_l = n - static_cast<int>(lambda.size());
  const int ind_m = n - static_cast<int>(mu.size());
  const int genus = (ind_l + ind_m - (n - 1)) / 2;

  int white_moves = std::min(genus, merge_capacity(lambda));
  int black_moves = genus - white_moves;

  SidePlan white = plan_side(lambda, white_moves, forced_lambda_part);
  SidePlan black = plan_side(mu, black_moves, forced_mu_part);

  const bool forced = forced_lambda_part >= 0;
  int forced_white = -1, forced_black = -1;
  if (forced) {
    forced_white = white.big_piece[forced_lambda_part];
    forced_black = black.big_piece[forced_mu_part];
    // The merged forced vertex must keep a stub unless it is the whole tree.
    if (white.piece_size[forced_white] + black.piece_size[forced_black] < 3 &&
        static_cast<int>(white.piece_size.size() + black.piece_size.size()) > 2) {
      // Shift one merge away from the forced parts to regain capacity.
      auto shift = [&](SidePlan& plan, const std::vector<int>& parts, int part) -> bool {
        if (plan.merges[part] == 0) return false;
        for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
          if (i == part || plan.merges[i] >= (parts[i] - 1) / 2) continue;
          ++plan.merges[i];
          --plan.merges[part];
          materialize_pieces(plan, parts);
          return true;
        }
        return false;
      };
      bool fixed = false;
      if (white.piece_size[forced_white] == 1) fixed = shift(white, lambda, forced_lambda_part);
      if (!fixed && black.piece_size[forced_black] == 1)
        fixed = shift(black, mu, forced_mu_part);
      if (!fixed) throw Error("internal: forced pair has no spare capacity");
      forced_white = white.big_piece[forced_lambda_part];
      forced_black = black.big_piece[forced_mu_part];
    }
  }

  const auto edges = build_bipartite_tree(white.piece_size, black.piece_size, forced_white,
                                          forced_black);
  if (static_cast<int>(edges.size()) != n) throw Error("internal: tree edge count mismatch");

  // Edge t carries point t+1; rotations in edge order (any order is valid).
  std::vector<std::vector<int>> white_rot(white.piece_size.size()),
      black_rot(black.piece_size.size());
  for (int t = 0; t < n; ++t) {
    white_rot[edges[t].white].push_back(t + 1);
    black_rot[edges[t].black].push_back(t + 1);
  }
  Permutation alpha = Permutation::from_cycles(n, white_rot);
  Permutation beta = Permutation::from_cycles(n, black_rot);
  Permutation pi = compose(alpha, beta);
  if (static_cast<int>(cycle_type(pi).parts().size()) != 1)
    throw Error("internal: tree realization product is not a single cycle");

  std::vector<int> white_group(n), black_group(n);
  for (int t = 0; t < n; ++t) {
    white_group[t] = white.piece_group[edges[t].white];
    black_group[t] = black.piece_group[edges[t].black];
  }

  for (int part = 0; part < static_cast<int>(lambda.size()); ++part)
    for (int m = 0; m < white.merges[part]; ++m)
      apply_merge(true, alpha, pi, white_group, part);
  for (int part = 0; part < static_cast<int>(mu.size()); ++part)
    for (int m = 0; m < black.merges[part]; ++m)
      apply_merge(false, beta, pi, black_group, part);

  // Conjugate so the product becomes (1,...,n): g(pi^t(1)) = t+1.
  std::vector<int> g_img(n);
  int at = 1;
  for (int t = 0; t < n; ++t) {
    g_img[at - 1] = t + 1;
    at = pi.apply(at);
  }
  const Permutation g = Permutation::from_images(g_img);

  Realized out{conjugate(alpha, g), conjugate(beta, g), 0};
  if (forced) out.shared_point = g.apply(1);  // the forced edge carried point 1
  if (compose(out.alpha, out.beta) != canonical_full_cycle(n))
    throw Error("internal: constructive product mismatch");
  return out;
}

// ---------------------------------------------------------------------------
// Complete backtracking search (the last-resort guarantee).
//
// Builds alpha cycle by cycle in canonical order (each cycle anchored at the
// smallest point not yet placed).  Every alpha edge x -> y fixes one edge
// y -> w(x) of beta = alpha^-1 w, so beta's functional graph grows alongside;
// paths that close are checked against the remaining parts of mu, and any
// open path longer than the largest remaining part prunes the branch.
// ---------------------------------------------------------------------------

class Backtracker {
 public:
  Backtracker(std::vector<int> lambda, std::vector<int> mu, Permutation target,
              bool need_transitive)
      : n_(target.degree()),
        target_(std::move(target)),
        need_transitive_(need_transitive),
        aimg_(n_ + 1, 0),
        placed_(n_ + 1, false),
        head_of_(n_ + 1),
        tail_of_(n_ + 1),
        len_of_(n_ + 1, 0),
        lambda_count_(n_ + 1, 0),
        mu_count_(n_ + 1, 0) {
    for (int part : lambda) ++lambda_count_[part];
    for (int part : mu) ++mu_count_[part];
    std::iota(head_of_.begin(), head_of_.end(), 0);
    std::iota(tail_of_.begin(), tail_of_.end(), 0);
  }

  std::optional<std::pair<Permutation, Permutation>> run() {
    if (search_next_cycle()) return solution_;
    return std::nullopt;
  }

 private:
  int max_mu() const {
    for (int size = n_; size >= 1; --size)
      if (mu_count_[size] > 0) return size;
    return 0;
  }

  struct Undo {
    bool closed;
    int closed_size;
    int head_a, tail_b;
    int old_len_a;
  };

  bool add_beta_edge(int y, int z, Undo& undo) {
    const int head_a = head_of_[y];
    if (head_a == z) {
      const int size = len_of_[z] + 1;
      if (mu_count_[size] == 0) return false;
      --mu_count_[size];
      undo = {true, size, 0, 0, 0};
      return true;
    }
    const int tail_b = tail_of_[z];
    const int new_len = len_of_[head_a] + 1 + len_of_[z];
    if (new_len + 1 > max_mu()) return false;
    undo = {false, 0, head_a, tail_b, len_of_[head_a]};
    len_of_[head_a] = new_len;
    tail_of_[head_a] = tail_b;
    head_of_[tail_b] = head_a;
    return true;
  }

  void undo_beta_edge(int y, int z, const Undo& undo) {
    if (undo.closed) {
      ++mu_count_[undo.closed_size];
      return;
    }
    len_of_[undo.head_a] = undo.old_len_a;
    tail_of_[undo.head_a] = y;
    head_of_[y] = undo.head_a;
    head_of_[undo.tail_b] = z;
  }

  bool search_next_cycle() {
    int anchor = 0;
    for (int x = 1; x <= n_; ++x)
      if (!placed_[x]) {
        anchor = x;
        break;
      }
    if (anchor == 0) return finish();

    for (int len = n_; len >= 1; --len) {
      if (lambda_count_[len] == 0) continue;
      --lambda_count_[len];
      placed_[anchor] = true;
      if (extend_cycle(anchor, anchor, len - 1)) return true;
      placed_[anchor] = false;
      ++lambda_count_[len];
    }
    return false;
  }

  bool extend_cycle(int anchor, int current, int remaining) {
    const int z = target_.apply(current);
    if (remaining == 0) {
      Undo undo;
      if (!add_beta_edge(anchor, z, undo)) return false;
      aimg_[current] = anchor;
      const bool ok = search_next_cycle();
      aimg_[current] = 0;
      undo_beta_edge(anchor, z, undo);
      return ok;
    }
    const int closer = tail_of_[z];
    for (int pass = 0; pass < 2; ++pass) {
      for (int y = 1; y <= n_; ++y) {
        if (pass == 0 && y != closer) continue;
        if (pass == 1 && y == closer) continue;
        if (placed_[y]) continue;
        Undo undo;
        if (!add_beta_edge(y, z, undo)) continue;
        aimg_[current] = y;
        placed_[y] = true;
        const bool ok = extend_cycle(anchor, y, remaining - 1);
        placed_[y] = false;
        aimg_[current] = 0;
        undo_beta_edge(y, z, undo);
        if (ok) return true;
        if (pass == 0) break;
      }
    }
    return false;
  }

  // Called with a complete assignment; the recursion unwinds all bookkeeping
  // even on success, so the witness is captured here.
  bool finish() {
    for (int size = 1; size <= n_; ++size)
      if (mu_count_[size] != 0) return false;
    std::vector<int> a_img(aimg_.begin() + 1, aimg_.end());
    Permutation alpha = Permutation::from_images(a_img);
    Permutation beta = compose(alpha.inverse(), target_);
    if (need_transitive_) {
      const Permutation perms[2] = {alpha, beta};
      if (!is_transitive(perms)) return false;
    }
    solution_ = std::make_pair(std::move(alpha), std::move(beta));
    return true;
  }

  int n_;
  Permutation target_;
  bool need_transitive_;
  std::vector<int> aimg_;
  std::vector<bool> placed_;
  std::vector<int> head_of_;
  std::vector<int> tail_of_;
  std::vector<int> len_of_;
  std::vector<int> lambda_count_;
  std::vector<int> mu_count_;
  std::optional<std::pair<Permutation, Permutation>> solution_;
};

// ---------------------------------------------------------------------------
// Strategy driver.
// ---------------------------------------------------------------------------

bool pair_is_transitive(const Permutation& alpha, const Permutation& beta) {
  const Permutation perms[2] = {alpha, beta};
  return is_transitive(perms);
}

std::optional<std::pair<Permutation, Permutation>> random_phase(
    const CycleType& lambda, const CycleType& mu, const Permutation& target,
    bool need_transitive, std::mt19937_64& rng, int draws) {
  for (int t = 0; t < draws; ++t) {
    if (t % 2 == 0) {
      Permutation alpha = random_class_element(lambda, rng);
      Permutation beta = compose(alpha.inverse(), target);
      if (cycle_type(beta) != mu) continue;
      if (need_transitive && !pair_is_transitive(alpha, beta)) continue;
      return std::make_pair(std::move(alpha), std::move(beta));
    }
    Permutation beta = random_class_element(mu, rng);
    Permutation alpha = compose(target, beta.inverse());
    if (cycle_type(alpha) != lambda) continue;
    if (need_transitive && !pair_is_transitive(alpha, beta)) continue;
    return std::make_pair(std::move(alpha), std::move(beta));
  }
  return std::nullopt;
}

// The deterministic constructive route for either variant; nullopt only when
// the input is inadmissible (callers validate, so in practice never).
std::optional<std::pair<Permutation, Permutation>> construct_route(const CycleType& lambda,
                                                                   const CycleType& mu, int n,
                                                                   bool near);

std::pair<std::pair<Permutation, Permutation>, WitnessMethod> realize_full_pair(
    const CycleType& lambda, const CycleType& mu, int n, std::uint64_t seed, int retry_cap) {
  if (auto hit = construct_route(lambda, mu, n, false))
    return {std::move(*hit), WitnessMethod::Exhaustive};
  std::mt19937_64 rng(splitmix64(seed));
  const int draws = retry_cap > 0 ? retry_cap : default_retry_cap(n);
  if (auto hit = random_phase(lambda, mu, canonical_full_cycle(n), false, rng, draws))
    return {std::move(*hit), WitnessMethod::Randomized};
  Backtracker bt(lambda.parts(), mu.parts(), canonical_full_cycle(n), false);
  if (auto hit = bt.run()) return {std::move(*hit), WitnessMethod::Exhaustive};
  throw SearchExhausted("full-cycle realization not found although the index condition holds");
}

// Splices point n into a full-cycle realization on n-1 points, growing one
// alpha cycle and one beta cycle through a shared point v: alpha gains n
// after u = alpha^-1(v), beta gains n after v, and the product picks up n as
// a fixed point while staying (1,...,n-1) elsewhere.
std::pair<Permutation, Permutation> splice_point(const Permutation& alpha_hat,
                                                 const Permutation& beta_hat, int v) {
  const int n = alpha_hat.degree() + 1;
  const int u = alpha_hat.inverse().apply(v);
  std::vector<int> a_img(n), b_img(n);
  for (int i = 1; i < n; ++i) {
    a_img[i - 1] = alpha_hat.apply(i);
    b_img[i - 1] = beta_hat.apply(i);
  }
  a_img[u - 1] = n;
  a_img[n - 1] = alpha_hat.apply(u);
  b_img[v - 1] = n;
  b_img[n - 1] = beta_hat.apply(v);
  return {Permutation::from_images(a_img), Permutation::from_images(b_img)};
}

// Parts grown by the near-cycle splice.  Prefers shrinking a lambda part
// >= 3; otherwise mirrors through mu.  Both sides all-<=2 only happens for
// the excluded involution pair, which the caller has already rejected.
struct SpliceChoice {
  int lambda_part;
  int mu_part;
};

SpliceChoice pick_splice_parts(const CycleType& lambda, const CycleType& mu) {
  if (lambda.parts().front() >= 3) {
    for (int part : mu.parts())
      if (part >= 2) return {lambda.parts().front(), part};
  }
  if (mu.parts().front() >= 3) {
    for (int part : lambda.parts())
      if (part >= 2) return {part, mu.parts().front()};
  }
  throw Error("internal: no splice parts available");
}

std::vector<int> reduce_part(const std::vector<int>& parts, int part) {
  std::vector<int> out = parts;
  auto it = std::find(out.begin(), out.end(), part);
  assert(it != out.end());
  *it -= 1;
  return out;
}

std::optional<std::pair<Permutation, Permutation>> construct_route(const CycleType& lambda,
                                                                   const CycleType& mu, int n,
                                                                   bool near) {
  try {
    if (!near) {
      Realized r = construct_full_cycle(lambda.parts(), mu.parts(), n, -1, -1);
      return std::make_pair(std::move(r.alpha), std::move(r.beta));
    }
    const SpliceChoice choice = pick_splice_parts(lambda, mu);
    const std::vector<int> lambda_hat = reduce_part(lambda.parts(), choice.lambda_part);
    const std::vector<int> mu_hat = reduce_part(mu.parts(), choice.mu_part);
    int forced_lambda = -1, forced_mu = -1;
    for (int i = 0; i < static_cast<int>(lambda_hat.size()); ++i)
      if (lambda_hat[i] == choice.lambda_part - 1) {
        forced_lambda = i;
        break;
      }
    for (int j = 0; j < static_cast<int>(mu_hat.size()); ++j)
      if (mu_hat[j] == choice.mu_part - 1) {
        forced_mu = j;
        break;
      }
    Realized r = construct_full_cycle(lambda_hat, mu_hat, n - 1, forced_lambda, forced_mu);
    return splice_point(r.alpha, r.beta, r.shared_point);
  } catch (const Error&) {
    // Not expected for admissible input; the seeded search takes over.
    return std::nullopt;
  }
}

std::pair<std::pair<Permutation, Permutation>, WitnessMethod> realize_near_pair(
    const CycleType& lambda, const CycleType& mu, int n, std::uint64_t seed, int retry_cap) {
  if (auto hit = construct_route(lambda, mu, n, true))
    return {std::move(*hit), WitnessMethod::Exhaustive};
  std::mt19937_64 rng(splitmix64(seed ^ 0x6e657261ULL));
  const int draws = retry_cap > 0 ? retry_cap : default_retry_cap(n);
  if (auto hit = random_phase(lambda, mu, canonical_near_cycle(n), true, rng, draws))
    return {std::move(*hit), WitnessMethod::Randomized};
  Backtracker bt(lambda.parts(), mu.parts(), canonical_near_cycle(n), true);
  if (auto hit = bt.run()) return {std::move(*hit), WitnessMethod::Exhaustive};
  throw SearchExhausted("near-cycle realization not found although the index condition holds");
}

void check_common(const RealizationRequest& req) {
  if (req.c1.degree != req.c2.degree)
    throw DegreeMismatch("realization classes live in different symmetric groups");
}

RealizationWitness finalize(const RealizationRequest& req, Permutation alpha, Permutation beta,
                            WitnessMethod method, bool near) {
  const int n = req.c1.degree;
  RealizationWitness w{std::move(alpha), std::move(beta),
                       near ? canonical_near_cycle(n) : canonical_full_cycle(n), method,
                       near ? n : 0};
  if (cycle_type(w.alpha) != req.c1.cycle_type || cycle_type(w.beta) != req.c2.cycle_type)
    throw Error("internal: witness class membership check failed");
  if (compose(w.alpha, w.beta) != w.product)
    throw Error("internal: witness product check failed");
  if (near && !pair_is_transitive(w.alpha, w.beta))
    throw Error("internal: witness transitivity check failed");
  return w;
}

}  // namespace

RealizationWitness realize_full_cycle(const RealizationRequest& req) {
  check_common(req);
  const int n = req.c1.degree;
  const int sum = req.c1.cycle_type.index() + req.c2.cycle_type.index();
  if (sum < n - 1 || (sum - (n - 1)) % 2 != 0)
    throw ParityViolation("ind sum " + std::to_string(sum) + " is not n-1+2k for n=" +
                          std::to_string(n));
  auto [pair, method] =
      realize_full_pair(req.c1.cycle_type, req.c2.cycle_type, n, req.seed, req.retry_cap);
  return finalize(req, std::move(pair.first), std::move(pair.second), method, false);
}

RealizationWitness realize_near_cycle(const RealizationRequest& req) {
  check_common(req);
  const int n = req.c1.degree;
  if (n < 3) throw OutOfRange("near-cycle realization needs degree >= 3");
  const int sum = req.c1.cycle_type.index() + req.c2.cycle_type.index();
  if (sum < n || (sum - n) % 2 != 0)
    throw ParityViolation("ind sum " + std::to_string(sum) + " is not n+2k for n=" +
                          std::to_string(n));
  if (req.c1.cycle_type.is_fixed_point_free_involution() &&
      req.c2.cycle_type.is_fixed_point_free_involution())
    throw FixedPointFreeInvolutions(
        "both classes are fixed point free involutions; no transitive near-cycle product exists");
  auto [pair, method] =
      realize_near_pair(req.c1.cycle_type, req.c2.cycle_type, n, req.seed, req.retry_cap);
  return finalize(req, std::move(pair.first), std::move(pair.second), method, true);
}

RealizationWitness relabel_fixed_point(const RealizationWitness& w, int target) {
  const int n = w.product.degree();
  if (target < 1 || target > n) throw OutOfRange("relabel target outside 1..n");
  const auto fixed = w.product.fixed_points();
  if (fixed.size() != 1) throw OutOfRange("witness product does not have a unique fixed point");
  const int current = fixed.front();
  if (current == target) return w;
  const Permutation g = Permutation::transposition(n, current, target);
  return RealizationWitness{conjugate(w.alpha, g), conjugate(w.beta, g),
                            conjugate(w.product, g), w.method, target};
}

namespace detail {

std::optional<std::pair<Permutation, Permutation>> random_realize(const CycleType& lambda,
                                                                  const CycleType& mu, int n,
                                                                  bool near, std::uint64_t seed,
                                                                  int draws) {
  const Permutation target = near ? canonical_near_cycle(n) : canonical_full_cycle(n);
  std::mt19937_64 rng(splitmix64(seed));
  return random_phase(lambda, mu, target, near, rng, draws);
}

std::optional<std::pair<Permutation, Permutation>> backtrack_realize(const CycleType& lambda,
                                                                     const CycleType& mu, int n,
                                                                     bool near) {
  const Permutation target = near ? canonical_near_cycle(n) : canonical_full_cycle(n);
  Backtracker bt(lambda.parts(), mu.parts(), target, near);
  return bt.run();
}

std::optional<std::pair<Permutation, Permutation>> construct_realize(const CycleType& lambda,
                                                                     const CycleType& mu, int n,
                                                                     bool near) {
  return construct_route(lambda, mu, n, near);
}

}  // namespace detail

}  // namespace permprod
