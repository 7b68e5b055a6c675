#include "scg/enumerate.hpp"

#include <cmath>

#include "scg/errors.hpp"

namespace scg {
namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

std::vector<int> merge_groups(const Game& g, bool merge) {
  std::vector<int> prev(g.followers.size(), -1);
  if (!merge) return prev;
  for (std::size_t p = 1; p < g.followers.size(); ++p) {
    for (std::size_t q = p; q-- > 0;) {
      if (g.followers[q].actions == g.followers[p].actions) {
        prev[p] = static_cast<int>(q);
        break;
      }
    }
  }
  return prev;
}

}  // namespace

double count_outcomes(const Game& g, const EnumerationOptions& options) {
  double total = 1;
  if (g.kind == GameKind::tclass_sscg) {
    for (const auto& c : g.classes) {
      const int k = static_cast<int>(c.actions.size());
      total *= binomial(c.count + k - 1, k - 1);
    }
    return total;
  }
  if (!options.merge_identical_followers) {
    for (const auto& f : g.followers) total *= static_cast<double>(f.actions.size());
    return total;
  }
  std::vector<bool> seen(g.followers.size(), false);
  for (std::size_t p = 0; p < g.followers.size(); ++p) {
    if (seen[p]) continue;
    int members = 0;
    for (std::size_t q = p; q < g.followers.size(); ++q) {
      if (!seen[q] && g.followers[q].actions == g.followers[p].actions) {
        seen[q] = true;
        ++members;
      }
    }
    const int k = static_cast<int>(g.followers[p].actions.size());
    total *= binomial(members + k - 1, members);
  }
  return total;
}

OutcomeEnumerator::OutcomeEnumerator(const Game& game, EnumerationOptions options) : game_(&game) {
  size_ = count_outcomes(game, options);
  if (size_ > static_cast<double>(options.cap)) throw CapExceeded(size_, options.cap);
  if (game.kind == GameKind::tclass_sscg) {
    for (const auto& c : game.classes) {
      std::vector<int> part(c.actions.size(), 0);
      if (part.empty()) {
        if (c.count > 0) done_ = true;
      } else {
        part[0] = c.count;
      }
      parts_.push_back(std::move(part));
    }
  } else {
    group_prev_ = merge_groups(game, options.merge_identical_followers);
    choice_.assign(game.followers.size(), 0);
    for (const auto& f : game.followers) {
      if (f.actions.empty()) done_ = true;
    }
  }
}

int OutcomeEnumerator::lower_bound_of(std::size_t position) const {
  const int prev = group_prev_[position];
  return prev < 0 ? 0 : choice_[static_cast<std::size_t>(prev)];
}

bool OutcomeEnumerator::advance_profile() {
  for (std::size_t pos = choice_.size(); pos-- > 0;) {
    if (choice_[pos] + 1 < static_cast<int>(game_->followers[pos].actions.size())) {
      ++choice_[pos];
      for (std::size_t q = pos + 1; q < choice_.size(); ++q) choice_[q] = lower_bound_of(q);
      return true;
    }
  }
  return false;
}

// Next composition per class, last class varying fastest. Within a class the
// order is (n,0,..), (n-1,1,..), ..., (0,..,n).
bool OutcomeEnumerator::advance_configurations() {
  for (std::size_t t = parts_.size(); t-- > 0;) {
    auto& part = parts_[t];
    const std::size_t k = part.size();
    if (k < 2) continue;
    // Rightmost non-zero entry before the last slot.
    std::size_t j = k - 1;
    while (j-- > 0) {
      if (part[j] > 0) break;
    }
    if (j == static_cast<std::size_t>(-1)) continue;
    const int tail = part[k - 1];
    part[k - 1] = 0;
    --part[j];
    part[j + 1] = tail + 1;
    for (std::size_t u = t + 1; u < parts_.size(); ++u) {
      auto& reset = parts_[u];
      if (reset.empty()) continue;
      std::fill(reset.begin(), reset.end(), 0);
      reset[0] = game_->classes[u].count;
    }
    return true;
  }
  return false;
}

bool OutcomeEnumerator::next(FollowersOutcome& out) {
  if (done_) return false;
  if (started_) {
    const bool more = game_->kind == GameKind::tclass_sscg ? advance_configurations() : advance_profile();
    if (!more) {
      done_ = true;
      return false;
    }
  }
  started_ = true;
  ++index_;
  if (game_->kind == GameKind::tclass_sscg) {
    Configurations cfg;
    cfg.counts.assign(parts_.size(), std::vector<int>(static_cast<std::size_t>(game_->resources), 0));
    for (std::size_t t = 0; t < parts_.size(); ++t) {
      for (std::size_t k = 0; k < parts_[t].size(); ++k) {
        cfg.counts[t][static_cast<std::size_t>(game_->classes[t].actions[k].front())] += parts_[t][k];
      }
    }
    out = std::move(cfg);
  } else {
    out = Profile{choice_};
  }
  return true;
}

std::vector<FollowersOutcome> enumerate_outcomes(const Game& game, const EnumerationOptions& options) {
  OutcomeEnumerator it(game, options);
  std::vector<FollowersOutcome> all;
  FollowersOutcome o;
  while (it.next(o)) all.push_back(o);
  return all;
}

}  // namespace scg
