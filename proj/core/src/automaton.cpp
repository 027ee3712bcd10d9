#include <algorithm>
#include <set>

#include "stablenorm/cfg.hpp"

namespace stablenorm {

Nfa::Nfa(std::vector<std::string> alphabet, std::size_t num_states,
         std::vector<Transition> transitions, std::vector<std::uint32_t> initial,
         std::vector<std::uint32_t> accepting)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      transitions_(std::move(transitions)),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)) {
  for (const Transition& t : transitions_) {
    if (t.from >= num_states_ || t.to >= num_states_) {
      throw std::invalid_argument("Nfa: transition references an unknown state");
    }
    if (t.label != kEpsilon && t.label >= alphabet_.size()) {
      throw std::invalid_argument("Nfa: transition references an unknown letter");
    }
  }
  for (auto s : initial_) {
    if (s >= num_states_) {
      throw std::invalid_argument("Nfa: unknown initial state");
    }
  }
  for (auto s : accepting_) {
    if (s >= num_states_) {
      throw std::invalid_argument("Nfa: unknown accepting state");
    }
  }
}

namespace {

std::vector<std::vector<std::uint32_t>> epsilon_closures(const Nfa& a) {
  std::vector<std::vector<std::uint32_t>> eps(a.num_states());
  for (const auto& t : a.transitions()) {
    if (t.label == Nfa::kEpsilon) {
      eps[t.from].push_back(t.to);
    }
  }
  std::vector<std::vector<std::uint32_t>> closure(a.num_states());
  for (std::uint32_t s = 0; s < a.num_states(); ++s) {
    std::vector<char> seen(a.num_states(), 0);
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto q = stack.back();
      stack.pop_back();
      closure[s].push_back(q);
      for (auto r : eps[q]) {
        if (!seen[r]) {
          seen[r] = 1;
          stack.push_back(r);
        }
      }
    }
    std::sort(closure[s].begin(), closure[s].end());
  }
  return closure;
}

}  // namespace

bool Nfa::accepts(std::span<const Terminal> word) const {
  const auto closure = epsilon_closures(*this);
  std::vector<char> current(num_states_, 0);
  for (auto s : initial_) {
    for (auto q : closure[s]) {
      current[q] = 1;
    }
  }
  for (Terminal letter : word) {
    std::vector<char> next(num_states_, 0);
    for (const Transition& t : transitions_) {
      if (t.label == letter && current[t.from]) {
        for (auto q : closure[t.to]) {
          next[q] = 1;
        }
      }
    }
    current = std::move(next);
  }
  return std::any_of(accepting_.begin(), accepting_.end(),
                     [&](std::uint32_t s) { return current[s] != 0; });
}

Nfa Nfa::without_epsilon() const {
  const auto closure = epsilon_closures(*this);
  std::set<Transition> moves;
  for (std::uint32_t p = 0; p < num_states_; ++p) {
    for (auto mid : closure[p]) {
      for (const Transition& t : transitions_) {
        if (t.from == mid && t.label != kEpsilon) {
          moves.insert(Transition{p, t.label, t.to});
        }
      }
    }
  }
  std::vector<char> final_state(num_states_, 0);
  for (auto f : accepting_) {
    final_state[f] = 1;
  }
  std::vector<char> accepting_now(num_states_, 0);
  for (std::uint32_t p = 0; p < num_states_; ++p) {
    for (auto q : closure[p]) {
      if (final_state[q]) {
        accepting_now[p] = 1;
      }
    }
  }

  // trim: reachable from an initial state and co-reachable to an accepting one
  std::vector<char> forward(num_states_, 0);
  std::vector<std::uint32_t> stack(initial_.begin(), initial_.end());
  for (auto s : initial_) {
    forward[s] = 1;
  }
  while (!stack.empty()) {
    const auto p = stack.back();
    stack.pop_back();
    for (const auto& t : moves) {
      if (t.from == p && !forward[t.to]) {
        forward[t.to] = 1;
        stack.push_back(t.to);
      }
    }
  }
  std::vector<char> backward(num_states_, 0);
  for (std::uint32_t p = 0; p < num_states_; ++p) {
    if (accepting_now[p]) {
      backward[p] = 1;
      stack.push_back(p);
    }
  }
  while (!stack.empty()) {
    const auto q = stack.back();
    stack.pop_back();
    for (const auto& t : moves) {
      if (t.to == q && !backward[t.from]) {
        backward[t.from] = 1;
        stack.push_back(t.from);
      }
    }
  }
  std::vector<std::uint32_t> remap(num_states_, UINT32_MAX);
  std::uint32_t count = 0;
  for (std::uint32_t p = 0; p < num_states_; ++p) {
    if (forward[p] && backward[p]) {
      remap[p] = count++;
    }
  }
  std::vector<Transition> kept;
  for (const auto& t : moves) {
    if (remap[t.from] != UINT32_MAX && remap[t.to] != UINT32_MAX) {
      kept.push_back(Transition{remap[t.from], t.label, remap[t.to]});
    }
  }
  std::vector<std::uint32_t> initial;
  for (auto s : initial_) {
    if (remap[s] != UINT32_MAX) {
      initial.push_back(remap[s]);
    }
  }
  std::vector<std::uint32_t> accepting;
  for (std::uint32_t p = 0; p < num_states_; ++p) {
    if (remap[p] != UINT32_MAX && accepting_now[p]) {
      accepting.push_back(remap[p]);
    }
  }
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
  return Nfa(alphabet_, count, std::move(kept), std::move(initial), std::move(accepting));
}

Nfa subword_nfa(std::vector<std::string> alphabet, std::span<const Terminal> word) {
  std::vector<Nfa::Transition> transitions;
  for (std::uint32_t i = 0; i < word.size(); ++i) {
    transitions.push_back({i, word[i], i + 1});
    transitions.push_back({i, Nfa::kEpsilon, i + 1});
  }
  const auto last = static_cast<std::uint32_t>(word.size());
  return Nfa(std::move(alphabet), word.size() + 1, std::move(transitions), {0}, {last});
}

Nfa enumeration_nfa(const std::vector<std::string>& alphabet,
                    const std::vector<TerminalString>& words,
                    const std::vector<std::string>& markers) {
  if (markers.size() != words.size()) {
    throw std::invalid_argument("enumeration_nfa: one marker per word required");
  }
  std::set<std::string> letters(alphabet.begin(), alphabet.end());
  for (const auto& marker : markers) {
    if (!letters.insert(marker).second) {
      throw std::invalid_argument("enumeration_nfa: marker '" + marker +
                                  "' collides with the alphabet or another marker");
    }
  }
  std::vector<std::string> extended = alphabet;
  extended.insert(extended.end(), markers.begin(), markers.end());

  // Block i has a hub (which is also the start of the subword chain of w_i);
  // the chain returns to the hub on y_i, and the hub moves on to the next
  // block by an epsilon move.
  std::vector<Nfa::Transition> transitions;
  std::vector<std::uint32_t> hubs;
  std::uint32_t next_state = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::uint32_t hub = next_state++;
    hubs.push_back(hub);
    std::uint32_t previous = hub;
    for (Terminal letter : words[i]) {
      if (letter >= alphabet.size()) {
        throw std::invalid_argument("enumeration_nfa: word letter outside the alphabet");
      }
      const std::uint32_t state = next_state++;
      transitions.push_back({previous, letter, state});
      transitions.push_back({previous, Nfa::kEpsilon, state});
      previous = state;
    }
    const auto marker = static_cast<Terminal>(alphabet.size() + i);
    transitions.push_back({previous, marker, hub});
  }
  if (hubs.empty()) {
    // the empty product denotes {eps}
    return Nfa(std::move(extended), 1, {}, {0}, {0});
  }
  for (std::size_t i = 0; i + 1 < hubs.size(); ++i) {
    transitions.push_back({hubs[i], Nfa::kEpsilon, hubs[i + 1]});
  }
  return Nfa(std::move(extended), next_state, std::move(transitions), {hubs.front()},
             {hubs.back()});
}

}  // namespace stablenorm
