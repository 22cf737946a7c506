#include "izeta/walk_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace izeta {

std::string to_string(const Walk& walk) {
  std::string text;
  for (std::size_t i = 0; i < walk.letters.size(); ++i) {
    if (i) text += ' ';
    const auto& letter = walk.letters[i];
    const std::string name = "v" + std::to_string(letter.vertex + 1);
    text += letter.generalized ? "[" + name + "]" : name;
  }
  return text;
}

Walk parse_walk(std::string_view text) {
  Walk walk;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Letter letter;
    if (token.size() >= 2 && token.front() == '[' && token.back() == ']') {
      letter.generalized = true;
      token = token.substr(1, token.size() - 2);
    }
    if (!token.empty() && (token.front() == 'v' || token.front() == 'u')) token.erase(0, 1);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("cannot parse walk letter in: " + std::string(text));
    letter.vertex = std::stoi(token) - 1;
    if (letter.vertex < 0) throw std::invalid_argument("walk vertices are numbered from 1");
    walk.letters.push_back(letter);
  }
  return walk;
}

Diagram diagram_of_walk(const Walk& walk) {
  const auto& letters = walk.letters;
  if (letters.empty()) throw std::invalid_argument("empty walk");
  if (letters.front().vertex != 0 || letters.front().generalized)
    throw std::invalid_argument("walk must start with the ordinary root letter");
  Diagram diagram;
  diagram.vertex_count = 1;
  std::map<std::pair<int, int>, std::size_t> index;
  int current = 0;
  for (std::size_t t = 1; t < letters.size(); ++t) {
    const auto& letter = letters[t];
    if (letter.vertex < 0 || letter.vertex > diagram.vertex_count)
      throw std::invalid_argument("new letters must appear in alphabet order");
    if (letter.vertex == current) throw std::invalid_argument("a step cannot stay on the current vertex");
    if (letter.vertex == diagram.vertex_count) ++diagram.vertex_count;
    diagram.edges.push_back({current, letter.vertex, letter.generalized});
    const auto key = std::minmax(current, letter.vertex);
    auto [it, inserted] = index.try_emplace({key.first, key.second}, diagram.skeleton.size());
    if (inserted) diagram.skeleton.push_back({key.first, key.second, 0, 0});
    auto& edge = diagram.skeleton[it->second];
    (letter.generalized ? edge.red : edge.blue) += 1;
    if (!letter.generalized) current = letter.vertex;
  }
  if (current != 0) throw std::invalid_argument("walk does not return to the root");
  return diagram;
}

bool is_tree_type(const Diagram& diagram) {
  std::vector<int> root(static_cast<std::size_t>(diagram.vertex_count));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : diagram.skeleton) {
    if (e.blue % 2 != 0) return false;
    const int a = find(e.a), b = find(e.b);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

int root_out_steps(const Walk& walk) {
  int current = 0, count = 0;
  for (std::size_t t = 1; t < walk.letters.size(); ++t) {
    if (current == 0) ++count;
    if (!walk.letters[t].generalized) current = walk.letters[t].vertex;
  }
  return count;
}

bool is_tree_type_walk(const Walk& walk) {
  try {
    return is_tree_type(diagram_of_walk(walk));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

// Depth-first generation restricted to steps that keep the skeleton a tree:
// a step either creates the next vertex or follows an existing skeleton edge.
// Blue steps then form a closed walk on a tree, so blue multiplicities are even.
class Enumerator {
 public:
  explicit Enumerator(int k) : k_(k) {
    walk_.letters.reserve(static_cast<std::size_t>(k) + 1);
    walk_.letters.push_back({0, false});
    parent_.assign(static_cast<std::size_t>(k) + 1, -1);
    depth_.assign(static_cast<std::size_t>(k) + 1, 0);
  }

  // Steps already taken.
  int steps() const { return walk_.length(); }

  template <typename Visit>
  void run(Visit&& visit) {
    const int remaining = k_ - steps();
    if (depth_[current_] > remaining) return;
    if (remaining == 0) {
      visit(walk_);
      return;
    }
    for_each_child([&](Enumerator& next) { next.run(visit); });
  }

  template <typename Body>
  void for_each_child(Body&& body) {
    const int remaining = k_ - steps();
    for (int target = 0; target <= vertex_count_ && target <= k_; ++target) {
      if (target == current_) continue;
      const bool fresh = target == vertex_count_;
      if (!fresh && parent_[target] != current_ && parent_[current_] != target) continue;
      for (const bool generalized : {false, true}) {
        // After a blue move the walker sits on target and must still get home.
        const int home = generalized ? depth_[current_] : (fresh ? depth_[current_] + 1 : depth_[target]);
        if (home > remaining - 1) continue;
        push(target, generalized, fresh);
        body(*this);
        pop();
      }
    }
  }

  const Walk& walk() const { return walk_; }

 private:
  struct Undo {
    int current;
    bool fresh;
  };

  void push(int target, bool generalized, bool fresh) {
    undo_.push_back({current_, fresh});
    if (fresh) {
      parent_[target] = current_;
      depth_[target] = depth_[current_] + 1;
      ++vertex_count_;
    }
    walk_.letters.push_back({target, generalized});
    if (!generalized) current_ = target;
  }

  void pop() {
    const Undo u = undo_.back();
    undo_.pop_back();
    walk_.letters.pop_back();
    current_ = u.current;
    if (u.fresh) {
      --vertex_count_;
      parent_[vertex_count_] = -1;
      depth_[vertex_count_] = 0;
    }
  }

  int k_;
  Walk walk_;
  int current_ = 0;
  int vertex_count_ = 1;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<Undo> undo_;
};

void check_budget(int k, WalkBudget budget) {
  if (k < 0) throw std::invalid_argument("walk length must be >= 0");
  if (k > budget.max_length()) {
    throw std::invalid_argument("walk enumeration limited to k <= " + std::to_string(budget.max_length()) +
                                (budget.extended ? "" : " (extended budget allows 10)"));
  }
}

}  // namespace

void for_each_tree_walk(int k, const std::function<void(const Walk&)>& visit, WalkBudget budget) {
  check_budget(k, budget);
  if (k == 0) return;  // the empty walk is not a closed walk of positive length
  Enumerator(k).run([&](const Walk& walk) { visit(walk); });
}

std::vector<Walk> enumerate_walks(int k, WalkBudget budget) {
  std::vector<Walk> walks;
  for_each_tree_walk(k, [&](const Walk& walk) { walks.push_back(walk); }, budget);
  return walks;
}

WalkCensus::WalkCensus(int k_max, WalkBudget budget, unsigned threads) : k_max_(k_max) {
  check_budget(k_max, budget);
  signatures_.resize(static_cast<std::size_t>(k_max) + 1);
  threads = std::max(1u, threads);
  for (int k = 1; k <= k_max; ++k) {
    // Work items are the surviving two-step prefixes, in lexicographic order.
    std::vector<Enumerator> items;
    Enumerator root(k);
    if (k < 2) {
      items.push_back(root);
    } else {
      root.for_each_child([&](Enumerator& a) { a.for_each_child([&](Enumerator& b) { items.push_back(b); }); });
    }
    std::vector<std::map<Signature, std::uint64_t>> partial(items.size());
    std::vector<char> consistent(items.size(), 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        items[i].run([&](const Walk& walk) {
          const Diagram diagram = diagram_of_walk(walk);
          int passages = 0, steps = 0;
          for (const auto& e : diagram.skeleton) {
            passages += e.ell() + e.red;
            steps += e.blue + e.red;
            if (e.blue % 2) consistent[i] = 0;
          }
          if (steps != k || !is_tree_type(diagram)) consistent[i] = 0;
          ++partial[i][{root_out_steps(walk), passages, static_cast<int>(diagram.skeleton.size())}];
        });
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < items.size(); ++t) pool.emplace_back(worker);
    worker();
    for (auto& thread : pool) thread.join();
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (const auto& [key, count] : partial[i]) signatures_[k][key] += count;
      if (!consistent[i]) accounting_ok_ = false;
    }
  }
}

void WalkCensus::check_range(int k) const {
  if (k < 0 || k > k_max_) throw std::out_of_range("walk census holds k <= " + std::to_string(k_max_));
}

std::uint64_t WalkCensus::walk_count(int k, int r) const {
  check_range(k);
  if (k == 0) return r == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (const auto& [key, count] : signatures_[k])
    if (std::get<0>(key) == r) total += count;
  return total;
}

double oracle_theta(int k, int r, double v, double phi1, WalkBudget budget) {
  check_budget(k, budget);
  if (r > k || r < 0) throw std::invalid_argument("oracle_theta needs 0 <= r <= k");
  if (k == 0) return r == 0 ? 1.0 : 0.0;
  double total = 0.0;
  for_each_tree_walk(k, [&](const Walk& walk) {
    if (root_out_steps(walk) == r) total += weight(diagram_of_walk(walk), v, phi1);
  }, budget);
  return total;
}

}  // namespace izeta
