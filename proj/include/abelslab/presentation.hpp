#pragma once

// Finitely presented groups: words, presentations, Todd-Coxeter coset
// enumeration and Tietze simplification.
//
// A word is a vector of signed generator indices: k+1 stands for generator k
// and -(k+1) for its inverse.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelslab/error.hpp"
#include "abelslab/group.hpp"
#include "abelslab/matrix.hpp"

namespace abelslab {

using Letter = int;
using Word = std::vector<Letter>;

inline Letter gen_letter(std::size_t k) { return static_cast<Letter>(k + 1); }
inline Letter inv_letter(std::size_t k) { return -static_cast<Letter>(k + 1); }
inline std::size_t letter_gen(Letter l) { return static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1); }

inline Word free_reduce(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l == 0) throw Error(ErrorCode::invalid_argument, "letter 0 in word");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Word cyclic_reduce(Word const& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

inline Word inverse_word(Word const& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (auto const& p : parts) r.insert(r.end(), p.begin(), p.end());
  return free_reduce(r);
}

inline Word power_word(Word const& w, std::int64_t k) {
  Word base = k < 0 ? inverse_word(w) : w;
  Word r;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r.insert(r.end(), base.begin(), base.end());
  return free_reduce(r);
}

// [a, b] = a b a^-1 b^-1, matching the matrix commutator.
inline Word commutator_word(Word const& a, Word const& b) { return concat({a, b, inverse_word(a), inverse_word(b)}); }

// Least rotation of w and of its inverse; equal for relators that define the
// same normal closure element up to conjugation and inversion.
inline Word cyclic_canonical(Word const& w) {
  Word c = cyclic_reduce(w);
  if (c.empty()) return c;
  Word best = c;
  for (Word cand : {c, inverse_word(c)}) {
    for (std::size_t r = 0; r < cand.size(); ++r) {
      std::rotate(cand.begin(), cand.begin() + 1, cand.end());
      if (cand < best) best = cand;
    }
  }
  return best;
}

class Presentation {
 public:
  std::size_t generator_count() const { return names_.size(); }
  std::vector<std::string> const& names() const { return names_; }
  std::vector<Word> const& relators() const { return relators_; }
  std::string const& name(std::size_t k) const { return names_.at(k); }

  std::size_t add_generator(std::string const& name) {
    if (name.empty()) throw Error(ErrorCode::invalid_argument, "empty generator name");
    for (char ch : name) {
      if (std::isupper(static_cast<unsigned char>(ch)) || std::isspace(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::invalid_argument, "generator names are lower case without spaces: " + name);
      }
    }
    if (lookup_.count(name)) throw Error(ErrorCode::invalid_argument, "duplicate generator " + name);
    lookup_.emplace(name, names_.size());
    names_.push_back(name);
    return names_.size() - 1;
  }

  std::optional<std::size_t> find(std::string const& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::string const& name) const {
    auto k = find(name);
    if (!k) throw Error(ErrorCode::invalid_argument, "unknown generator " + name);
    return *k;
  }
  Letter letter(std::string const& name) const { return gen_letter(index_of(name)); }

  // Freely reduces and drops trivial relators. Returns false if dropped.
  bool add_relator(Word const& w) {
    Word r = free_reduce(w);
    for (Letter l : r) {
      if (letter_gen(l) >= names_.size()) throw Error(ErrorCode::index_out_of_range, "relator uses unknown generator");
    }
    if (r.empty()) return false;
    relators_.push_back(std::move(r));
    return true;
  }

  // Drops relators that agree up to rotation and inversion, keeping the first.
  void dedupe_relators() {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (auto& r : relators_) {
      if (seen.insert(cyclic_canonical(r)).second) kept.push_back(std::move(r));
    }
    relators_ = std::move(kept);
  }

  std::size_t total_length() const {
    std::size_t s = 0;
    for (auto const& r : relators_) s += r.size();
    return s;
  }

  std::string word_to_string(Word const& w) const {
    std::string out;
    for (Letter l : w) {
      if (!out.empty()) out += ' ';
      std::string nm = names_.at(letter_gen(l));
      if (l < 0) {
        for (auto& ch : nm) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      }
      out += nm;
    }
    return out;
  }

  // First line: generator names. Then one relator per line; an upper-cased
  // name is the inverse generator.
  std::string to_text() const {
    std::string out;
    for (std::size_t k = 0; k < names_.size(); ++k) out += (k ? " " : "") + names_[k];
    out += '\n';
    for (auto const& r : relators_) out += word_to_string(r) + '\n';
    return out;
  }

  Word parse_word(std::string const& line) const {
    std::istringstream in(line);
    std::string tok;
    Word w;
    while (in >> tok) {
      if (tok == "1") continue;
      std::string lower = tok;
      for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      auto k = find(lower);
      if (!k) throw Error(ErrorCode::parse_error, "unknown generator token '" + tok + "'");
      w.push_back(lower == tok ? gen_letter(*k) : inv_letter(*k));
    }
    return w;
  }

  static Presentation parse(std::string const& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!header) {
        std::istringstream g(line);
        std::string nm;
        while (g >> nm) {
          try {
            p.add_generator(nm);
          } catch (Error const& e) {
            throw Error(ErrorCode::parse_error, e.what());
          }
        }
        header = true;
        continue;
      }
      p.add_relator(p.parse_word(line));
    }
    if (!header) throw Error(ErrorCode::parse_error, "missing generator line");
    return p;
  }

  // Replaces all generators and relators; used by simplification.
  void replace(std::vector<std::string> names, std::vector<Word> rels) {
    names_.clear();
    lookup_.clear();
    relators_.clear();
    for (auto& n : names) add_generator(n);
    for (auto& r : rels) add_relator(r);
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<Word> relators_;
};

// ---------------------------------------------------------------------------
// Todd-Coxeter

enum class TCStatus { complete, overflow };

inline std::string to_string(TCStatus s) { return s == TCStatus::complete ? "complete" : "overflow"; }

struct CosetTable {
  TCStatus status = TCStatus::overflow;
  std::size_t generators = 0;
  std::size_t index = 0;           // coset count when complete
  std::size_t max_live = 0;        // peak number of live cosets
  std::size_t defined = 0;         // cosets ever defined
  std::vector<std::int32_t> table; // index rows of 2*generators columns; col 2k = gen k, 2k+1 = inverse

  bool complete() const { return status == TCStatus::complete; }
  std::int32_t at(std::size_t coset, Letter l) const {
    std::size_t col = l > 0 ? 2 * letter_gen(l) : 2 * letter_gen(l) + 1;
    return table[coset * 2 * generators + col];
  }
  std::int32_t act(std::int32_t coset, Word const& w) const {
    for (Letter l : w) coset = at(static_cast<std::size_t>(coset), l);
    return coset;
  }
  // Against a complete table: w lies in the subgroup iff it fixes coset 0.
  bool fixes_base(Word const& w) const {
    if (!complete()) throw Error(ErrorCode::invalid_argument, "coset table is not complete");
    return act(0, w) == 0;
  }
  bool operator==(CosetTable const& o) const {
    return status == o.status && generators == o.generators && index == o.index && table == o.table;
  }
};

namespace detail {

// HLT enumeration with a deduction stack and lookahead before giving up.
class ToddCoxeter {
 public:
  ToddCoxeter(Presentation const& p, std::vector<Word> const& subgroup, std::size_t budget)
      : g_(p.generator_count()), cols_(2 * g_), budget_(std::max<std::size_t>(budget, 1)), subgroup_(subgroup) {
    for (auto const& r : p.relators()) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) rels_.push_back(to_cols(c));
    }
    conj_.assign(cols_, {});
    for (auto const& r : rels_) {
      for (auto const& w : {r, invert_cols(r)}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
          conj_[static_cast<std::size_t>(rot[0])].push_back(std::move(rot));
        }
      }
    }
    for (auto& list : conj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  CosetTable run() {
    new_coset();
    for (auto const& w : subgroup_) {
      auto c = to_cols(free_reduce(w));
      while (true) {
        int r = scan_and_fill(0, c);
        if (r == kOverflow) return finish(false);
        if (r == kDone) break;
      }
      process_deductions();
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      bool restart = true;
      while (restart && alive(c)) {
        restart = false;
        for (auto const& r : rels_) {
          int res = scan_and_fill(static_cast<std::int32_t>(c), r);
          if (res == kOverflow) return finish(false);
          if (res == kRestart) {
            restart = true;
            break;
          }
          process_deductions();
          if (!alive(c)) break;
        }
      }
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (!alive(c)) break;
        if (cell(c, x) < 0) {
          int res = define(static_cast<std::int32_t>(c), x);
          if (res == kOverflow) return finish(false);
          process_deductions();
        }
      }
    }
    return finish(true);
  }

 private:
  static constexpr int kDone = 0, kOverflow = 1, kRestart = 2;

  std::vector<int> to_cols(Word const& w) const {
    std::vector<int> c;
    for (Letter l : w) {
      if (letter_gen(l) >= g_) throw Error(ErrorCode::index_out_of_range, "word uses unknown generator");
      c.push_back(static_cast<int>(l > 0 ? 2 * letter_gen(l) : 2 * letter_gen(l) + 1));
    }
    return c;
  }
  static std::vector<int> invert_cols(std::vector<int> const& w) {
    std::vector<int> r(w.rbegin(), w.rend());
    for (auto& x : r) x ^= 1;
    return r;
  }

  std::int32_t& cell(std::size_t c, std::size_t x) { return tab_[c * cols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t new_coset() {
    auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    tab_.resize(tab_.size() + cols_, -1);
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  int define(std::int32_t c, std::size_t x) {
    if (live_ >= budget_) {
      lookahead();
      if (!alive(static_cast<std::size_t>(c)) || cell(static_cast<std::size_t>(c), x) >= 0) return kRestart;
      if (live_ >= budget_) return kOverflow;
    }
    std::int32_t d = new_coset();
    cell(static_cast<std::size_t>(c), x) = d;
    cell(static_cast<std::size_t>(d), x ^ 1) = c;
    deductions_.emplace_back(c, x);
    return kDone;
  }

  // Scans w at c, filling gaps. kRestart means a lookahead ran.
  int scan_and_fill(std::int32_t c, std::vector<int> const& w) {
    for (;;) {
      std::int32_t f = c, b = c;
      std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
      while (i <= j && cell(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i])) >= 0) f = cell(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return kDone;
      }
      while (j >= i && cell(static_cast<std::size_t>(b), static_cast<std::size_t>(w[j] ^ 1)) >= 0) b = cell(static_cast<std::size_t>(b), static_cast<std::size_t>(w[j--] ^ 1));
      if (j < i) {
        coincidence(f, b);
        return kDone;
      }
      if (i == j) {
        cell(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i])) = b;
        cell(static_cast<std::size_t>(b), static_cast<std::size_t>(w[i] ^ 1)) = f;
        deductions_.emplace_back(f, static_cast<std::size_t>(w[i]));
        return kDone;
      }
      int res = define(f, static_cast<std::size_t>(w[i]));
      if (res != kDone) return res;
      if (!alive(static_cast<std::size_t>(c))) return kDone;
    }
  }

  // Scan without defining; records deductions and coincidences.
  void scan(std::int32_t c, std::vector<int> const& w) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && cell(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i])) >= 0) f = cell(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i++]));
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && cell(static_cast<std::size_t>(b), static_cast<std::size_t>(w[j] ^ 1)) >= 0) b = cell(static_cast<std::size_t>(b), static_cast<std::size_t>(w[j--] ^ 1));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      cell(static_cast<std::size_t>(f), static_cast<std::size_t>(w[i])) = b;
      cell(static_cast<std::size_t>(b), static_cast<std::size_t>(w[i] ^ 1)) = f;
      deductions_.emplace_back(f, static_cast<std::size_t>(w[i]));
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      if (deductions_.size() > kMaxDeductions) {
        // Too many to track; a full pass recovers everything they would find.
        deductions_.clear();
        full_scan();
        continue;
      }
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(static_cast<std::size_t>(c))) continue;
      for (auto const& w : conj_[x]) {
        if (!alive(static_cast<std::size_t>(c))) break;
        scan(c, w);
      }
      std::int32_t d = cell(static_cast<std::size_t>(c), x);
      if (d < 0 || !alive(static_cast<std::size_t>(d))) continue;
      for (auto const& w : conj_[x ^ 1]) {
        if (!alive(static_cast<std::size_t>(d))) break;
        scan(d, w);
      }
    }
  }

  void full_scan() {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (auto const& r : rels_) {
        if (!alive(c)) break;
        scan(static_cast<std::int32_t>(c), r);
      }
    }
  }

  void lookahead() {
    std::size_t before;
    do {
      before = live_;
      deductions_.clear();
      full_scan();
      process_deductions();
    } while (live_ < before);
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t n = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = n;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::int32_t e = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t f = cell(static_cast<std::size_t>(e), x);
        if (f < 0) continue;
        cell(static_cast<std::size_t>(f), x ^ 1) = -1;
        std::int32_t e1 = rep(e), f1 = rep(f);
        if (cell(static_cast<std::size_t>(e1), x) >= 0) {
          merge(f1, cell(static_cast<std::size_t>(e1), x), queue);
        } else if (cell(static_cast<std::size_t>(f1), x ^ 1) >= 0) {
          merge(e1, cell(static_cast<std::size_t>(f1), x ^ 1), queue);
        } else {
          cell(static_cast<std::size_t>(e1), x) = f1;
          cell(static_cast<std::size_t>(f1), x ^ 1) = e1;
          deductions_.emplace_back(e1, x);
        }
      }
    }
  }

  // Renumbers live cosets in breadth-first order from coset 0.
  CosetTable finish(bool complete) {
    CosetTable out;
    out.generators = g_;
    out.max_live = max_live_;
    out.defined = defined_;
    if (!complete) {
      out.status = TCStatus::overflow;
      out.index = live_;
      return out;
    }
    out.status = TCStatus::complete;
    std::vector<std::int32_t> num(parent_.size(), -1), order{0};
    num[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = cell(static_cast<std::size_t>(order[h]), x);
        if (d >= 0 && num[static_cast<std::size_t>(d)] < 0) {
          num[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    out.index = order.size();
    out.table.assign(order.size() * cols_, -1);
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (std::size_t x = 0; x < cols_; ++x) {
        out.table[h * cols_ + x] = num[static_cast<std::size_t>(cell(static_cast<std::size_t>(order[h]), x))];
      }
    }
    return out;
  }

  static constexpr std::size_t kMaxDeductions = 100000;

  std::size_t g_, cols_, budget_;
  std::vector<Word> subgroup_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<std::vector<int>>> conj_;  // cyclic conjugates by first column
  std::vector<std::int32_t> tab_, parent_;
  std::vector<std::pair<std::int32_t, std::size_t>> deductions_;
  std::size_t live_ = 0, max_live_ = 0, defined_ = 0;
};

}  // namespace detail

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Enumerates the cosets of the subgroup generated by `subgroup`. Overflow is
// reported through the status, never thrown.
inline CosetTable todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup = {},
                               std::size_t budget = kDefaultMaxCosets) {
  return detail::ToddCoxeter(p, subgroup, budget).run();
}

// ---------------------------------------------------------------------------
// Tietze simplification

namespace detail {

inline Word substitute(Word const& w, std::size_t gen, Word const& image) {
  Word out;
  for (Letter l : w) {
    if (letter_gen(l) != gen) {
      out.push_back(l);
    } else {
      Word piece = l > 0 ? image : inverse_word(image);
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return cyclic_reduce(out);
}

}  // namespace detail

// Removes generators that some relator expresses in terms of the others,
// while relator lengths stay small. The result presents an isomorphic group.
inline Presentation simplify(Presentation const& p, std::size_t max_growth = 0) {
  std::vector<bool> gone(p.generator_count(), false);
  std::vector<Word> rels;
  for (auto const& r : p.relators()) rels.push_back(cyclic_reduce(r));
  auto tidy = [&rels] {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (auto& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      if (seen.insert(cyclic_canonical(c)).second) kept.push_back(std::move(c));
    }
    rels = std::move(kept);
  };
  tidy();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> order(rels.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&rels](auto a, auto b) { return rels[a].size() < rels[b].size(); });
    std::size_t total = 0;
    for (auto const& r : rels) total += r.size();
    for (auto ri : order) {
      Word const& r = rels[ri];
      std::map<std::size_t, int> occ;
      for (Letter l : r) ++occ[letter_gen(l)];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        std::size_t gen = letter_gen(r[pos]);
        if (occ[gen] != 1) continue;
        // r = u x^e v  =>  x^e = u^-1 v^-1 ... rotate so x^e leads: x^e w = 1.
        Word rot(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        Word rest(rot.begin() + 1, rot.end());
        Word image = rot[0] > 0 ? inverse_word(rest) : rest;
        std::size_t uses = 0;
        for (std::size_t k = 0; k < rels.size(); ++k) {
          if (k == ri) continue;
          for (Letter l : rels[k]) uses += letter_gen(l) == gen;
        }
        std::size_t grown = total - r.size() + uses * (image.size() > 0 ? image.size() - 1 : 0);
        if (r.size() > 3 && grown > total + max_growth) continue;
        std::vector<Word> next;
        for (std::size_t k = 0; k < rels.size(); ++k) {
          if (k != ri) next.push_back(detail::substitute(rels[k], gen, image));
        }
        rels = std::move(next);
        gone[gen] = true;
        changed = true;
        break;
      }
      if (changed) break;
    }
    tidy();
  }
  std::vector<std::string> names;
  std::vector<Letter> remap(p.generator_count(), 0);
  for (std::size_t k = 0; k < p.generator_count(); ++k) {
    if (gone[k]) continue;
    remap[k] = gen_letter(names.size());
    names.push_back(p.name(k));
  }
  for (auto& r : rels) {
    for (auto& l : r) l = l > 0 ? remap[letter_gen(l)] : -remap[letter_gen(l)];
  }
  Presentation out;
  out.replace(std::move(names), std::move(rels));
  return out;
}

// ---------------------------------------------------------------------------
// Matrix images

inline Matrix evaluate_word(Word const& w, std::vector<Matrix> const& images, std::vector<Matrix> const& inverses) {
  if (images.empty()) throw Error(ErrorCode::invalid_argument, "no generator images");
  Matrix m = Matrix::identity(images.front().ring(), images.front().size());
  for (Letter l : w) m = m * (l > 0 ? images.at(letter_gen(l)) : inverses.at(letter_gen(l)));
  return m;
}

struct VonDyckResult {
  bool ok = true;
  std::size_t failing_relator = 0;  // valid when !ok
};

inline VonDyckResult von_dyck_detail(Presentation const& p, std::vector<Matrix> const& images) {
  if (images.size() != p.generator_count()) throw Error(ErrorCode::size_mismatch, "one image per generator required");
  std::vector<Matrix> inverses;
  for (std::size_t k = 0; k < images.size(); ++k) {
    detail::require_compatible(images[0], images[k]);
    inverses.push_back(inverse(images[k]));
  }
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    if (!evaluate_word(p.relators()[k], images, inverses).is_identity()) return {false, k};
  }
  return {};
}

// True iff every relator maps to the identity.
inline bool von_dyck_check(Presentation const& p, std::vector<Matrix> const& images) {
  if (p.relators().empty()) return true;
  return von_dyck_detail(p, images).ok;
}

// ---------------------------------------------------------------------------
// Cayley presentations of finite matrix groups

struct CayleyPresentation {
  Presentation presentation;
  std::vector<Matrix> generators;
  std::map<Matrix, Word> words;  // spanning-tree word of every element
};

// Generators s0, s1, ... (prefixed); one relator w_g s w_gs^-1 per non-tree edge
// of the right Cayley graph.
inline CayleyPresentation cayley_presentation(std::vector<Matrix> const& gens, Ring const& R, std::size_t n,
                                              std::string const& prefix = "s", std::size_t max_order = kDefaultMaxOrder) {
  CayleyPresentation out;
  out.generators = gens;
  for (std::size_t k = 0; k < gens.size(); ++k) out.presentation.add_generator(prefix + std::to_string(k));
  Matrix id = Matrix::identity(R, n);
  std::vector<Matrix> queue{id};
  out.words.emplace(id, Word{});
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Word const wg = out.words.at(queue[h]);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Matrix y = queue[h] * gens[k];
      auto it = out.words.find(y);
      Word ws = wg;
      ws.push_back(gen_letter(k));
      if (it == out.words.end()) {
        if (queue.size() >= max_order) throw Error(ErrorCode::budget_exceeded, "Cayley graph exceeds budget");
        out.words.emplace(y, ws);
        queue.push_back(y);
      } else {
        out.presentation.add_relator(concat({ws, inverse_word(it->second)}));
      }
    }
  }
  out.presentation.dedupe_relators();
  return out;
}

// ---------------------------------------------------------------------------
// Colimits of subgroup diagrams

struct ColimitDiagram {
  struct Edge {
    std::size_t a = 0, b = 0;
    Presentation presentation;
    std::vector<Word> into_a, into_b;  // image of each edge generator
  };
  std::vector<std::string> node_names;
  std::vector<Presentation> nodes;
  std::vector<Edge> edges;
};

namespace detail {

inline Word shift_word(Word const& w, std::size_t offset) {
  Word r;
  for (Letter l : w) r.push_back(l > 0 ? l + static_cast<Letter>(offset) : l - static_cast<Letter>(offset));
  return r;
}

inline Word map_word(Word const& w, std::vector<Word> const& images) {
  Word r;
  for (Letter l : w) {
    Word piece = l > 0 ? images.at(letter_gen(l)) : inverse_word(images.at(letter_gen(l)));
    r.insert(r.end(), piece.begin(), piece.end());
  }
  return free_reduce(r);
}

}  // namespace detail

struct DiagramAudit {
  bool ok = true;             // no relator found nontrivial
  bool conclusive = true;     // every parent enumeration completed
  std::string witness;
};

// von Dyck condition on the inclusions, decided by enumerating each parent.
inline DiagramAudit audit_diagram(ColimitDiagram const& d, std::size_t budget = 100000) {
  DiagramAudit audit;
  std::vector<std::optional<CosetTable>> tables(d.nodes.size());
  for (auto const& e : d.edges) {
    if (e.a >= d.nodes.size() || e.b >= d.nodes.size()) throw Error(ErrorCode::index_out_of_range, "edge endpoint");
    if (e.into_a.size() != e.presentation.generator_count() || e.into_b.size() != e.presentation.generator_count()) {
      throw Error(ErrorCode::size_mismatch, "inclusion map needs one word per edge generator");
    }
    for (auto [node, images] : {std::pair{e.a, &e.into_a}, std::pair{e.b, &e.into_b}}) {
      if (!tables[node]) tables[node] = todd_coxeter(d.nodes[node], {}, budget);
      if (!tables[node]->complete()) {
        audit.conclusive = false;
        continue;
      }
      for (auto const& r : e.presentation.relators()) {
        if (!tables[node]->fixes_base(detail::map_word(r, *images))) {
          audit.ok = false;
          if (audit.witness.empty()) audit.witness = "relator " + e.presentation.word_to_string(r) + " into " + d.node_names.at(node);
        }
      }
    }
  }
  return audit;
}

// Disjoint union of the node presentations plus one identification relator
// per edge generator, written as (image in a)(image in b)^-1.
inline Presentation colimit_presentation(ColimitDiagram const& d, std::size_t audit_budget = 100000) {
  if (d.node_names.size() != d.nodes.size()) throw Error(ErrorCode::size_mismatch, "one name per node");
  auto audit = audit_diagram(d, audit_budget);
  if (!audit.ok) throw Error(ErrorCode::von_dyck_violation, audit.witness);
  Presentation out;
  std::vector<std::size_t> offset;
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    offset.push_back(out.generator_count());
    for (auto const& nm : d.nodes[v].names()) out.add_generator(d.node_names[v] + "_" + nm);
  }
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    for (auto const& r : d.nodes[v].relators()) out.add_relator(detail::shift_word(r, offset[v]));
  }
  for (auto const& e : d.edges) {
    for (std::size_t k = 0; k < e.presentation.generator_count(); ++k) {
      out.add_relator(concat({detail::shift_word(e.into_a[k], offset[e.a]), inverse_word(detail::shift_word(e.into_b[k], offset[e.b]))}));
    }
  }
  return out;
}

}  // namespace abelslab
