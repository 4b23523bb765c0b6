#include "cgt/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

constexpr int kUndef = -1;

class Enumerator {
 public:
  Enumerator(const Presentation& pres, long long max_cosets, long long lookahead_stride)
      : ncols_(2 * pres.generator_count()),
        max_cosets_(max_cosets),
        lookahead_stride_(std::max<long long>(16, lookahead_stride)),
        next_lookahead_(lookahead_stride_) {
    if (max_cosets_ < 1) throw validation_error("max_cosets must be >= 1");
    // Freely and cyclically reduced column words, first-occurrence order.
    std::set<std::vector<int>> seen;
    for (const FreeWord& r : pres.relators) {
      FreeWord w = r.reduced();
      size_t cut = 0;
      while (w.letters.size() >= 2 * (cut + 1) &&
             w.letters[cut] == -w.letters[w.letters.size() - 1 - cut])
        ++cut;
      std::vector<int> cols;
      for (size_t i = cut; i + cut < w.letters.size(); ++i) {
        int l = w.letters[i];
        cols.push_back(l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1);
      }
      if (cols.empty()) continue;
      if (seen.insert(cols).second) relators_.push_back(std::move(cols));
    }
  }

  void run() {
    define_root();
    for (int alpha = 0; alpha < static_cast<int>(tab_.size()); ++alpha) {
      if (!alive(alpha)) continue;
      for (const auto& w : relators_) {
        scan(alpha, w, /*fill=*/true);
        if (!alive(alpha)) break;
      }
      if (!alive(alpha)) continue;
      for (int x = 0; x < ncols_; ++x)
        if (tab_[alpha][x] == kUndef) define(alpha, x);
      if (static_cast<long long>(tab_.size()) >= next_lookahead_) {
        lookahead();
        alpha = compact_through(alpha);
        next_lookahead_ = static_cast<long long>(tab_.size()) +
                          std::max<long long>(lookahead_stride_, live_);
      }
    }
    compact_through(static_cast<int>(tab_.size()) - 1);
    verify_complete();
  }

  CosetTable result(int generator_count) && {
    CosetTable t;
    t.generator_count = generator_count;
    t.rows = std::move(tab_);
    return t;
  }

  long long cosets_defined() const { return total_defined_; }

 private:
  bool alive(int c) { return rep(c) == c; }

  int rep(int c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }

  void define_root() {
    tab_.emplace_back(ncols_, kUndef);
    p_.push_back(0);
    live_ = total_defined_ = 1;
  }

  int define(int from, int col) {
    if (total_defined_ >= max_cosets_)
      throw resource_error("coset limit " + std::to_string(max_cosets_) +
                           " exceeded during enumeration (live " + std::to_string(live_) +
                           ", defined " + std::to_string(total_defined_) +
                           " at abort); the presented group may be infinite or just large");
    int idx = static_cast<int>(tab_.size());
    tab_.emplace_back(ncols_, kUndef);
    p_.push_back(idx);
    ++live_;
    ++total_defined_;
    tab_[from][col] = idx;
    tab_[idx][col ^ 1] = from;
    return idx;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    p_[hi] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      int gone = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int d = tab_[gone][x];
        if (d == kUndef) continue;
        tab_[gone][x] = kUndef;
        if (tab_[d][x ^ 1] == gone) tab_[d][x ^ 1] = kUndef;
        int mu = rep(gone), nu = rep(d);
        if (tab_[mu][x] != kUndef)
          merge(nu, tab_[mu][x]);
        else if (tab_[nu][x ^ 1] != kUndef)
          merge(mu, tab_[nu][x ^ 1]);
        else {
          tab_[mu][x] = nu;
          tab_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  // Scan of one relator at one coset; with fill, gaps are closed by new
  // definitions so the scan always completes.
  void scan(int alpha, const std::vector<int>& w, bool fill) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && tab_[f][w[i]] != kUndef) f = tab_[f][w[i++]];
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (j >= i && tab_[b][w[j] ^ 1] != kUndef) b = tab_[b][w[j--] ^ 1];
      if (j < i) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i) {
        tab_[f][w[i]] = b;
        tab_[b][w[i] ^ 1] = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Deduction/coincidence sweep over the whole table without definitions.
  void lookahead() {
    for (int c = 0; c < static_cast<int>(tab_.size()); ++c) {
      if (!alive(c)) continue;
      for (const auto& w : relators_) {
        scan(c, w, /*fill=*/false);
        if (!alive(c)) break;
      }
    }
  }

  // Renumbers live cosets (order preserved) and returns the new index of
  // the last scanned position.
  int compact_through(int alpha) {
    std::vector<int> newidx(tab_.size(), -1);
    int next = 0;
    for (int c = 0; c < static_cast<int>(tab_.size()); ++c)
      if (rep(c) == c) newidx[c] = next++;
    int new_alpha = -1;
    for (int c = alpha; c >= 0; --c)
      if (newidx[c] >= 0) {
        new_alpha = newidx[c];
        break;
      }
    std::vector<std::vector<int>> fresh(next);
    for (int c = 0; c < static_cast<int>(tab_.size()); ++c) {
      if (newidx[c] < 0) continue;
      auto& row = tab_[c];
      for (int& e : row)
        if (e != kUndef) e = newidx[rep(e)];
      fresh[newidx[c]] = std::move(row);
    }
    tab_ = std::move(fresh);
    p_.resize(tab_.size());
    for (size_t c = 0; c < p_.size(); ++c) p_[c] = static_cast<int>(c);
    return new_alpha;
  }

  void verify_complete() {
    for (const auto& row : tab_)
      for (int e : row)
        if (e == kUndef) throw internal_error("enumeration left an undefined entry");
    for (int c = 0; c < static_cast<int>(tab_.size()); ++c)
      for (const auto& w : relators_) {
        int x = c;
        for (int col : w) x = tab_[x][col];
        if (x != c) throw internal_error("relator trace does not close");
      }
  }

  int ncols_;
  long long max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> p_;
  std::deque<int> queue_;
  long long live_ = 0, total_defined_ = 0;
  long long lookahead_stride_;
  long long next_lookahead_;
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& pres, long long max_cosets,
                               long long lookahead_stride) {
  Enumerator e(pres, max_cosets, lookahead_stride);
  e.run();
  long long defined = e.cosets_defined();
  CosetTable table = std::move(e).result(pres.generator_count());

  int n = table.cosets();
  if (n > FiniteGroup::kMaxOrder)
    throw resource_error("enumerated group order " + std::to_string(n) +
                         " exceeds supported maximum");
  int ncols = 2 * pres.generator_count();
  // BFS definition order for the multiplication DP and word labels.
  std::vector<int> parent(n, -1), via(n, -1), order;
  order.reserve(n);
  order.push_back(0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (size_t at = 0; at < order.size(); ++at) {
    int c = order[at];
    for (int x = 0; x < ncols; ++x) {
      int d = table.rows[c][x];
      if (!seen[d]) {
        seen[d] = 1;
        parent[d] = c;
        via[d] = x;
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw internal_error("coset table is not connected");

  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) mul[x][0] = x;
  for (size_t at = 1; at < order.size(); ++at) {
    int b = order[at];
    for (int x = 0; x < n; ++x) mul[x][b] = table.rows[mul[x][parent[b]]][via[b]];
  }
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (size_t at = 1; at < order.size(); ++at) {
    int b = order[at];
    int gen = via[b] / 2;
    std::string step = pres.generator_names[gen] + (via[b] % 2 ? "'" : "");
    labels[b] = parent[b] == 0 ? step : labels[parent[b]] + " " + step;
  }

  EnumerationResult res;
  res.group = FiniteGroup::from_table(std::move(mul), std::move(labels));
  res.table = std::move(table);
  res.cosets_defined = defined;
  for (int j = 0; j < pres.generator_count(); ++j)
    res.generator_images.push_back(res.table.rows[0][2 * j]);
  // The enumerated group satisfies every relator.
  for (const FreeWord& r : pres.relators)
    if (evaluate_word(r, res.generator_images, *res.group) != FiniteGroup::kIdentity)
      throw internal_error("relator fails in the enumerated group");
  return res;
}

}  // namespace cgt
