#include "cymirror/census.hpp"

#include "cymirror/errors.hpp"
#include "cymirror/euler.hpp"
#include "cymirror/quasismooth.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace cymirror {

std::optional<CensusFilter> parse_census_filter(std::string_view text) {
  if (text == "transverse") return CensusFilter::transverse;
  if (text == "ip") return CensusFilter::ip;
  if (text == "all") return CensusFilter::all;
  return std::nullopt;
}

std::string_view to_string(CensusFilter filter) {
  switch (filter) {
    case CensusFilter::transverse: return "transverse";
    case CensusFilter::ip: return "ip";
    case CensusFilter::all: return "all";
  }
  return "?";
}

std::uint64_t default_max_degree(std::size_t dim) {
  switch (dim) {
    case 2: return 60;
    case 3: return 100;
    case 4: return 4000;
  }
  throw DomainError("census supports d = 2, 3, 4 only");
}

namespace {

// Builds tuples in which every value is justified: it divides w, or
// w - a*x (a >= 2) is another value of the tuple. Values are placed either
// freely, in nonincreasing order, or as the forced target of a value that
// nothing placed so far justifies. Every later value is at most the latest
// free one, which keeps the search close to quadratic in w.
class PointerSearch {
public:
  PointerSearch(std::size_t length, std::uint64_t degree) : n_(length), w_(degree) {}

  std::vector<std::vector<std::uint64_t>> run() {
    search(w_ / 2);
    return {found_.begin(), found_.end()};
  }

private:
  bool justified(std::uint64_t x) const {
    if (w_ % x == 0) return true;
    for (auto s : vals_)
      if (s < w_ && (w_ - s) % x == 0 && (w_ - s) / x >= 2) return true;
    return false;
  }

  void push(std::uint64_t x) {
    vals_.push_back(x);
    sum_ += x;
  }
  void pop() {
    sum_ -= vals_.back();
    vals_.pop_back();
  }

  void search(std::uint64_t cap) {
    for (auto x : vals_)
      if (!justified(x)) return resolve(x, cap);
    const std::size_t r = n_ - vals_.size();
    const std::uint64_t rest = w_ - sum_;
    if (r == 0) {
      if (rest == 0) {
        auto t = vals_;
        std::sort(t.begin(), t.end());
        found_.insert(std::move(t));
      }
      return;
    }
    if (rest < r) return;
    if (r == 1) {
      if (rest <= cap) {
        push(rest);
        search(rest);
        pop();
      }
      return;
    }
    const std::uint64_t hi = std::min(cap, rest - (r - 1));
    const std::uint64_t lo = (rest + r - 1) / r;
    for (std::uint64_t f = hi; f >= lo && f >= 1; --f) {
      push(f);
      search(f);
      pop();
    }
  }

  void resolve(std::uint64_t x, std::uint64_t cap) {
    if (vals_.size() == n_) return;
    const std::size_t r = n_ - vals_.size() - 1;
    for (std::uint64_t a = 2; a * x < w_; ++a) {
      const std::uint64_t t = w_ - a * x;
      if (t > cap) continue;
      if (sum_ + t > w_) continue;
      const std::uint64_t rest = w_ - sum_ - t;
      if (rest > r * cap) break;  // rest only grows with a
      if (rest < r) continue;
      push(t);
      search(cap);
      pop();
    }
  }

  std::size_t n_;
  std::uint64_t w_;
  std::vector<std::uint64_t> vals_;
  std::uint64_t sum_ = 0;
  std::set<std::vector<std::uint64_t>> found_;
};

// Nondecreasing tuples of the given length summing to `degree`, each <= cap.
template <typename Visit>
void partitions(std::size_t length, std::uint64_t degree, std::uint64_t cap, Visit visit) {
  std::vector<std::uint64_t> t(length);
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t lo, std::uint64_t rest) -> void {
    const std::size_t left = length - k;
    if (left == 1) {
      if (rest >= lo && rest <= cap) {
        t[k] = rest;
        visit(t);
      }
      return;
    }
    for (std::uint64_t x = lo; x * left <= rest && x <= cap; ++x) {
      t[k] = x;
      self(self, k + 1, x, rest - x);
    }
  };
  rec(rec, 0, 1, degree);
}

CensusRecord make_record(const WeightVector& w, bool transverse, bool ip) {
  CensusRecord r;
  r.degree = w.degree();
  r.weights = w.weights();
  r.transverse = transverse;
  r.ip = ip;
  r.gorenstein = weight_flags(w).gorenstein;
  r.chi_orb_formula = vafa_subset_sum(w).value;
  return r;
}

std::vector<CensusRecord> records_for_degree(std::size_t dim, std::uint64_t degree, CensusFilter filter) {
  std::vector<CensusRecord> out;
  const std::size_t n = dim + 1;
  if (filter == CensusFilter::transverse) {
    for (auto& t : pointer_candidates(n, degree)) {
      WeightVector w(std::move(t));
      if (!weight_flags(w).well_formed || !is_transverse(w)) continue;
      out.push_back(make_record(w, true, has_ip_property(w)));
    }
    return out;
  }
  const std::uint64_t cap = filter == CensusFilter::ip ? degree / 2 : degree;
  partitions(n, degree, cap, [&](const std::vector<std::uint64_t>& t) {
    WeightVector w(t);
    if (!weight_flags(w).well_formed) return;
    const bool ip = has_ip_property(w);
    if (filter == CensusFilter::ip && !ip) return;
    out.push_back(make_record(w, is_transverse(w), ip));
  });
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> pointer_candidates(std::size_t length, std::uint64_t degree) {
  return PointerSearch(length, degree).run();
}

void census(const CensusOptions& options, const std::function<void(const CensusRecord&)>& sink) {
  if (options.dim < 2 || options.dim > 4) throw DomainError("census supports d = 2, 3, 4 only");
  const std::uint64_t first = options.dim + 1;
  const std::uint64_t last = options.max_degree;
  if (last < first) return;
  const std::size_t count = last - first + 1;
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(count)));

  std::vector<std::vector<CensusRecord>> results(count);
  std::vector<char> done(count, 0);
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::condition_variable ready;
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= count) return;
      std::vector<CensusRecord> recs;
      try {
        recs = records_for_degree(options.dim, first + i, options.filter);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(recs);
        done[i] = 1;
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> threads;
  if (jobs == 1)
    worker();
  else
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
  std::exception_ptr error;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<CensusRecord> recs;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return done[i] != 0 || threads.empty(); });
      if (!done[i]) break;
      recs = std::move(results[i]);
      if (failure) error = failure;
    }
    if (error) break;
    for (const auto& r : recs) sink(r);
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  if (failure) std::rethrow_exception(failure);
}

std::vector<CensusRecord> census(const CensusOptions& options) {
  std::vector<CensusRecord> out;
  census(options, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

std::string census_header(const CensusOptions& options) {
  std::ostringstream os;
  os << "# cymirror census dim=" << options.dim << " max_degree=" << options.max_degree
     << " filter=" << to_string(options.filter) << " version=" << CYMIRROR_VERSION;
  return os.str();
}

std::string to_tsv(const CensusRecord& r) {
  std::ostringstream os;
  os << r.degree << '\t';
  for (std::size_t i = 0; i < r.weights.size(); ++i) os << (i ? "," : "") << r.weights[i];
  os << '\t' << r.transverse << '\t' << r.ip << '\t' << r.gorenstein << '\t' << to_string(r.chi_orb_formula);
  return os.str();
}

namespace {

bool parse_flag(std::string_view s) {
  if (s == "0") return false;
  if (s == "1") return true;
  throw ParseError("invalid flag '" + std::string(s) + "'");
}

}  // namespace

CensusRecord parse_tsv(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (true) {
    auto tab = line.find('\t', pos);
    cols.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  if (cols.size() != 6) throw ParseError("census line needs 6 columns");
  CensusRecord r;
  auto [end, ec] = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), r.degree);
  if (ec != std::errc() || end != cols[0].data() + cols[0].size()) throw ParseError("invalid degree");
  r.weights = WeightVector::parse(cols[1]).weights();
  r.transverse = parse_flag(cols[2]);
  r.ip = parse_flag(cols[3]);
  r.gorenstein = parse_flag(cols[4]);
  r.chi_orb_formula = parse_rational(cols[5]);
  return r;
}

}  // namespace cymirror
