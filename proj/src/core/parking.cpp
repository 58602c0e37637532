#include "parking.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qts {

namespace {

std::atomic<int> g_paths_cap{12};

void check_rect(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1)
    throw std::domain_error("path enumeration needs positive m, n, k");
  if (std::gcd(m, n) != 1)
    throw std::domain_error("path enumeration needs gcd(m,n) = 1");
  if (k * n > g_paths_cap.load())
    throw std::domain_error("path enumeration: kn exceeds the configured cap");
}

void gen_u(const PathU& proto, std::vector<int>& u, int i,
           std::vector<PathU>& out) {
  int kn = proto.kn();
  if (i == kn) {
    PathU p = proto;
    p.u = u;
    out.push_back(std::move(p));
    return;
  }
  // 0-based step i sits at column u[i] with n*u[i] <= i*m.
  int lo = i ? u[i - 1] : 0;
  int hi = i * proto.m / proto.n;
  for (int c = lo; c <= hi; ++c) {
    u[i] = c;
    gen_u(proto, u, i + 1, out);
  }
}

void gen_v(const PathU& path, std::vector<int>& v, std::vector<bool>& used,
           int i, std::vector<ParkingFn>& out) {
  int kn = path.kn();
  if (i == kn) {
    out.push_back(ParkingFn{path, v});
    return;
  }
  int lo = (i && path.u[i - 1] == path.u[i]) ? v[i - 1] + 1 : 1;
  for (int car = lo; car <= kn; ++car) {
    if (used[car]) continue;
    used[car] = true;
    v[i] = car;
    gen_v(path, v, used, i + 1, out);
    used[car] = false;
  }
}

/// tdinv of a labeling given the per-car scaled ranks.
int tdinv_from_ranks(const std::vector<long long>& car_rank, long long km) {
  int kn = static_cast<int>(car_rank.size());
  long long window = km * (km + 1);
  int out = 0;
  for (int r = 0; r < kn; ++r)
    for (int s = r + 1; s < kn; ++s)
      if (car_rank[r] < car_rank[s] && car_rank[s] < car_rank[r] + window)
        ++out;
  return out;
}

/// Positions 0..kn-1 ordered by ascending scaled rank.
std::vector<int> positions_by_rank(const std::vector<long long>& ranks) {
  std::vector<int> pos(ranks.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::sort(pos.begin(), pos.end(),
            [&](int a, int b) { return ranks[a] < ranks[b]; });
  return pos;
}

unsigned hits_mask(const PathU& path) {
  unsigned mask = 0;
  for (int i = 1; i < path.k; ++i)
    if (path.u[static_cast<size_t>(path.n) * i] == i * path.m)
      mask |= 1u << (i - 1);
  return mask;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

int paths_cap() { return g_paths_cap.load(); }

void set_paths_cap(int cap) {
  if (cap < 1) throw std::domain_error("paths cap must be positive");
  g_paths_cap.store(cap);
}

std::vector<PathU> enum_paths(int m, int n, int k) {
  check_rect(m, n, k);
  PathU proto;
  proto.m = m;
  proto.n = n;
  proto.k = k;
  std::vector<int> u(static_cast<size_t>(k) * n, 0);
  std::vector<PathU> out;
  gen_u(proto, u, 0, out);
  return out;
}

std::vector<ParkingFn> enum_parks(const PathU& path) {
  int kn = path.kn();
  std::vector<int> v(kn, 0);
  std::vector<bool> used(kn + 1, false);
  std::vector<ParkingFn> out;
  gen_v(path, v, used, 0, out);
  return out;
}

int path_area(const PathU& path) {
  int km = path.km(), kn = path.kn();
  int total = (km * kn - km - kn + path.k) / 2;
  for (int c : path.u) total -= c;
  return total;
}

int path_dinv(const PathU& path) {
  Partition lam = path_lambda(path);
  long long m = path.m, n = path.n;
  int out = 0;
  for (Cell c : cells_of(lam)) {
    long long a = arm(lam, c), l = leg(lam, c);
    if (a * n <= m * (l + 1) && (l == 0 || m * l < n * (a + 1))) ++out;
  }
  return out;
}

std::vector<long long> path_ranks(const PathU& path) {
  long long km = path.km(), kn = path.kn();
  std::vector<long long> out(path.u.size());
  for (size_t i = 0; i < path.u.size(); ++i)
    out[i] = (km * static_cast<long long>(i) - kn * path.u[i]) * (km + 1) +
             path.u[i];
  return out;
}

int path_maxtdinv(const PathU& path) {
  // The labeling whose word is the reverse permutation: cars increase with
  // increasing rank.
  std::vector<long long> ranks = path_ranks(path);
  std::vector<int> pos = positions_by_rank(ranks);
  std::vector<long long> car_rank(ranks.size());
  for (size_t j = 0; j < pos.size(); ++j) car_rank[j] = ranks[pos[j]];
  return tdinv_from_ranks(car_rank, path.km());
}

Composition path_hits(const PathU& path) {
  return comp_from_subset(hits_mask(path), path.k);
}

int path_ret(const PathU& path) {
  unsigned mask = hits_mask(path);
  for (int i = 1; i < path.k; ++i)
    if (mask & (1u << (i - 1))) return i;
  return path.k;
}

Partition path_lambda(const PathU& path) {
  Partition lam;
  for (int c : path.u)
    if (c > 0) lam.push_back(c);
  std::sort(lam.rbegin(), lam.rend());
  return lam;
}

Partition path_run_lengths(const PathU& path) {
  Partition out;
  size_t i = 0;
  while (i < path.u.size()) {
    size_t j = i;
    while (j < path.u.size() && path.u[j] == path.u[i]) ++j;
    out.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

ParkStats stats(const ParkingFn& pi) {
  const PathU& path = pi.path;
  int kn = path.kn();
  ParkStats st;
  st.area = path_area(path);
  st.dinv_path = path_dinv(path);
  st.ranks = path_ranks(path);
  st.maxtdinv = path_maxtdinv(path);
  st.comp_hits = path_hits(path);
  st.ret = path_ret(path);

  std::vector<long long> car_rank(kn);
  for (int i = 0; i < kn; ++i) car_rank[pi.v[i] - 1] = st.ranks[i];
  st.tdinv = tdinv_from_ranks(car_rank, path.km());
  st.dinv = st.dinv_path + st.tdinv - st.maxtdinv;

  std::vector<int> pos = positions_by_rank(st.ranks);
  st.word.resize(kn);
  for (int j = 0; j < kn; ++j) st.word[j] = pi.v[pos[kn - 1 - j]];
  std::vector<int> where(kn + 1, 0);  // position of each car inside word
  for (int j = 0; j < kn; ++j) where[st.word[j]] = j;
  for (int d = 1; d < kn; ++d)
    if (where[d] > where[d + 1]) st.ides |= 1u << (d - 1);
  st.pides = comp_from_subset(st.ides, kn);
  return st;
}

ParkFilter ParkFilter::all() { return ParkFilter(); }

ParkFilter ParkFilter::hits_exactly(Composition alpha) {
  ParkFilter f;
  f.kind_ = Kind::hits_exactly;
  f.alpha_ = std::move(alpha);
  return f;
}

ParkFilter ParkFilter::hits_count(int r) {
  ParkFilter f;
  f.kind_ = Kind::hits_count;
  f.value_ = r;
  return f;
}

ParkFilter ParkFilter::ret_at_least(int a) {
  ParkFilter f;
  f.kind_ = Kind::ret_at_least;
  f.value_ = a;
  return f;
}

bool ParkFilter::admits(const PathU& path) const {
  switch (kind_) {
    case Kind::all:
      return true;
    case Kind::hits_exactly:
      return path_hits(path) == alpha_;
    case Kind::hits_count:
      return static_cast<int>(path_hits(path).size()) == value_;
    case Kind::ret_at_least:
      return path_ret(path) >= value_;
  }
  return false;
}

QSymCoords park_path_sum(const PathU& path) {
  QSymCoords out(path.kn());
  for (const ParkingFn& pi : enum_parks(path)) {
    ParkStats st = stats(pi);
    QTRatio w = QTRatio::q().pow(st.dinv) * QTRatio::t().pow(st.area);
    out.add(st.ides, w);
  }
  return out;
}

QSymCoords hikita_sum(int m, int n, int k, const ParkFilter& filter) {
  QSymCoords out(k * n);
  for (const PathU& path : enum_paths(m, n, k)) {
    if (!filter.admits(path)) continue;
    QSymCoords part = park_path_sum(path);
    for (unsigned mask = 0; mask < (1u << (k * n - 1)); ++mask) {
      const QTRatio& c = part.at(mask);
      if (!c.is_zero()) out.add(mask, c);
    }
  }
  return out;
}

bool shuffle_member(const std::vector<int>& word, const Composition& mu) {
  if (part_size(mu) != static_cast<int>(word.size()))
    throw std::domain_error("shuffle_member: |mu| must equal the word length");
  // block_of[c] = index of the consecutive block car c belongs to.
  std::vector<int> block_of(word.size() + 1, 0);
  int car = 1;
  for (size_t b = 0; b < mu.size(); ++b)
    for (int j = 0; j < mu[b]; ++j) block_of[car++] = static_cast<int>(b);
  std::vector<int> last(mu.size(), 0);
  for (int c : word) {
    int b = block_of[c];
    if (last[b] > c) return false;
    last[b] = c;
  }
  return true;
}

QTRatio pairing_rhs(int m, int n, int k, const ParkFilter& filter,
                    const Partition& mu) {
  if (part_size(mu) != k * n)
    throw std::domain_error("pairing_rhs: |mu| must equal kn");
  QTRatio out;
  for (const PathU& path : enum_paths(m, n, k)) {
    if (!filter.admits(path)) continue;
    for (const ParkingFn& pi : enum_parks(path)) {
      ParkStats st = stats(pi);
      if (!shuffle_member(st.word, mu)) continue;
      out += QTRatio::q().pow(st.dinv) * QTRatio::t().pow(st.area);
    }
  }
  return out;
}

QTRatio qsym_pair_h(const QSymCoords& coords, const Composition& mu) {
  if (part_size(mu) != coords.degree())
    throw std::domain_error("qsym_pair_h: |mu| must equal the degree");
  unsigned top = subset_from_comp(mu);
  QTRatio out;
  unsigned s = top;
  while (true) {
    out += coords.at(s);
    if (s == 0) break;
    s = (s - 1) & top;
  }
  return out;
}

std::string parks_csv(int m, int n, int k) {
  std::ostringstream os;
  os << "u;v;area;dinv_path;tdinv;maxtdinv;dinv;word;ides;comp_hits;ret\n";
  for (const PathU& path : enum_paths(m, n, k)) {
    for (const ParkingFn& pi : enum_parks(path)) {
      ParkStats st = stats(pi);
      std::vector<int> ides_list;
      for (int d = 1; d < path.kn(); ++d)
        if (st.ides & (1u << (d - 1))) ides_list.push_back(d);
      os << join(path.u) << ";" << join(pi.v) << ";" << st.area << ";"
         << st.dinv_path << ";" << st.tdinv << ";" << st.maxtdinv << ";"
         << st.dinv << ";" << join(st.word) << ";" << join(ides_list) << ";"
         << join(st.comp_hits) << ";" << st.ret << "\n";
    }
  }
  return os.str();
}

}  // namespace qts
