#include "hooktab/hook_shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hooktab {

namespace {
// suffix sums of multiplicities: out[i] = v[i] + ... + v.back()
std::vector<int> suffix_sums(const std::vector<int>& v) {
  std::vector<int> out(v.size(), 0);
  int run = 0;
  for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) {
    run += v[k];
    out[k] = run;
  }
  return out;
}

int sup_positive(const std::vector<int>& v) {
  int top = 0;
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (v[j] > 0) top = j + 1;
  return top;
}
}  // namespace

bool SuperWeight::equals_mod_supertrace(const SuperWeight& other) const {
  if (eps.size() != other.eps.size() || delta.size() != other.delta.size())
    return false;
  // shift along (eps_i + s, delta_j - s) to the delta_n = 0 gauge
  long long s = delta.empty() ? 0 : delta.back();
  long long t = other.delta.empty() ? 0 : other.delta.back();
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] + s != other.eps[i] + t) return false;
  for (std::size_t j = 0; j < delta.size(); ++j)
    if (delta[j] - s != other.delta[j] - t) return false;
  return true;
}

SuperWeight SuperWeight::operator+(const SuperWeight& other) const {
  SuperWeight out = *this;
  for (std::size_t i = 0; i < out.eps.size(); ++i) out.eps[i] += other.eps[i];
  for (std::size_t j = 0; j < out.delta.size(); ++j) out.delta[j] += other.delta[j];
  return out;
}

HookShape::HookShape(int m, int n, std::vector<int> a, std::vector<int> a_prime)
    : m_(m), n_(n), a_(std::move(a)), ap_(std::move(a_prime)) {
  if (m_ <= 0) throw PreconditionViolation("m must be positive");
  if (n_ < 0) throw PreconditionViolation("n must be nonnegative");
  if (static_cast<int>(a_.size()) != m_)
    throw LengthMismatch("a needs m = " + std::to_string(m_) + " entries, got " +
                         std::to_string(a_.size()));
  if (static_cast<int>(ap_.size()) != std::max(0, n_ - 1))
    throw LengthMismatch("a_prime needs n-1 = " + std::to_string(std::max(0, n_ - 1)) +
                         " entries, got " + std::to_string(ap_.size()));
  for (int v : a_)
    if (v < 0) throw PreconditionViolation("negative multiplicity in a");
  for (int v : ap_)
    if (v < 0) throw PreconditionViolation("negative multiplicity in a_prime");
  if (a_.back() < sup_positive(ap_))
    throw CovarianceViolation("a_m = " + std::to_string(a_.back()) +
                              " < j0 = " + std::to_string(sup_positive(ap_)));
}

HookShape HookShape::zero(int m, int n) {
  return HookShape(m, n, std::vector<int>(m, 0),
                   std::vector<int>(std::max(0, n - 1), 0));
}

HookShape HookShape::eta(int m, int n) {
  std::vector<int> a(m, 0);
  a[m - 1] = 1;
  return HookShape(m, n, std::move(a), std::vector<int>(std::max(0, n - 1), 0));
}

std::vector<int> HookShape::row_lengths() const { return suffix_sums(a_); }

std::vector<int> HookShape::column_heights_below() const {
  return suffix_sums(ap_);
}

int HookShape::j0() const { return sup_positive(ap_); }

long long HookShape::box_count() const {
  long long total = 0;
  for (int v : row_lengths()) total += v;
  for (int v : column_heights_below()) total += v;
  return total;
}

int HookShape::column_count() const {
  // row 1 is the longest row and every below-line column sits under it
  return suffix_sums(a_).empty() ? 0 : suffix_sums(a_)[0];
}

int HookShape::column_height(int k) const {
  if (k < 1) throw IndexOutOfRange("column index " + std::to_string(k));
  int h = 0;
  for (int len : row_lengths()) h += len >= k;
  auto below = column_heights_below();
  if (k <= static_cast<int>(below.size())) h += below[k - 1];
  return h;
}

bool HookShape::contains(int i, int j) const {
  if (i < 1 || j < 1) return false;
  if (i <= m_) {
    auto rows = row_lengths();
    return j <= rows[i - 1];
  }
  auto below = column_heights_below();
  if (j > static_cast<int>(below.size())) return false;
  return i - m_ <= below[j - 1];
}

SuperWeight HookShape::weight() const {
  SuperWeight w;
  for (int v : row_lengths()) w.eps.push_back(v);
  for (int v : column_heights_below()) w.delta.push_back(v);
  if (n_ > 0) w.delta.push_back(0);
  return w;
}

bool HookShape::is_typical() const {
  auto rows = row_lengths();
  auto below = column_heights_below();
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= n_; ++j) {
      long long atilde = j <= n_ - 1 ? below[j - 1] : 0;
      if (rows[i - 1] + atilde + m_ + 1 - i - j == 0) return false;
    }
  return true;
}

bool HookShape::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; }) &&
         std::all_of(ap_.begin(), ap_.end(), [](int v) { return v == 0; });
}

bool HookShape::operator==(const HookShape& o) const {
  return m_ == o.m_ && n_ == o.n_ && a_ == o.a_ && ap_ == o.ap_;
}

std::strong_ordering HookShape::operator<=>(const HookShape& o) const {
  if (auto c = m_ <=> o.m_; c != 0) return c;
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = a_ <=> o.a_; c != 0) return c;
  return ap_ <=> o.ap_;
}

std::string HookShape::to_string() const {
  std::ostringstream os;
  os << "sl(" << m_ << "," << n_ << ") a=(";
  for (int i = 0; i < m_; ++i) os << (i ? "," : "") << a_[i];
  os << ") a'=(";
  for (std::size_t j = 0; j < ap_.size(); ++j) os << (j ? "," : "") << ap_[j];
  os << ")";
  return os.str();
}

namespace {
void require_same_signature(const HookShape& x, const HookShape& y) {
  if (x.m() != y.m() || x.n() != y.n())
    throw SignatureMismatch(x.to_string() + " vs " + y.to_string());
}
}  // namespace

bool shape_leq(const HookShape& mu, const HookShape& lambda) {
  require_same_signature(mu, lambda);
  for (int i = 0; i < mu.m(); ++i)
    if (mu.a()[i] > lambda.a()[i]) return false;
  for (std::size_t j = 0; j < mu.a_prime().size(); ++j)
    if (mu.a_prime()[j] > lambda.a_prime()[j]) return false;
  return true;
}

namespace {
// sup{ j : a'_j > b'_j }, the widest below-line column the difference keeps
int diff_top(const HookShape& lambda, const HookShape& mu) {
  int top = 0;
  for (std::size_t j = 0; j < lambda.a_prime().size(); ++j)
    if (lambda.a_prime()[j] > mu.a_prime()[j]) top = static_cast<int>(j) + 1;
  return top;
}
}  // namespace

bool diff_is_shape(const HookShape& lambda, const HookShape& mu) {
  if (!shape_leq(mu, lambda))
    throw NotComparable(mu.to_string() + " is not <= " + lambda.to_string());
  return lambda.a().back() - mu.a().back() >= diff_top(lambda, mu);
}

int min_eta_padding(const HookShape& lambda, const HookShape& mu) {
  if (!shape_leq(mu, lambda))
    throw NotComparable(mu.to_string() + " is not <= " + lambda.to_string());
  return std::max(0, diff_top(lambda, mu) -
                         (lambda.a().back() - mu.a().back()));
}

HookShape shape_sum(const HookShape& lambda, const HookShape& mu) {
  require_same_signature(lambda, mu);
  std::vector<int> a(lambda.a());
  std::vector<int> ap(lambda.a_prime());
  for (int i = 0; i < lambda.m(); ++i) a[i] += mu.a()[i];
  for (std::size_t j = 0; j < ap.size(); ++j) ap[j] += mu.a_prime()[j];
  return HookShape(lambda.m(), lambda.n(), std::move(a), std::move(ap));
}

HookShape shape_diff(const HookShape& lambda, const HookShape& mu) {
  if (!shape_leq(mu, lambda))
    throw NotComparable(mu.to_string() + " is not <= " + lambda.to_string());
  std::vector<int> a(lambda.a());
  std::vector<int> ap(lambda.a_prime());
  for (int i = 0; i < lambda.m(); ++i) a[i] -= mu.a()[i];
  for (std::size_t j = 0; j < ap.size(); ++j) ap[j] -= mu.a_prime()[j];
  return HookShape(lambda.m(), lambda.n(), std::move(a), std::move(ap));
}

DualShapeData dual_shape(const HookShape& lambda) {
  DualShapeData d;
  d.m = lambda.n();
  d.n = lambda.m();
  for (int j = 1; j <= lambda.n() - 1; ++j)
    d.a.push_back(lambda.a_prime()[lambda.n() - j - 1]);
  if (lambda.n() > 0) d.a.push_back(lambda.a().back() - lambda.j0());
  for (int i = 1; i <= lambda.m() - 1; ++i)
    d.a_prime.push_back(lambda.a()[lambda.m() - i - 1]);
  return d;
}

std::vector<HookShape> enumerate_shapes(int m, int n, int max_boxes) {
  // weights per unit of a_i / a'_j: a_i adds i boxes, a'_j adds j boxes
  std::vector<HookShape> out;
  int slots = m + std::max(0, n - 1);
  std::vector<int> v(slots, 0);
  auto boxes = [&]() {
    long long total = 0;
    for (int i = 0; i < m; ++i) total += static_cast<long long>(i + 1) * v[i];
    for (int j = 0; j + 1 < n; ++j) total += static_cast<long long>(j + 1) * v[m + j];
    return total;
  };
  // odometer over all coordinate vectors within the box budget
  while (true) {
    if (boxes() <= max_boxes) {
      std::vector<int> a(v.begin(), v.begin() + m);
      std::vector<int> ap(v.begin() + m, v.end());
      int top = sup_positive(ap);
      if (a[m - 1] >= top) out.emplace_back(m, n, std::move(a), std::move(ap));
    }
    int k = slots - 1;
    while (k >= 0) {
      ++v[k];
      if (boxes() <= max_boxes) break;
      v[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hooktab
