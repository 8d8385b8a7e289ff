#include "frobkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "frobkit/error.hpp"

namespace frobkit {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (__builtin_add_overflow(a.exp[i], b.exp[i], &r.exp[i])) throw ExponentOverflow();
  }
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (__builtin_sub_overflow(a.exp[i], b.exp[i], &r.exp[i])) throw ExponentOverflow();
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b, std::size_t arity) {
  for (std::size_t i = 0; i < arity; ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

bool mono_coprime(const Monomial& a, const Monomial& b, std::size_t arity) {
  for (std::size_t i = 0; i < arity; ++i) {
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  }
  return true;
}

RingCtx::RingCtx(std::vector<std::string> names, PrimeModulus p, bool laurent,
                 std::size_t fiber_begin, std::size_t elim_block)
    : names_(std::move(names)),
      modulus_(p),
      laurent_(laurent),
      fiber_begin_(fiber_begin),
      elim_block_(elim_block) {}

Ring RingCtx::make(std::vector<std::string> names, PrimeModulus p, bool laurent,
                   std::size_t fiber_begin) {
  if (names.empty()) throw InvalidArgument("a ring needs at least one variable");
  if (names.size() > kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw InvalidArgument("invalid variable name '" + n + "'");
    }
    for (char c : n) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw InvalidArgument("invalid variable name '" + n + "'");
      }
    }
    if (!seen.insert(n).second) throw InvalidArgument("duplicate variable '" + n + "'");
  }
  if (fiber_begin > names.size()) throw InvalidArgument("fiber split past the last variable");
  return Ring(new RingCtx(std::move(names), p, laurent, fiber_begin, 0));
}

Ring RingCtx::elimination(const RingCtx& base, std::vector<std::string> aux) {
  std::vector<std::string> names = aux;
  names.insert(names.end(), base.names_.begin(), base.names_.end());
  if (names.size() > kMaxVars) {
    throw BudgetExceeded("elimination ring would exceed " + std::to_string(kMaxVars) +
                         " variables");
  }
  auto k = aux.size();
  return Ring(new RingCtx(std::move(names), base.modulus_, false, base.fiber_begin_ + k, k));
}

std::optional<std::size_t> RingCtx::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0;
  std::int64_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int RingCtx::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (elim_block_ > 0) {
    int c = grevlex(a, b, 0, elim_block_);
    if (c != 0) return c;
  }
  return grevlex(a, b, elim_block_, names_.size());
}

bool RingCtx::same_as(const RingCtx& other) const noexcept {
  return names_ == other.names_ && modulus_ == other.modulus_ && laurent_ == other.laurent_ &&
         elim_block_ == other.elim_block_;
}

std::string RingCtx::describe() const {
  std::string s = "F_" + std::to_string(p()) + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ",";
    if (i == fiber_begin_ && fiber_begin_ > 0) s += "|";
    s += names_[i];
    if (laurent_) s += "^+-1";
  }
  return s + "]";
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b)) throw RingMismatch();
}

}  // namespace frobkit
