// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include "puiseux/families.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "puiseux/sequences.hpp"

namespace puiseux {

namespace {
std::atomic<OracleMutation> g_mutation{OracleMutation::None};
}  // namespace

namespace testing {
void set_oracle_mutation(OracleMutation m) { g_mutation.store(m); }
OracleMutation oracle_mutation() { return g_mutation.load(); }
}  // namespace testing

const char* family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::PowDenom: return "pow-denom";
    case FamilyTag::AfNotF: return "af-not-f";
    case FamilyTag::NfNotAf: return "nf-not-af";
    case FamilyTag::AfNotNf: return "af-not-nf";
    case FamilyTag::FNotAa: return "f-not-aa";
    case FamilyTag::NaNotF: return "na-not-f";
    case FamilyTag::Grams: return "grams";
    case FamilyTag::LexCone: return "lexcone";
  }
  throw std::logic_error("unreachable family tag");
}

// ---------------------------------------------------------------------------
// BaseMonoid

bool BaseMonoid::contains(const Rat& q) const {
  switch (kind) {
    case Kind::Trivial:
      return q.is_zero();
    case Kind::RationalRayWithZero:
      return q.is_zero() || q >= 1;
    case Kind::PrimePowerCone: {
      if (q.is_negative()) return false;
      if (q.is_zero()) return true;
      Int d = q.den();
      while (d % p == 0) d /= p;
      return d == 1;
    }
  }
  return false;
}

Rat BaseMonoid::stream(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("stream index is 1-based");
  switch (kind) {
    case Kind::Trivial:
      throw std::invalid_argument("trivial base has no generator stream");
    case Kind::RationalRayWithZero:
      // 1, 3/2, 2, 5/2, ... : half-integers from 1 up
      return Rat(Int(n) + 1, 2);
    case Kind::PrimePowerCone: {
      Int d = 1;
      for (std::size_t i = 1; i < n; ++i) d *= p;
      return Rat(1, d);
    }
  }
  throw std::logic_error("unreachable base kind");
}

std::set<Int> BaseMonoid::finite_support() const {
  if (kind != Kind::PrimePowerCone)
    throw std::invalid_argument("base support is finite only for cones");
  return {p};
}

// ---------------------------------------------------------------------------
// Atom cache

struct Family::AtomCache {
  mutable std::mutex mutex;
  std::vector<TaggedAtom> atoms;
  std::map<Int, std::size_t> prime_to_index;
  // Pool bookkeeping for af-not-f / af-not-nf: primes of P_l generated so
  // far but not yet consumed by an atom, and the next 1-based pool slot.
  std::set<uint64_t> pool_available;
  std::size_t pool_next = 1;
};

TaggedAtom Family::make_atom_locked(std::size_t n) const {
  switch (tag_) {
    case FamilyTag::PowDenom:
      if (n != 1) throw std::out_of_range("single tagged atom");
      return {1, Rat(1, 2), 2};
    case FamilyTag::Grams: {
      Int p = nth_odd_prime(n);
      return {n, Rat(1, (Int(1) << n) * p), p};
    }
    case FamilyTag::NaNotF: {
      if (n == 1) return {1, Rat(1, 3), 3};
      std::size_t k = n - 1;
      Int o = nth_odd_gt1(k);
      Int p = nth_prime_gt3(k);
      if (o >= p)
        throw std::logic_error("odd numerator not below its prime");
      return {n, Rat(o, ell2(o) * p), p};
    }
    case FamilyTag::AfNotF: {
      Rat r = enumerate_dyadics_gt1(n);
      const Int& b = r.num();
      auto& avail = atoms_->pool_available;
      // Smallest not-yet-used pool prime exceeding the numerator.
      while (avail.empty() || Int(*avail.rbegin()) <= b)
        avail.insert(partition_primes(static_cast<int>(param_),
                                      atoms_->pool_next++));
      auto it = avail.upper_bound(b.convert_to<uint64_t>());
      Int p = *it;
      avail.erase(it);
      return {n, Rat(r.num(), r.den() * p), p};
    }
    case FamilyTag::AfNotNf: {
      Int pow = Int(1) << n;  // 2^n
      auto& avail = atoms_->pool_available;
      // Smallest not-yet-used pool prime not dividing 2^n - 1.
      for (;;) {
        for (auto it = avail.begin(); it != avail.end(); ++it) {
          if (pow % *it != 1) {
            Int p = *it;
            avail.erase(it);
            return {n, Rat(pow - 1, pow * p), p};
          }
        }
        avail.insert(partition_primes(static_cast<int>(param_),
                                      atoms_->pool_next++));
      }
    }
    default:
      throw std::invalid_argument(std::string(family_tag_name(tag_)) +
                                  " has no tagged atom stream");
  }
}

TaggedAtom Family::tagged_atom(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("atom index is 1-based");
  std::lock_guard<std::mutex> lock(atoms_->mutex);
  while (atoms_->atoms.size() < n) {
    TaggedAtom a = make_atom_locked(atoms_->atoms.size() + 1);
    atoms_->prime_to_index.emplace(a.private_prime, a.index);
    atoms_->atoms.push_back(std::move(a));
  }
  return atoms_->atoms[n - 1];
}

// ---------------------------------------------------------------------------
// Construction and grammar

Family Family::build(FamilyTag tag, long param) {
  Family f;
  f.tag_ = tag;
  f.param_ = param;
  f.atoms_ = std::make_shared<AtomCache>();
  switch (tag) {
    case FamilyTag::PowDenom:
      if (param < 3 || !is_prime(param))
        throw std::invalid_argument("pow-denom needs an odd prime p");
      f.base_ = {BaseMonoid::Kind::PrimePowerCone, Int(param)};
      break;
    case FamilyTag::NfNotAf:
      if (param < 7 || !is_prime(param))
        throw std::invalid_argument("nf-not-af needs a prime p >= 7");
      f.base_ = {BaseMonoid::Kind::PrimePowerCone, 2};
      break;
    case FamilyTag::AfNotF:
    case FamilyTag::AfNotNf:
      if (param < 1 || param > 30)
        throw std::invalid_argument("pool index l must be in [1, 30]");
      f.base_ = {BaseMonoid::Kind::PrimePowerCone, 2};
      break;
    case FamilyTag::NaNotF:
    case FamilyTag::Grams:
      if (param != 0) throw std::invalid_argument("family takes no parameter");
      f.base_ = {BaseMonoid::Kind::PrimePowerCone, 2};
      break;
    case FamilyTag::FNotAa:
      if (param != 0) throw std::invalid_argument("family takes no parameter");
      f.base_ = {BaseMonoid::Kind::RationalRayWithZero, 2};
      break;
    case FamilyTag::LexCone:
      if (param != 0) throw std::invalid_argument("family takes no parameter");
      f.base_ = {BaseMonoid::Kind::Trivial, 2};
      break;
  }
  return f;
}

namespace {

struct TagInfo {
  FamilyTag tag;
  const char* key;  // parameter key, or nullptr
};

TagInfo tag_info_from_name(std::string_view name) {
  if (name == "pow-denom") return {FamilyTag::PowDenom, "p"};
  if (name == "af-not-f") return {FamilyTag::AfNotF, "l"};
  if (name == "nf-not-af") return {FamilyTag::NfNotAf, "p"};
  if (name == "af-not-nf") return {FamilyTag::AfNotNf, "l"};
  if (name == "f-not-aa") return {FamilyTag::FNotAa, nullptr};
  if (name == "na-not-f") return {FamilyTag::NaNotF, nullptr};
  if (name == "grams") return {FamilyTag::Grams, nullptr};
  if (name == "lexcone") return {FamilyTag::LexCone, nullptr};
  throw std::invalid_argument("unknown family tag: " + std::string(name));
}

}  // namespace

Family Family::parse(std::string_view spec) {
  constexpr std::string_view kPrefix = "family:";
  if (spec.substr(0, kPrefix.size()) != kPrefix)
    throw std::invalid_argument("family spec must start with 'family:'");
  std::string_view rest = spec.substr(kPrefix.size());
  std::string_view name = rest;
  std::string_view args;
  if (auto brace = rest.find('{'); brace != std::string_view::npos) {
    if (rest.back() != '}')
      throw std::invalid_argument("unterminated parameter block");
    name = rest.substr(0, brace);
    args = rest.substr(brace + 1, rest.size() - brace - 2);
  }
  TagInfo info = tag_info_from_name(name);
  long param = 0;
  if (info.key == nullptr) {
    if (!args.empty())
      throw std::invalid_argument("family takes no parameter");
  } else {
    std::string key(info.key);
    if (args.substr(0, key.size() + 1) != key + "=")
      throw std::invalid_argument("expected parameter " + key + "=<value>");
    std::string value(args.substr(key.size() + 1));
    std::size_t pos = 0;
    param = std::stol(value, &pos);
    if (pos != value.size())
      throw std::invalid_argument("malformed parameter value: " + value);
  }
  return build(info.tag, param);
}

std::string Family::str() const {
  std::ostringstream os;
  os << "family:" << family_tag_name(tag_);
  TagInfo info = tag_info_from_name(family_tag_name(tag_));
  if (info.key != nullptr) os << '{' << info.key << '=' << param_ << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Membership oracles

MembershipResult Family::member(const Rat& q) const {
  switch (tag_) {
    case FamilyTag::LexCone:
      throw std::invalid_argument("lexcone elements are integer pairs");
    case FamilyTag::NfNotAf:
      return nf_not_af_member(q);
    case FamilyTag::FNotAa:
      return f_not_aa_member(q);
    default:
      return structured_member(q);
  }
}

// Valuation pinning: every denominator prime of q other than the base
// prime must be the private prime of some tagged atom, and the multiset
// coefficient of that atom in any representation is forced modulo its
// prime. Subtracting the forced multiples must land in the base monoid.
MembershipResult Family::structured_member(const Rat& q) const {
  if (q.is_negative()) return MembershipResult::nonmember("negative value");
  if (q.is_zero()) return MembershipResult::member({});
  const Int& pb = base_.p;
  Certificate cert;
  Rat r = q;
  for (const Int& f : prime_support(q)) {
    if (f == pb) continue;
    auto idx = private_prime_index(f);
    if (!idx)
      return MembershipResult::nonmember(
          "denominator prime " + f.str() + " is outside the prime support");
    Valuation v = padic_valuation(q, f);
    if (v.value < -1)
      return MembershipResult::nonmember(
          "valuation at " + f.str() + " is " + std::to_string(v.value) +
          " but every element has valuation >= -1");
    TaggedAtom a = tagged_atom(*idx);
    // Coefficient of atom a is pinned mod f: e * (a*f mod f) == q*f mod f.
    Int rq = residue_mod_p(q * Rat(f), f);
    Int ra = residue_mod_p(a.value * Rat(f), f);
    Int e = (rq * mod_inverse(ra, f)) % f;
    if (e < 0) e += f;
    cert.terms.push_back({a.value, e});
    r -= Rat(e) * a.value;
  }
  if (testing::oracle_mutation() == OracleMutation::AllowNegativeRemainder &&
      r.is_negative())
    r = -r;
  if (r.is_negative())
    return MembershipResult::nonmember(
        "forced atom multiples overshoot the value (remainder " + r.str() +
        ")");
  if (!base_.contains(r))
    return MembershipResult::nonmember("remainder " + r.str() +
                                       " lies outside the base monoid");
  if (r.is_positive()) {
    // Expand the base remainder c/pb^k as c copies of the stream value.
    cert.terms.push_back({Rat(1, r.den()), r.num()});
  }
  return MembershipResult::member(std::move(cert));
}

// Decomposes q = u/p + t/2 + F with u + t >= 0 copies of 1/p, t shifted
// coset generators, and a dyadic tail F (F > 0 forced when t >= 1). The
// residue of u mod p is pinned by the p-part of q, so the search is a
// short double loop.
MembershipResult Family::nf_not_af_member(const Rat& q) const {
  const Int p = Int(param_);
  if (q.is_negative()) return MembershipResult::nonmember("negative value");
  if (q.is_zero()) return MembershipResult::member({});
  for (const Int& f : prime_support(q))
    if (f != 2 && f != p)
      return MembershipResult::nonmember("denominator prime " + f.str() +
                                         " is outside the prime support");
  Valuation vp = padic_valuation(q, p);
  if (vp.value < -1)
    return MembershipResult::nonmember(
        "valuation at " + p.str() + " is " + std::to_string(vp.value) +
        " but every element has valuation >= -1");
  Int rho = 0;
  if (vp.value == -1) rho = residue_mod_p(q * Rat(p), p);
  const Rat coset_gap = Rat(1, 2) - Rat(1, p);  // (p-2)/(2p) > 0
  const Int t_max = floor_int(q / coset_gap);
  const bool mutated =
      testing::oracle_mutation() == OracleMutation::NfNotAfDropPositivity;
  for (Int t = 0; t <= t_max; ++t) {
    Rat rem_t = q - Rat(t, 2);
    // Smallest u >= -t congruent to rho mod p.
    Int m = (rho + t) / p;  // rho + t >= 0, so this is the floor
    Int u = rho - m * p;
    for (;; u += p) {
      Rat tail = rem_t - Rat(u, p);
      if (tail.is_negative()) break;
      if (t >= 1 && tail.is_zero() && !mutated) continue;
      // The congruence u == rho (mod p) makes the tail dyadic.
      Certificate cert;
      Int copies = u + t;
      if (copies > 0) cert.terms.push_back({Rat(1, p), copies});
      if (t == 0) {
        if (tail.is_positive()) cert.terms.push_back({tail, 1});
      } else if (tail.is_zero()) {
        cert.terms.push_back({Rat(1, 2) - Rat(1, p), t});
      } else {
        // Give each coset generator the same tiny dyadic excess d with
        // t*d <= tail/2, leaving a positive dyadic remainder.
        Int denom = 2;
        while (Rat(2 * t, denom) > tail) denom <<= 1;
        Rat d(1, denom);
        cert.terms.push_back({Rat(1, 2) - Rat(1, p) + d, t});
        Rat leftover = tail - Rat(t, denom);
        if (leftover.is_positive()) cert.terms.push_back({leftover, 1});
      }
      return MembershipResult::member(std::move(cert));
    }
  }
  return MembershipResult::nonmember(
      "no split into 1/" + p.str() + " copies, coset terms, and a dyadic tail");
}

MembershipResult Family::f_not_aa_member(const Rat& q) const {
  if (q.is_negative()) return MembershipResult::nonmember("negative value");
  if (q.is_zero()) return MembershipResult::member({});
  if (q >= 1 &&
      testing::oracle_mutation() != OracleMutation::FNotAaDropRay) {
    Certificate cert;
    cert.terms.push_back({q, 1});  // q itself is a defining generator
    return MembershipResult::member(std::move(cert));
  }
  // Below 1 only the unit-fraction atoms 1/p can contribute, and each
  // coefficient is pinned to its residue class in [1, p).
  if (q.den() % 2 == 0)
    return MembershipResult::nonmember(
        "values below 1 have odd denominator, got " + q.str());
  Certificate cert;
  Rat s;
  for (const Int& f : prime_support(q)) {
    Valuation v = padic_valuation(q, f);
    if (v.value < -1)
      return MembershipResult::nonmember(
          "valuation at " + f.str() + " is " + std::to_string(v.value) +
          " but unit-fraction sums have valuation >= -1");
    Int e = residue_mod_p(q * Rat(f), f);
    cert.terms.push_back({Rat(1, f), e});
    s += Rat(e, f);
  }
  if (s == q) return MembershipResult::member(std::move(cert));
  return MembershipResult::nonmember(
      "pinned unit-fraction part sums to " + s.str() + ", not " + q.str());
}

bool Family::atomic_part_member(const Rat& q) const {
  if (tag_ != FamilyTag::FNotAa)
    throw std::invalid_argument("atomic part is specific to f-not-aa");
  if (q.is_negative()) return false;
  if (q.is_zero()) return true;
  if (q.den() % 2 == 0) return false;
  Rat s;
  for (const Int& f : prime_support(q)) {
    if (f == 2) continue;
    if (padic_valuation(q, f).value < -1) return false;
    Int e = residue_mod_p(q * Rat(f), f);
    s += Rat(e, f);
  }
  Rat t = q - s;
  return !t.is_negative() && t.is_integer();
}

MembershipResult Family::divides(const Rat& a, const Rat& b) const {
  if (!member(a).is_member())
    throw std::invalid_argument("divisor " + a.str() + " is not a member");
  if (!member(b).is_member())
    throw std::invalid_argument("dividend " + b.str() + " is not a member");
  return member(b - a);
}

// ---------------------------------------------------------------------------
// Atom streams and generator data

std::vector<Rat> Family::claimed_atoms(std::size_t n) const {
  std::vector<Rat> out;
  switch (tag_) {
    case FamilyTag::LexCone:
      throw std::invalid_argument("lexcone atoms are integer pairs");
    case FamilyTag::PowDenom:
      if (n >= 1) out.push_back(Rat(1, 2));
      break;
    case FamilyTag::NfNotAf:
      if (n >= 1) out.push_back(Rat(1, param_));
      break;
    case FamilyTag::FNotAa:
      for (std::size_t k = 1; k <= n; ++k)
        out.push_back(Rat(1, nth_odd_prime(k)));
      break;
    default:
      for (std::size_t k = 1; k <= n; ++k)
        out.push_back(tagged_atom(k).value);
      break;
  }
  return out;
}

std::optional<std::size_t> Family::private_prime_index(const Int& f) const {
  switch (tag_) {
    case FamilyTag::PowDenom:
      if (f == 2) return 1;
      return std::nullopt;
    case FamilyTag::NfNotAf:
      if (f == param_) return 1;
      return std::nullopt;
    case FamilyTag::Grams:
    case FamilyTag::FNotAa: {
      if (f <= 2 || f > 0xffffffffULL) return std::nullopt;
      std::size_t i = odd_prime_index(f.convert_to<uint64_t>());
      if (i == 0) return std::nullopt;
      return i;
    }
    case FamilyTag::NaNotF: {
      if (f == 3) return 1;
      if (f <= 3 || f > 0xffffffffULL) return std::nullopt;
      std::size_t i = odd_prime_index(f.convert_to<uint64_t>());
      if (i == 0) return std::nullopt;
      return i;  // 1/3 owns slot 1; prime > 3 at odd-prime index i owns slot i
    }
    case FamilyTag::AfNotF: {
      if (f <= 2 || f > 0xffffffffULL || !is_prime(f)) return std::nullopt;
      uint64_t fp = f.convert_to<uint64_t>();
      if (!in_partition_pool(static_cast<int>(param_), fp))
        return std::nullopt;
      std::lock_guard<std::mutex> lock(atoms_->mutex);
      if (auto it = atoms_->prime_to_index.find(f);
          it != atoms_->prime_to_index.end())
        return it->second;
      // f is chosen at step n only when the n-th dyadic numerator is
      // below f; those steps are finitely many, so generate through them
      // and read the verdict off the prime-to-index map.
      // Dyadics > 1 with numerator below f: the integers 2 .. f-1 plus,
      // for each odd b in [3, f), the values b/2^k with 1 <= 2^k < b.
      Int remaining = f - 2;
      for (Int b = 3; b < f; b += 2)
        remaining += padic_valuation_int(ell2(b), 2);
      std::size_t n = atoms_->atoms.size();
      for (const TaggedAtom& a : atoms_->atoms)
        if (a.value.num() < f) --remaining;
      while (remaining > 0) {
        TaggedAtom a = make_atom_locked(++n);
        atoms_->prime_to_index.emplace(a.private_prime, a.index);
        if (a.value.num() < f) --remaining;
        bool hit = a.private_prime == f;
        atoms_->atoms.push_back(std::move(a));
        if (hit) return n;
      }
      return std::nullopt;
    }
    case FamilyTag::AfNotNf: {
      if (f <= 2 || f > 0xffffffffULL || !is_prime(f)) return std::nullopt;
      uint64_t fp = f.convert_to<uint64_t>();
      int l = static_cast<int>(param_);
      if (!in_partition_pool(l, fp)) return std::nullopt;
      std::lock_guard<std::mutex> lock(atoms_->mutex);
      if (auto it = atoms_->prime_to_index.find(f);
          it != atoms_->prime_to_index.end())
        return it->second;
      // Pool primes are consumed in near order: the smallest unused pool
      // prime divides at most one of two consecutive 2^n - 1, so it is
      // taken within two steps of becoming minimal. Every pool prime is
      // used; generate until f shows up.
      std::size_t n = atoms_->atoms.size();
      std::size_t pos = (odd_prime_index(fp) >> (l - 1)) / 2 + 1;
      std::size_t cap = 2 * pos + 64;
      while (n < cap) {
        TaggedAtom a = make_atom_locked(++n);
        atoms_->prime_to_index.emplace(a.private_prime, a.index);
        bool hit = a.private_prime == f;
        atoms_->atoms.push_back(std::move(a));
        if (hit) return n;
      }
      throw std::runtime_error("pool prime " + f.str() +
                               " not consumed within the expected window");
    }
    case FamilyTag::LexCone:
      throw std::invalid_argument("lexcone has no private primes");
  }
  return std::nullopt;
}

FgPresentation Family::truncate(std::size_t depth) const {
  if (depth == 0) throw std::invalid_argument("truncation depth must be >= 1");
  std::vector<Rat> gens;
  switch (tag_) {
    case FamilyTag::LexCone:
      throw std::invalid_argument("lexcone is not a Puiseux monoid");
    case FamilyTag::PowDenom:
      for (std::size_t k = 1; k <= depth; ++k) gens.push_back(base_.stream(k));
      gens.push_back(Rat(1, 2));
      break;
    case FamilyTag::NfNotAf: {
      Rat shift = Rat(1, 2) - Rat(1, param_);
      gens.push_back(Rat(1, param_));
      for (std::size_t k = 1; k <= depth; ++k) {
        gens.push_back(base_.stream(k));
        gens.push_back(shift + base_.stream(k));
      }
      break;
    }
    case FamilyTag::FNotAa:
      for (std::size_t k = 1; k <= depth; ++k) {
        gens.push_back(base_.stream(k));
        gens.push_back(Rat(1, nth_odd_prime(k)));
      }
      break;
    default:
      for (std::size_t k = 1; k <= depth; ++k) {
        gens.push_back(base_.stream(k));
        gens.push_back(tagged_atom(k).value);
      }
      break;
  }
  return FgPresentation(std::move(gens));
}

SupportSet Family::support_descriptor() const {
  switch (tag_) {
    case FamilyTag::PowDenom:
      return SupportSet::finite({Int(2), Int(param_)});
    case FamilyTag::NfNotAf:
      return SupportSet::finite({Int(2), Int(param_)});
    case FamilyTag::AfNotF:
    case FamilyTag::AfNotNf:
      return SupportSet::cofinal_in_pool(static_cast<int>(param_), {Int(2)});
    case FamilyTag::FNotAa:
    case FamilyTag::NaNotF:
    case FamilyTag::Grams:
      return SupportSet::all_primes();
    case FamilyTag::LexCone:
      throw std::invalid_argument("lexcone has no prime support");
  }
  throw std::logic_error("unreachable family tag");
}

InfValuation Family::inf_vp(const Int& p) const {
  switch (tag_) {
    case FamilyTag::PowDenom:
      if (p == param_) return InfValuation::neg_inf();
      if (p == 2) return InfValuation::finite(-1);
      return InfValuation::finite(0);
    case FamilyTag::NfNotAf:
      if (p == 2) return InfValuation::neg_inf();
      if (p == param_) return InfValuation::finite(-1);
      return InfValuation::finite(0);
    case FamilyTag::Grams:
    case FamilyTag::NaNotF:
      if (p == 2) return InfValuation::neg_inf();
      if (p > 2 && is_prime(p)) return InfValuation::finite(-1);
      return InfValuation::finite(0);
    case FamilyTag::AfNotF:
    case FamilyTag::AfNotNf:
      if (p == 2) return InfValuation::neg_inf();
      if (private_prime_index(p)) return InfValuation::finite(-1);
      return InfValuation::finite(0);
    case FamilyTag::FNotAa:
      // Q>=1 contains 1 + 1/p^k for every prime p and every k.
      return InfValuation::neg_inf();
    case FamilyTag::LexCone:
      throw std::invalid_argument("lexcone has no valuations");
  }
  throw std::logic_error("unreachable family tag");
}

// ---------------------------------------------------------------------------
// Lex cone

bool Family::lexcone_member(const Int& x, const Int& y) {
  return y > 0 || (y == 0 && x >= 0);
}

bool Family::lexcone_divides(const std::pair<Int, Int>& a,
                             const std::pair<Int, Int>& b) {
  if (!lexcone_member(a.first, a.second) ||
      !lexcone_member(b.first, b.second))
    throw std::invalid_argument("lexcone divisibility needs cone members");
  return lexcone_member(b.first - a.first, b.second - a.second);
}

// ---------------------------------------------------------------------------
// Atom checks

AtomCheck is_atom_truncated(const Family& family, const Rat& candidate,
                            std::size_t depth, const FgSearchOptions& opts) {
  if (!candidate.is_positive())
    throw std::invalid_argument("atom candidate must be positive");
  FgPresentation trunc = family.truncate(depth);
  // candidate = x + y with nonzero members x, y iff some generator h of
  // the truncation fits strictly below the candidate with member rest.
  for (const Rat& h : trunc.generators()) {
    if (h >= candidate) break;  // generators are sorted ascending
    MembershipResult rest = trunc.member(candidate - h, opts);
    if (rest.is_member()) return {false, depth, h, candidate - h};
    if (rest.is_unknown())
      throw std::runtime_error(
          "truncated atom check exceeded its search budget at depth " +
          std::to_string(depth));
  }
  return {true, depth, {}, {}};
}

std::pair<Rat, Rat> refute_atom(const Family& family, const Rat& g) {
  if (!family.member(g).is_member())
    throw std::invalid_argument(g.str() + " is not a member");
  std::vector<Rat> candidates;
  Rat half = g * Rat(1, 2);
  candidates.push_back(half);
  candidates.push_back(g * Rat(1, 3));
  if (family.tag() == FamilyTag::NfNotAf) {
    // Shifted coset generator: halve only its dyadic excess.
    Rat shift = Rat(1, 2) - Rat(1, family.param());
    Rat excess = g - shift;
    if (excess.is_positive()) candidates.push_back(shift + excess * Rat(1, 2));
  }
  for (const Rat& a : family.claimed_atoms(8))
    if (a < g) candidates.push_back(a);
  for (const Rat& x : candidates) {
    Rat y = g - x;
    if (!x.is_positive() || !y.is_positive()) continue;
    if (family.member(x).is_member() && family.member(y).is_member())
      return {x, y};
  }
  throw std::runtime_error("no decomposition found for " + g.str());
}

}  // namespace puiseux
