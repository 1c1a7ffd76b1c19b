#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braceforge {

// Structured failure kinds reported by validators. A ValidationError always
// names the first failing axiom and carries the lexicographically least
// witness for table-level failures.
enum class Fail {
  not_a_group_add,
  not_a_group_mul,
  identity_mismatch,
  distributivity,
  identity_failure,
  not_an_ideal,
  element_not_generated,
  non_permutation,
  braid,
  r_not_bijective,
  bad_table,
};

inline const char* fail_name(Fail f)
{
  switch (f) {
  case Fail::not_a_group_add: return "NotAGroup(add)";
  case Fail::not_a_group_mul: return "NotAGroup(mul)";
  case Fail::identity_mismatch: return "IdentityMismatch";
  case Fail::distributivity: return "DistributivityFailure";
  case Fail::identity_failure: return "IdentityFailure";
  case Fail::not_an_ideal: return "NotAnIdeal";
  case Fail::element_not_generated: return "ElementNotGenerated";
  case Fail::non_permutation: return "NonPermutation";
  case Fail::braid: return "BraidFailure";
  case Fail::r_not_bijective: return "RNotBijective";
  case Fail::bad_table: return "BadTable";
  }
  return "Unknown";
}

class ValidationError : public std::runtime_error {
public:
  ValidationError(Fail kind, const std::string& msg,
                  std::array<int, 3> witness = {-1, -1, -1})
      : std::runtime_error(std::string(fail_name(kind)) + ": " + msg),
        _kind(kind),
        _witness(witness)
  {}

  Fail kind() const { return _kind; }
  const std::array<int, 3>& witness() const { return _witness; }

private:
  Fail _kind;
  std::array<int, 3> _witness;
};

// Thrown when an operation is asked to run above its configured order cap.
class CapError : public std::runtime_error {
public:
  explicit CapError(const std::string& msg)
      : std::runtime_error("OrderCapExceeded: " + msg)
  {}
};

// Thrown on malformed input documents (schema, ranges, shapes).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg)
      : std::runtime_error("ParseError: " + msg)
  {}
};

// Signals a broken internal invariant, never bad user input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg)
      : std::logic_error("internal consistency failure: " + msg)
  {}
};

// Subset of a fixed carrier {0..n-1}, stored as a bit set. Used for
// subgroups, ideals and every other member-set computed by the library.
class IndexSet {
public:
  IndexSet() : _n(0) {}

  explicit IndexSet(int n) : _n(n), _bits((n + 63) / 64, 0) {}

  static IndexSet full(int n)
  {
    IndexSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  static IndexSet of(int n, std::initializer_list<int> elems)
  {
    IndexSet s(n);
    for (int e : elems) s.set(e);
    return s;
  }

  static IndexSet of(int n, const std::vector<int>& elems)
  {
    IndexSet s(n);
    for (int e : elems) s.set(e);
    return s;
  }

  int universe() const { return _n; }

  bool test(int i) const { return (_bits[i >> 6] >> (i & 63)) & 1; }

  void set(int i) { _bits[i >> 6] |= uint64_t(1) << (i & 63); }

  void reset(int i) { _bits[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int size() const
  {
    int c = 0;
    for (uint64_t w : _bits) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const
  {
    for (uint64_t w : _bits)
      if (w) return false;
    return true;
  }

  std::vector<int> members() const
  {
    std::vector<int> out;
    out.reserve(size());
    for (int i = 0; i < _n; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  IndexSet& operator&=(const IndexSet& o)
  {
    for (size_t i = 0; i < _bits.size(); ++i) _bits[i] &= o._bits[i];
    return *this;
  }

  IndexSet& operator|=(const IndexSet& o)
  {
    for (size_t i = 0; i < _bits.size(); ++i) _bits[i] |= o._bits[i];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

  bool contains(const IndexSet& o) const
  {
    for (size_t i = 0; i < _bits.size(); ++i)
      if (o._bits[i] & ~_bits[i]) return false;
    return true;
  }

  bool operator==(const IndexSet& o) const
  {
    return _n == o._n && _bits == o._bits;
  }

  bool operator!=(const IndexSet& o) const { return !(*this == o); }

  // Order by size, then by member list; gives the deterministic lattice order.
  bool operator<(const IndexSet& o) const
  {
    if (size() != o.size()) return size() < o.size();
    return members() < o.members();
  }

private:
  int _n;
  std::vector<uint64_t> _bits;
};

}  // namespace braceforge
