#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace cadom {

using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  EmptyModel,
  DegenerateArc,
  PreconditionViolated,
  PlacementConflict,
  UnknownId,
  TooLarge,
  InvalidSpec,
  KindMismatch,
  WeightSignViolation,
  MappingViolated,
  InconsistentMapping,
  ParseError,
  Internal,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Exact rational extended with a +infinity top element.
class ExtendedWeight {
 public:
  ExtendedWeight() : inf_(false), v_(0) {}
  ExtendedWeight(long x) : inf_(false), v_(x) {}  // NOLINT(google-explicit-constructor)
  explicit ExtendedWeight(Rational v) : inf_(false), v_(std::move(v)) {}
  static ExtendedWeight infinity() {
    ExtendedWeight w;
    w.inf_ = true;
    return w;
  }

  bool is_infinite() const { return inf_; }
  const Rational& value() const {
    if (inf_) throw Error(ErrorCode::Internal, "value() on infinite weight");
    return v_;
  }

  ExtendedWeight& operator+=(const ExtendedWeight& o) {
    if (o.inf_) inf_ = true;
    if (!inf_) v_ += o.v_;
    return *this;
  }
  friend ExtendedWeight operator+(ExtendedWeight a, const ExtendedWeight& b) {
    a += b;
    return a;
  }
  friend ExtendedWeight operator-(const ExtendedWeight& a, const ExtendedWeight& b) {
    if (b.inf_) throw Error(ErrorCode::Internal, "subtracting infinity");
    if (a.inf_) return a;
    return ExtendedWeight(a.v_ - b.v_);
  }
  friend bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtendedWeight& a, const ExtendedWeight& b) { return !(a == b); }
  friend bool operator<(const ExtendedWeight& a, const ExtendedWeight& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtendedWeight& a, const ExtendedWeight& b) { return !(b < a); }
  friend bool operator>(const ExtendedWeight& a, const ExtendedWeight& b) { return b < a; }
  friend bool operator>=(const ExtendedWeight& a, const ExtendedWeight& b) { return !(a < b); }

  bool is_negative() const { return !inf_ && v_ < 0; }

  // Canonical "p/q" in lowest terms, or "inf".
  std::string str() const;

 private:
  bool inf_;
  Rational v_;
};

std::string rational_str(const Rational& r);

enum class WeightKind { VERTEX, EDGE };

// Weights for vertices or for edges (keyed by unordered vertex pair).
// Missing entries default to 1/1.
class WeightMap {
 public:
  explicit WeightMap(WeightKind kind) : kind_(kind) {}

  WeightKind kind() const { return kind_; }

  void set_vertex(int v, ExtendedWeight w) {
    require(WeightKind::VERTEX);
    vertex_[v] = std::move(w);
  }
  void set_edge(int u, int v, ExtendedWeight w) {
    require(WeightKind::EDGE);
    edge_[key(u, v)] = std::move(w);
  }
  ExtendedWeight vertex(int v) const {
    require(WeightKind::VERTEX);
    auto it = vertex_.find(v);
    return it == vertex_.end() ? ExtendedWeight(1) : it->second;
  }
  ExtendedWeight edge(int u, int v) const {
    require(WeightKind::EDGE);
    auto it = edge_.find(key(u, v));
    return it == edge_.end() ? ExtendedWeight(1) : it->second;
  }
  const std::map<int, ExtendedWeight>& vertex_entries() const { return vertex_; }
  const std::map<std::pair<int, int>, ExtendedWeight>& edge_entries() const { return edge_; }

 private:
  static std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }
  void require(WeightKind k) const {
    if (kind_ != k) throw Error(ErrorCode::KindMismatch, "weight map kind mismatch");
  }
  WeightKind kind_;
  std::map<int, ExtendedWeight> vertex_;
  std::map<std::pair<int, int>, ExtendedWeight> edge_;
};

}  // namespace cadom
