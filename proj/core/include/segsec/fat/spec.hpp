#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "segsec/fat/scheme.hpp"
#include "segsec/la/multi_prime.hpp"

namespace segsec::fat {

struct PointSpec {
  enum class Kind { Coordinate, Generic, OnSubspace, Explicit };
  Kind kind = Kind::Generic;
  unsigned index = 0;                // Coordinate: e_index
  std::string subspace;              // OnSubspace: registry id
  std::vector<std::int64_t> coords;  // Explicit
  unsigned mult = 1;
  bool operator==(const PointSpec&) const = default;
};

struct SpanEntry {
  enum class Kind { Coordinate, Point, Generic, Coords };
  Kind kind = Kind::Generic;
  unsigned index = 0;                // Coordinate: e_index; Point: points[index]
  std::vector<std::int64_t> coords;  // Coords
  bool operator==(const SpanEntry&) const = default;
};

/// A named linear subspace. It joins the scheme only when `component` is set.
struct SubspaceSpec {
  std::string id;
  std::vector<SpanEntry> span;
  bool component = false;
  unsigned mult = 1;
  bool operator==(const SubspaceSpec&) const = default;
};

/// Symbolic description of a scheme in P^ambient; generic choices are made at instantiation.
struct SchemeSpec {
  unsigned ambient = 1;
  unsigned degree = 1;
  std::vector<PointSpec> points;
  std::vector<SubspaceSpec> subspaces;
  bool operator==(const SchemeSpec&) const = default;

  SchemeSpec& coordinate(unsigned index, unsigned mult);
  SchemeSpec& generic(unsigned mult, std::size_t count = 1);
  SchemeSpec& on_subspace(const std::string& id, unsigned mult, std::size_t count = 1);
  SchemeSpec& subspace(SubspaceSpec s);
};

/// Checks references, ranges and ids. Throws SpecParseError naming the offending field.
void validate(const SchemeSpec& spec);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
[[nodiscard]] std::string to_json(const SchemeSpec& spec);
/// Throws SpecParseError with line/column for syntax errors and a field path otherwise.
[[nodiscard]] SchemeSpec parse_spec(const std::string& text);
[[nodiscard]] SchemeSpec load_spec(const std::string& path);

struct Instance {
  Scheme scheme;
  std::map<std::string, PrimeMatrix> registry;  // subspace id -> spanning points
  std::vector<std::vector<Elem>> points;        // resolved coordinates of spec.points
};

/// Chooses every generic object from rng. Generic points are uniform in P^n; points on a
/// subspace are random combinations of its spanning points. Throws DegenerateSpan if a span
/// is dependent.
[[nodiscard]] Instance instantiate(const SchemeSpec& spec, const PrimeField& f, la::Rng& rng);

struct SampledDim {
  std::size_t value = 0;             // minimum over cells
  std::vector<std::size_t> cells;    // per (prime, trial), prime-major
  std::size_t monomials = 0;         // C(t+n, n)
  std::size_t columns = 0;           // after the coordinate fast path (first cell)
  std::size_t rows = 0;              // conditions (first cell)
  std::size_t rank = 0;              // first cell
};

/// dim (I_X)_t minimised over sampled instances: the generic Hilbert function is the minimum.
[[nodiscard]] SampledDim ideal_dim(const SchemeSpec& spec, unsigned t, const la::SamplingConfig& cfg);

/// W = (n-1)Q_1 + ... + (n-1)Q_n + 2P_1 + ... + 2P_s, degree n. Q_i = e_i; e_0 stays free.
[[nodiscard]] SchemeSpec segre_to_fatpoints(unsigned n, unsigned s);

}  // namespace segsec::fat
