#pragma once

#include <map>
#include <optional>
#include <string>

#include "hypercat/numbers.hpp"
#include "hypercat/type_vector.hpp"

namespace hypercat {

/// Truncation region of a series. Faces and degree are always bounded;
/// the optional caps restrict the first entry (base one only) or the
/// Euler statistics V-2 / E-1. Every cap is additive under combine, so
/// truncated products are exact on the retained terms.
struct SeriesBounds {
    unsigned max_faces = 0;
    unsigned max_degree = 2;
    Base base = Base::two;
    std::optional<unsigned> max_k1;
    std::optional<unsigned> max_vertices; // cap on V - 2
    std::optional<unsigned> max_edges;    // cap on E - 1

    bool contains(const TypeVector& m) const;

    /// Intersection of two regions over the same base.
    /// Throws BaseMismatch otherwise.
    SeriesBounds meet(const SeriesBounds& other) const;

    bool operator==(const SeriesBounds&) const = default;
};

/// Sparse formal power series over exact rationals, indexed by canonical
/// type vectors inside a truncation region. Zero coefficients are never
/// stored; keys iterate in enumeration order.
class TruncatedSeries {
  public:
    using TermMap = std::map<TypeVector, BigRat, TypeLess>;

    explicit TruncatedSeries(SeriesBounds bounds) : bounds_(std::move(bounds)) {}

    static TruncatedSeries constant(const BigRat& value, SeriesBounds bounds);

    /// The single-variable series t_index with coefficient one.
    static TruncatedSeries variable(unsigned index, SeriesBounds bounds);

    const SeriesBounds& bounds() const { return bounds_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Inserts or erases a term. Out-of-bounds keys are dropped silently;
    /// truncation is part of the ring's contract.
    void set(const TypeVector& key, BigRat value);

    /// Stored coefficient, or zero inside the bounds.
    /// Throws OutOfTruncation when the key lies outside.
    const BigRat& coefficient(const TypeVector& key) const;

    /// The homogeneous part with face count f.
    TruncatedSeries face_layer(unsigned f) const;

    /// Same terms re-truncated to a different region (same base).
    TruncatedSeries with_bounds(SeriesBounds bounds) const;

    bool operator==(const TruncatedSeries&) const = default;

  private:
    SeriesBounds bounds_;
    TermMap terms_;
};

/// Coefficientwise sum; result bounds are the meet of the operands'.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product; keys combine componentwise and terms outside the met
/// bounds are dropped. Exact on retained terms because every bound is
/// additive under combine.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries scale(const TruncatedSeries& a, const BigRat& factor);

/// a^r by binary exponentiation; r = 0 gives the constant one.
TruncatedSeries power(const TruncatedSeries& a, unsigned r);

/// The hyper-Catalan generating series: fixed point of
///   S = 1 + t2 S^2 + t3 S^3 + ... + tD S^D
/// starting from 1. Each substitution settles one more face layer, so
/// max_faces iterations reach the fixed point within bounds.
TruncatedSeries solve_S(const SeriesBounds& bounds);
TruncatedSeries solve_S(unsigned max_faces, unsigned max_degree);

/// The Tutrank generating series: fixed point of
///   T = 1 + t1 T + t2 T^2 + ... + tD T^D
/// under base-one bounds (max_k1 caps the two-gon count).
TruncatedSeries solve_T(const SeriesBounds& bounds);
TruncatedSeries solve_T(unsigned max_faces, unsigned max_degree, unsigned max_k1);

/// Exact quotient numerator / denominator where the denominator is
/// homogeneous of face degree one (a sum of c_k t_k) and the numerator
/// has no face-zero layer. Solved face layer by face layer; quotient
/// layer f consumes numerator layer f+1, so the result loses one face
/// (and one k1, in base one) of truncation. Throws NotDivisible on a
/// nonzero remainder at any layer.
TruncatedSeries divide_by_layer1(const TruncatedSeries& numerator,
                                 const TruncatedSeries& denominator);

/// Free-function spelling of TruncatedSeries::coefficient.
const BigRat& coefficient(const TruncatedSeries& s, const TypeVector& m);

/// s - 1 - sum_{k=2}^{D} t_k s^k, truncated to s's own bounds. Zero on
/// every retained face layer exactly when s is the S fixed point there.
TruncatedSeries residual_S(const TruncatedSeries& s);

/// Base-one analogue with the t1 term included.
TruncatedSeries residual_T(const TruncatedSeries& s);

/// JSON encoding: bounds metadata plus a "terms" object mapping the type
/// text encoding to the coefficient as a (reduced) integer or "num/den"
/// string, keys in enumeration order.
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(std::string_view text);

} // namespace hypercat
