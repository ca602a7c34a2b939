#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypercat {

/// Index origin of a type vector. Hyper-Catalan types m = [m2, m3, ...]
/// start at two (m2 counts triangles); Tutrank types k = [k1, k2, ...]
/// start at one (k1 counts two-gons).
enum class Base : unsigned { one = 1, two = 2 };

/// Vertex/edge/face counts of the polygon subdivisions indexed by a
/// type vector. Always satisfies V - E + F = 1.
struct EulerStats {
    unsigned vertices = 0;
    unsigned edges = 0;
    unsigned faces = 0;

    bool operator==(const EulerStats&) const = default;
};

/// Canonical face-count signature of a subdivided polygon: entry i counts
/// faces of size first_index()+i+1. Trailing zeros are stripped, so [1,0]
/// and [1] denote the same type; the empty vector is the null type.
class TypeVector {
  public:
    TypeVector() = default;
    explicit TypeVector(Base base) : base_(base) {}

    /// Canonicalizes a raw count list. Throws InvalidTypeVector on a
    /// negative entry.
    static TypeVector normalize(const std::vector<long long>& raw, Base base);

    /// Already-canonical counts; strips trailing zeros if present.
    static TypeVector from_parts(std::vector<unsigned> parts, Base base);

    /// Parses the text encoding: comma-separated naturals, "" for the
    /// null vector.
    static TypeVector parse(std::string_view text, Base base);

    const std::vector<unsigned>& parts() const { return parts_; }
    Base base() const { return base_; }
    unsigned first_index() const { return static_cast<unsigned>(base_); }

    bool is_null() const { return parts_.empty(); }

    /// Count at true index k (e.g. m_3), zero beyond the stored parts.
    unsigned count_at(unsigned index) const;

    /// Highest index with a nonzero count; 0 for the null vector.
    unsigned degree() const;

    /// Total face count (sum of entries).
    unsigned face_count() const;

    EulerStats stats() const;

    /// Comma-separated text encoding, "" for the null vector.
    std::string to_string() const;

    bool operator==(const TypeVector&) const = default;

  private:
    std::vector<unsigned> parts_;
    Base base_ = Base::two;
};

/// Enumeration / serialization order: base, then face count, then
/// comparing counts from the highest index down. Strict weak ordering.
bool type_less(const TypeVector& a, const TypeVector& b);

struct TypeLess {
    bool operator()(const TypeVector& a, const TypeVector& b) const {
        return type_less(a, b);
    }
};

/// Componentwise sum; the index of every array is additive under gluing.
/// Throws BaseMismatch when the bases differ.
TypeVector combine(const TypeVector& a, const TypeVector& b);

/// All canonical vectors with face count <= max_faces and degree
/// <= max_degree (and first entry <= max_k1 when given), in type_less
/// order. max_degree must be >= first index of the base.
std::vector<TypeVector> enumerate_types(unsigned max_faces, unsigned max_degree,
                                        Base base,
                                        std::optional<unsigned> max_k1 = {});

} // namespace hypercat
