#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "latnorm/group.hpp"
#include "latnorm/zm.hpp"

namespace latnorm {

/// Z_n with table[i][j] = (i+j) mod n; 1 <= n <= 512.
Group make_cyclic(int n);

/// Dihedral group of the given (even) order 2m >= 4. Rotations occupy
/// indices 0..m-1, reflections m..2m-1.
Group make_dihedral(int size);

/// Generalized quaternion group Q_{2^k}; size must be a power of two >= 8.
/// The defining relations a^{2^{k-1}} = 1, b^2 = a^{2^{k-2}}, b^-1 a b = a^-1
/// are asserted against the built table.
Group make_quaternion(int size);

/// ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>. Element (x, y) encodes
/// b^x a^y at index x*m + y; the product rule
/// (x1,y1)*(x2,y2) = ((x1+x2) mod n, (y1*r^x2 + y2) mod m) is asserted against
/// the defining relations after construction. Requires a valid triple, mn <= 512.
Group make_zm(long long m, long long n, long long r);
Group make_zm(const ZmTriple& t);

/// Alternating group on n points, 3 <= n <= 5; even permutations enumerated
/// in lexicographic order.
Group make_alternating(int n);

/// Symmetric group on n points, 2 <= n <= 5; permutations in lexicographic order.
Group make_symmetric(int n);

/// Component-wise product on pairs, index = a*B.order + b; |A|*|B| <= 512.
Group direct_product(const Group& a, const Group& b);

/// A parsed group-spec expression: one or more atoms combined by the
/// direct-product combinator "x". Grammar (whitespace-insensitive):
///   atom := "Z"int | "D"int | "Q"int | "A"int | "S"int | "ZM(" int "," int "," int ")"
///   expr := atom ("x" atom)*
/// Parenthesized parameters like "Z(12)" are also accepted. Parsing validates
/// every atom's parameter conditions and the <= 512 total-order bound.
class GroupSpec {
public:
    struct Atom {
        enum class Kind { cyclic, dihedral, quaternion, alternating, symmetric, zm };
        Kind kind;
        long long param = 0;  // order for Z/D/Q, degree for A/S
        ZmTriple zm;          // set when kind == zm

        long long order() const;
        std::string text() const;
    };

    explicit GroupSpec(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    long long order() const;
    std::string normalized() const;
    bool is_single_atom(Atom::Kind kind) const {
        return atoms_.size() == 1 && atoms_[0].kind == kind;
    }

    /// Materializes the group; the label is the normalized spec text.
    Group build() const;

private:
    std::vector<Atom> atoms_;
};

/// Parses the grammar above; throws std::invalid_argument with the offending
/// position on syntax errors and with the violated condition on bad parameters.
GroupSpec parse_group_spec(std::string_view text);

/// Reads a Cayley table in the text format: first the order n, then n rows of
/// n element indices in 0..n-1 (row g lists g*h for h = 0..n-1). Blank lines
/// and "#" comments are ignored. The identity may sit anywhere; the loaded
/// group is relabeled so it lands at index 0, then fully validated.
Group load_cayley_table(const std::string& path);
Group load_cayley_table(std::istream& in, const std::string& label);

}  // namespace latnorm
