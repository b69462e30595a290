#ifndef MDIM_DIHEDRAL_HPP
#define MDIM_DIHEDRAL_HPP

namespace mdim {

/// Element of the dihedral group of order 2n, written a^rot or a^rot * b.
/// Multiplication follows from the relations a^n = b^2 = 1, b*a = a^(n-1)*b:
///   (i,f) * (j,g) = ((i + (-1)^f * j) mod n, f xor g).
struct DihedralElement {
    int rot = 0;   // exponent of a, in [0, n)
    bool refl = false;

    static DihedralElement identity() { return {0, false}; }

    static DihedralElement rotation(int i, int n) { return {mod(i, n), false}; }
    static DihedralElement reflection(int i, int n) { return {mod(i, n), true}; }

    DihedralElement multiply(const DihedralElement& other, int n) const {
        int j = refl ? -other.rot : other.rot;
        return {mod(rot + j, n), refl != other.refl};
    }

    DihedralElement inverse(int n) const {
        if (refl) return *this;
        return {mod(-rot, n), false};
    }

    bool operator==(const DihedralElement&) const = default;

private:
    static int mod(int x, int n) { return ((x % n) + n) % n; }
};

}  // namespace mdim

#endif
