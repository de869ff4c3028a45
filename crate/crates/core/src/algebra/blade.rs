//! Basis blades as bitmasks over generator indices.
//!
//! Generator `i` squares to `+1` for `i < p` and to `-1` for `p <= i < p+q`.
//! A blade mask is the product of its generators in ascending index order;
//! the sign of any blade product is transposition parity times metric signs.

use std::fmt;

pub const MAX_DIM: u32 = 12;

/// Metric signature of a Clifford algebra Cl(p,q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: u32,
    pub q: u32,
}

impl Signature {
    pub const fn new(p: u32, q: u32) -> Self {
        assert!(p + q <= MAX_DIM, "dimension above implementation bound");
        Signature { p, q }
    }

    pub const fn dim(&self) -> u32 {
        self.p + self.q
    }

    /// Square of generator `i`: `+1` or `-1`.
    pub fn generator_square(&self, i: u32) -> i8 {
        assert!(i < self.dim(), "generator index out of range");
        if i < self.p {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

pub const CL30: Signature = Signature { p: 3, q: 0 };
pub const CL13: Signature = Signature { p: 1, q: 3 };
pub const CL41: Signature = Signature { p: 4, q: 1 };

pub type BladeMask = u16;

pub fn grade(mask: BladeMask) -> u32 {
    mask.count_ones()
}

/// Sign from reordering the concatenation of two ascending blades into
/// ascending order: counts transpositions between the factors.
pub fn reorder_sign(a: BladeMask, b: BladeMask) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Metric sign contributed by generators common to both factors.
pub fn metric_sign(common: BladeMask, sig: Signature) -> i8 {
    let mut s = 1i8;
    let mut m = common;
    while m != 0 {
        let i = m.trailing_zeros();
        s *= sig.generator_square(i);
        m &= m - 1;
    }
    s
}

/// Product of two basis blades: resulting mask and sign.
pub fn blade_product(a: BladeMask, b: BladeMask, sig: Signature) -> (BladeMask, i8) {
    (a ^ b, reorder_sign(a, b) * metric_sign(a & b, sig))
}

/// Sign of reversion on a grade-k blade: `(-1)^{k(k-1)/2}`.
pub fn reversion_sign(k: u32) -> i8 {
    if (k / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of the grade involution on a grade-k blade: `(-1)^k`.
pub fn involution_sign(k: u32) -> i8 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of Clifford conjugation on a grade-k blade: `(-1)^{k(k+1)/2}`.
pub fn conjugation_sign(k: u32) -> i8 {
    reversion_sign(k) * involution_sign(k)
}

pub fn mask_from_indices(indices: &[u32]) -> BladeMask {
    let mut m = 0u16;
    for &i in indices {
        assert!(i < MAX_DIM, "generator index out of range");
        assert!(m & (1 << i) == 0, "repeated generator index");
        m |= 1 << i;
    }
    m
}

pub fn indices_of_mask(mask: BladeMask) -> Vec<u32> {
    (0..MAX_DIM).filter(|i| mask & (1 << i) != 0).collect()
}
