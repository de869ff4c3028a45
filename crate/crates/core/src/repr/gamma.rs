//! The fixed 4x4 matrix model of the complexified spacetime algebra, and
//! the generator maps between Cl(4,1), complexified Cl(1,3) and Cl(3,0).
//!
//! The concrete matrices are pinned so that, with `g5 = g0 g1 g2 g3`,
//! the lower-component projector is `(1 - i g5)/2 = diag(0,0,1,1)` and a
//! spacetime vector `x = t g0 + x g1 + y g2 + z g3` is represented by
//! `[[0, -X],[-Xc, 0]]` where `X = [[t+z, x+iy],[x-iy, t-z]]` and `Xc` is
//! its quaternionic conjugate. These two block contracts force the signs
//! below; they are the single source of truth for every component formula
//! in the twistor module (see README for the matrices written out).

use std::sync::OnceLock;

use crate::algebra::blade::{blade_product, BladeMask, CL13, CL30, CL41};
use crate::algebra::{Backend, Multivector, Scalar};
use crate::error::Error;

/// A dense 4x4 complex matrix over one scalar backend.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat4 {
    pub e: [[Scalar; 4]; 4],
}

impl Mat4 {
    pub fn zero(backend: Backend) -> Self {
        let z = Scalar::zero(backend);
        Mat4 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| z.clone())),
        }
    }

    pub fn identity(backend: Backend) -> Self {
        let mut m = Mat4::zero(backend);
        for i in 0..4 {
            m.e[i][i] = Scalar::one(backend);
        }
        m
    }

    pub fn backend(&self) -> Backend {
        self.e[0][0].backend()
    }

    /// Build from integer entries times a unit in {1, i}.
    fn from_units(backend: Backend, re: [[i64; 4]; 4], im: [[i64; 4]; 4]) -> Self {
        let mut m = Mat4::zero(backend);
        for r in 0..4 {
            for c in 0..4 {
                let s = Scalar::from_i64(backend, re[r][c])
                    .add(&Scalar::from_i64(backend, im[r][c]).mul_imag());
                m.e[r][c] = s;
            }
        }
        m
    }

    pub fn add(&self, rhs: &Mat4) -> Mat4 {
        let mut m = Mat4::zero(self.backend());
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[r][c].add(&rhs.e[r][c]);
            }
        }
        m
    }

    pub fn sub(&self, rhs: &Mat4) -> Mat4 {
        let mut m = Mat4::zero(self.backend());
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[r][c].sub(&rhs.e[r][c]);
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Mat4) -> Mat4 {
        let mut m = Mat4::zero(self.backend());
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = Scalar::zero(self.backend());
                for k in 0..4 {
                    acc = acc.add(&self.e[r][k].mul(&rhs.e[k][c]));
                }
                m.e[r][c] = acc;
            }
        }
        m
    }

    pub fn scale(&self, k: &Scalar) -> Mat4 {
        let mut m = Mat4::zero(self.backend());
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[r][c].mul(k);
            }
        }
        m
    }

    pub fn neg(&self) -> Mat4 {
        self.scale(&Scalar::from_i64(self.backend(), -1))
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.backend());
        for i in 0..4 {
            acc = acc.add(&self.e[i][i]);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(Scalar::is_zero)
    }

    pub fn magnitude(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(Scalar::magnitude)
            .fold(0.0, f64::max)
    }

    /// Matrix times column spinor.
    pub fn apply(&self, v: &[Scalar; 4]) -> [Scalar; 4] {
        std::array::from_fn(|r| {
            let mut acc = Scalar::zero(self.backend());
            for k in 0..4 {
                acc = acc.add(&self.e[r][k].mul(&v[k]));
            }
            acc
        })
    }

    /// Row spinor times matrix.
    pub fn apply_row(&self, v: &[Scalar; 4]) -> [Scalar; 4] {
        std::array::from_fn(|c| {
            let mut acc = Scalar::zero(self.backend());
            for k in 0..4 {
                acc = acc.add(&v[k].mul(&self.e[k][c]));
            }
            acc
        })
    }

    /// Rank the lazy way: Gaussian elimination through [`crate::linalg`].
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = self.e.iter().map(|r| r.to_vec()).collect();
        crate::linalg::rank(rows)
    }

    pub fn to_float(&self) -> Mat4 {
        let mut m = Mat4::zero(Backend::Float);
        for r in 0..4 {
            for c in 0..4 {
                m.e[r][c] = self.e[r][c].to_float();
            }
        }
        m
    }
}

/// The fixed faithful representation: the four gamma matrices, the volume
/// element, the chirality projectors and the full 16-blade table.
pub struct GammaRep {
    backend: Backend,
    pub gamma: [Mat4; 4],
    pub gamma5: Mat4,
    /// blades[mask] represents the ascending product of gammas in `mask`.
    blades: [Mat4; 16],
}

static EXACT_REP: OnceLock<GammaRep> = OnceLock::new();
static FLOAT_REP: OnceLock<GammaRep> = OnceLock::new();

impl GammaRep {
    pub fn new(backend: Backend) -> Self {
        let g0 = Mat4::from_units(
            backend,
            [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]],
            [[0; 4]; 4],
        );
        let g1 = Mat4::from_units(
            backend,
            [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
            [[0; 4]; 4],
        );
        let g2 = Mat4::from_units(
            backend,
            [[0; 4]; 4],
            [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
        );
        let g3 = Mat4::from_units(
            backend,
            [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
            [[0; 4]; 4],
        );
        let gamma = [g0, g1, g2, g3];
        let gamma5 = gamma[0].mul(&gamma[1]).mul(&gamma[2]).mul(&gamma[3]);
        let blades = std::array::from_fn(|mask| {
            let mut m = Mat4::identity(backend);
            for i in 0..4 {
                if mask & (1 << i) != 0 {
                    m = m.mul(&gamma[i]);
                }
            }
            m
        });
        GammaRep {
            backend,
            gamma,
            gamma5,
            blades,
        }
    }

    /// Shared exact-backend instance.
    pub fn exact() -> &'static GammaRep {
        EXACT_REP.get_or_init(|| GammaRep::new(Backend::Exact))
    }

    /// Shared instance for either backend.
    pub fn shared(backend: Backend) -> &'static GammaRep {
        match backend {
            Backend::Exact => Self::exact(),
            Backend::Float => FLOAT_REP.get_or_init(|| GammaRep::new(Backend::Float)),
        }
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn blade(&self, mask: BladeMask) -> &Mat4 {
        &self.blades[mask as usize]
    }

    /// Faithful algebra homomorphism from complexified Cl(1,3) into 4x4
    /// complex matrices.
    pub fn matrix_of(&self, mv: &Multivector) -> Mat4 {
        assert_eq!(mv.sig(), CL13, "expected a Cl(1,3) element");
        assert_eq!(mv.backend(), self.backend, "mixed scalar backends");
        let mut out = Mat4::zero(self.backend);
        for (mask, c) in mv.terms() {
            out = out.add(&self.blades[mask as usize].scale(c));
        }
        out
    }

    /// Inverse of [`Self::matrix_of`] by trace orthogonality over the 16
    /// basis monomials: `c_B = tr(G_B^{-1} M) / 4` with `G_B^{-1} = s G_B`,
    /// `s` the scalar square of the blade.
    pub fn multivector_of(&self, m: &Mat4) -> Multivector {
        let quarter = Scalar::from_ratio(self.backend, 1, 4);
        let mut terms = Vec::new();
        for mask in 0u16..16 {
            let (_, sq) = blade_product(mask, mask, CL13);
            let c = self.blades[mask as usize]
                .mul(m)
                .trace()
                .mul_i64(sq as i64)
                .mul(&quarter);
            if !c.is_zero() {
                terms.push((mask, c));
            }
        }
        Multivector::from_terms(CL13, self.backend, terms)
    }

    /// Chirality projector `(1 - i g5)/2` (lower components) or
    /// `(1 + i g5)/2` (upper components).
    pub fn chirality_projector(&self, lower: bool) -> Mat4 {
        let half = Scalar::from_ratio(self.backend, 1, 2);
        let ig5 = self.gamma5.scale(&Scalar::i(self.backend));
        let id = Mat4::identity(self.backend);
        let m = if lower { id.sub(&ig5) } else { id.add(&ig5) };
        m.scale(&half)
    }
}

// ---------------------------------------------------------------------
// Generator images between the three algebras.
// ---------------------------------------------------------------------

/// Internal Cl(4,1) generator index for the basis vector `E_A`, `A = 0..4`:
/// the four unit-square generators E1..E4 occupy indices 0..3 and the
/// timelike E0 sits at index 4.
pub fn e_cap_index(a: usize) -> u32 {
    assert!(a <= 4, "basis label out of range");
    if a == 0 {
        4
    } else {
        (a - 1) as u32
    }
}

/// The basis vector `E_A` of Cl(4,1).
pub fn e_cap(a: usize, backend: Backend) -> Multivector {
    Multivector::basis_vector(CL41, e_cap_index(a), backend)
}

fn gamma_mv(mu: usize, backend: Backend) -> Multivector {
    Multivector::basis_vector(CL13, mu as u32, backend)
}

/// Image of `E_A` in the complexified spacetime algebra:
/// `E0 = i g0`, `Ek = gk g0`, `E4 = g5 g0 = -g123`.
pub fn e_cap_image(a: usize, backend: Backend) -> Multivector {
    let g0 = gamma_mv(0, backend);
    match a {
        0 => g0.scale(&Scalar::i(backend)),
        1..=3 => gamma_mv(a, backend).mul(&g0),
        4 => {
            let g5 = gamma_mv(0, backend)
                .mul(&gamma_mv(1, backend))
                .mul(&gamma_mv(2, backend))
                .mul(&gamma_mv(3, backend));
            g5.mul(&g0)
        }
        _ => panic!("basis label out of range"),
    }
}

/// Algebra homomorphism Cl(4,1) -> complexified Cl(1,3) defined on
/// generators by [`e_cap_image`].
pub fn cl41_to_complex_cl13(mv: &Multivector) -> Multivector {
    assert_eq!(mv.sig(), CL41, "expected a Cl(4,1) element");
    let backend = mv.backend();
    // images indexed by the *internal* generator index
    let images: [Multivector; 5] = [
        e_cap_image(1, backend),
        e_cap_image(2, backend),
        e_cap_image(3, backend),
        e_cap_image(4, backend),
        e_cap_image(0, backend),
    ];
    let mut out = Multivector::zero(CL13, backend);
    for (mask, c) in mv.terms() {
        let mut img = Multivector::one(CL13, backend);
        for i in 0..5u32 {
            if mask & (1 << i) != 0 {
                img = img.mul(&images[i as usize]);
            }
        }
        out = out.add(&img.scale(c));
    }
    out
}

/// The central pseudoscalar of Cl(4,1); squares to -1 and plays the
/// complex unit of the isomorphism with complexified Cl(1,3): the
/// generator map sends it to `-i`.
pub fn cl41_pseudoscalar(backend: Backend) -> Multivector {
    Multivector::basis_blade(CL41, &[0, 1, 2, 3, 4], backend)
}

/// Inverse homomorphism, complexified Cl(1,3) -> Cl(4,1): on generators
/// `g0 = w E0`, `gk = w Ek E0` with `w` the central pseudoscalar, and
/// the complex unit maps to `-w`. Real Cl(4,1) elements round-trip; the
/// output always carries real coefficients.
pub fn complex_cl13_to_cl41(mv: &Multivector) -> Multivector {
    assert_eq!(mv.sig(), CL13, "expected a Cl(1,3) element");
    let backend = mv.backend();
    let omega = cl41_pseudoscalar(backend);
    let e0 = e_cap(0, backend);
    let pre: [Multivector; 4] = std::array::from_fn(|mu| {
        if mu == 0 {
            omega.mul(&e0)
        } else {
            omega.mul(&e_cap(mu, backend)).mul(&e0)
        }
    });
    let mut out = Multivector::zero(CL41, backend);
    for (mask, c) in mv.terms() {
        let mut img = Multivector::one(CL41, backend);
        for mu in 0..4u32 {
            if mask & (1 << mu) != 0 {
                img = img.mul(&pre[mu as usize]);
            }
        }
        // c = a + b i  ->  (a - b w) img
        let coeff = Multivector::scalar(CL41, c.re()).sub(&omega.scale(&c.im()));
        out = out.add(&coeff.mul(&img));
    }
    out
}

/// Image of the Cl(3,0) basis vector `e_i` (1-based) inside Cl(4,1):
/// `e_i = E_i E_0 E_4`.
pub fn cl30_vector_image(i: usize, backend: Backend) -> Multivector {
    assert!((1..=3).contains(&i), "basis label out of range");
    e_cap(i, backend)
        .mul(&e_cap(0, backend))
        .mul(&e_cap(4, backend))
}

fn cl30_blade_image_table(backend: Backend) -> Vec<(BladeMask, BladeMask, i8)> {
    // (cl30 mask, cl41 mask, sign) for the 8 image blades
    let imgs: [Multivector; 3] = std::array::from_fn(|k| cl30_vector_image(k + 1, backend));
    let mut table = Vec::new();
    for m in 0u16..8 {
        let mut img = Multivector::one(CL41, backend);
        for i in 0..3u32 {
            if m & (1 << i) != 0 {
                img = img.mul(&imgs[i as usize]);
            }
        }
        let terms: Vec<_> = img.terms().map(|(mm, c)| (mm, c.clone())).collect();
        assert_eq!(terms.len(), 1, "image of a blade is a single blade");
        let (mask41, c) = &terms[0];
        let sign = if c == &Scalar::one(backend) { 1 } else { -1 };
        table.push((m, *mask41, sign));
    }
    table
}

/// Lift a Cl(3,0) element into Cl(4,1) through `e_i = E_i E_0 E_4`.
pub fn cl30_to_cl41(mv: &Multivector) -> Multivector {
    assert_eq!(mv.sig(), CL30, "expected a Cl(3,0) element");
    let backend = mv.backend();
    let table = cl30_blade_image_table(backend);
    let mut terms = Vec::new();
    for (mask, c) in mv.terms() {
        let (_, mask41, sign) = table[mask as usize];
        terms.push((mask41, c.mul_i64(sign as i64)));
    }
    Multivector::from_terms(CL41, backend, terms)
}

/// Project a Cl(4,1) element expressible in the image subalgebra back to
/// Cl(3,0); errors when any term lies outside the 8-dimensional image.
pub fn cl41_to_cl30(mv: &Multivector) -> Result<Multivector, Error> {
    assert_eq!(mv.sig(), CL41, "expected a Cl(4,1) element");
    let backend = mv.backend();
    let table = cl30_blade_image_table(backend);
    let mut terms = Vec::new();
    for (mask, c) in mv.terms() {
        match table.iter().find(|(_, m41, _)| *m41 == mask) {
            Some((m30, _, sign)) => terms.push((*m30, c.mul_i64(*sign as i64))),
            None => return Err(Error::OutsideSubalgebra),
        }
    }
    Ok(Multivector::from_terms(CL30, backend, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX: Backend = Backend::Exact;

    #[test]
    fn clifford_relations_hold() {
        let rep = GammaRep::exact();
        let metric = [1i64, -1, -1, -1];
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = rep.gamma[mu].mul(&rep.gamma[nu]).add(&rep.gamma[nu].mul(&rep.gamma[mu]));
                let expect = if mu == nu {
                    Mat4::identity(EX).scale(&Scalar::from_i64(EX, 2 * metric[mu]))
                } else {
                    Mat4::zero(EX)
                };
                assert_eq!(anti, expect, "anticommutator ({mu},{nu})");
            }
        }
        // g5^2 = -1
        assert_eq!(
            rep.gamma5.mul(&rep.gamma5),
            Mat4::identity(EX).neg()
        );
    }

    #[test]
    fn gamma5_is_diagonal_with_pinned_signs() {
        let rep = GammaRep::exact();
        let i = Scalar::i(EX);
        let mut expect = Mat4::zero(EX);
        expect.e[0][0] = i.neg();
        expect.e[1][1] = i.neg();
        expect.e[2][2] = i.clone();
        expect.e[3][3] = i;
        assert_eq!(rep.gamma5, expect);
    }

    #[test]
    fn matrix_of_is_homomorphism() {
        let rep = GammaRep::exact();
        // one -> identity, g0 g0 -> identity
        let one = Multivector::one(CL13, EX);
        assert_eq!(rep.matrix_of(&one), Mat4::identity(EX));
        let g0 = Multivector::basis_vector(CL13, 0, EX);
        assert_eq!(rep.matrix_of(&g0.mul(&g0)), Mat4::identity(EX));
    }

    #[test]
    fn chirality_projector_has_half_rank() {
        let rep = GammaRep::exact();
        let p = rep.chirality_projector(true);
        assert_eq!(p.trace(), Scalar::from_i64(EX, 2));
        assert_eq!(p.rank(), 2);
        assert_eq!(p.mul(&p), p, "idempotent");
    }

    #[test]
    fn trace_inversion_round_trips() {
        let rep = GammaRep::exact();
        // identity -> 1
        let id = Mat4::identity(EX);
        assert_eq!(rep.multivector_of(&id), Multivector::one(CL13, EX));
        // g1 g2 -> round trip
        let g1g2 = Multivector::basis_blade(CL13, &[1, 2], EX);
        let back = rep.multivector_of(&rep.matrix_of(&g1g2));
        assert_eq!(back, g1g2);
    }

    #[test]
    fn e_cap_images_satisfy_signature() {
        // E_A E_B + E_B E_A = 2 diag(-1,1,1,1,1)
        for a in 0..5 {
            for b in 0..5 {
                let ia = e_cap_image(a, EX);
                let ib = e_cap_image(b, EX);
                let anti = ia.anticommutator(&ib);
                let expect = if a == b {
                    let sq = if a == 0 { -2 } else { 2 };
                    Multivector::one(CL13, EX).scale_i64(sq)
                } else {
                    Multivector::zero(CL13, EX)
                };
                assert_eq!(anti, expect, "E_{a} E_{b}");
            }
        }
    }

    #[test]
    fn e4_equals_both_expressions() {
        // g5 g0 = -g123 as an algebra identity
        let g: Vec<Multivector> = (0..4)
            .map(|m| Multivector::basis_vector(CL13, m, EX))
            .collect();
        let g5 = g[0].mul(&g[1]).mul(&g[2]).mul(&g[3]);
        let lhs = g5.mul(&g[0]);
        let rhs = g[1].mul(&g[2]).mul(&g[3]).neg();
        assert_eq!(lhs, rhs);
        assert_eq!(e_cap_image(4, EX), lhs);
    }

    #[test]
    fn cl41_map_sends_e0_to_i_g0() {
        let e0 = e_cap(0, EX);
        let img = cl41_to_complex_cl13(&e0);
        let expect = Multivector::basis_vector(CL13, 0, EX).scale(&Scalar::i(EX));
        assert_eq!(img, expect);
    }

    #[test]
    fn cl41_maps_are_mutually_inverse() {
        for a in 0..5 {
            let e = e_cap(a, EX);
            assert_eq!(complex_cl13_to_cl41(&cl41_to_complex_cl13(&e)), e);
        }
        for mu in 0..4 {
            let g = Multivector::basis_vector(CL13, mu, EX);
            assert_eq!(cl41_to_complex_cl13(&complex_cl13_to_cl41(&g)), g);
        }
        // the pseudoscalar carries the complex unit
        let omega = cl41_pseudoscalar(EX);
        assert_eq!(omega.mul(&omega), Multivector::one(CL41, EX).neg());
        assert_eq!(
            cl41_to_complex_cl13(&omega),
            Multivector::imag(CL13, EX).neg()
        );
        // complex-coefficient elements round-trip through real Cl(4,1)
        let g1 = Multivector::basis_vector(CL13, 1, EX);
        let z = Multivector::one(CL13, EX)
            .scale(&Scalar::i(EX))
            .add(&g1.scale(&Scalar::from_ratio(EX, 2, 3)));
        let back = complex_cl13_to_cl41(&z);
        assert!(back.terms().all(|(_, c)| c.is_real()));
        assert_eq!(cl41_to_complex_cl13(&back), z);
    }

    #[test]
    fn cl30_image_relations() {
        // (E1 E0 E4)^2 = 1 and anticommutation, through the oracle map
        let img1 = cl30_vector_image(1, EX);
        let img2 = cl30_vector_image(2, EX);
        assert_eq!(img1.mul(&img1), Multivector::one(CL41, EX));
        assert!(img1.anticommutator(&img2).is_zero());
        // defining map round trip
        let e1 = Multivector::basis_vector(CL30, 0, EX);
        assert_eq!(cl41_to_cl30(&img1).unwrap(), e1);
        assert_eq!(cl30_to_cl41(&e1), img1);
        // an element outside the image errors
        let stray = e_cap(0, EX);
        assert!(cl41_to_cl30(&stray).is_err());
    }
}
