//! The periodicity-theorem 2x2 matrix model: Cl(4,1) as 2x2 matrices with
//! Cl(3,0) entries. Layout `[[a, c], [b, d]]`, acting on compactified
//! points as `x' = (a x + c)(b x + d)^{-1}`.
//!
//! With `E± = (E4 ± E0)/2` represented as the off-diagonal matrix units,
//! a paravector `b = a5 + a^A E_A` takes the form
//! `[[a5 + a^i e_i, a4 - a0], [a0 + a4, a5 - a^i e_i]]`.

use serde_json::{json, Value};

use super::gamma::e_cap;
use crate::algebra::blade::BladeMask;
use crate::algebra::multivector::{scalar_from_json, scalar_to_json};
use crate::algebra::{Backend, Multivector, Scalar, CL30, CL41};
use crate::error::Error;

/// 2x2 matrix with Cl(3,0) entries, layout `[[a, c], [b, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2 {
    pub a: Multivector,
    pub c: Multivector,
    pub b: Multivector,
    pub d: Multivector,
}

impl Mat2 {
    pub fn new(a: Multivector, c: Multivector, b: Multivector, d: Multivector) -> Self {
        for m in [&a, &c, &b, &d] {
            assert_eq!(m.sig(), CL30, "entries must live in Cl(3,0)");
            assert_eq!(m.backend(), a.backend(), "mixed scalar backends");
        }
        Mat2 { a, c, b, d }
    }

    pub fn backend(&self) -> Backend {
        self.a.backend()
    }

    pub fn identity(backend: Backend) -> Self {
        let one = Multivector::one(CL30, backend);
        let zero = Multivector::zero(CL30, backend);
        Mat2::new(one.clone(), zero.clone(), zero, one)
    }

    pub fn zero(backend: Backend) -> Self {
        let zero = Multivector::zero(CL30, backend);
        Mat2::new(zero.clone(), zero.clone(), zero.clone(), zero)
    }

    /// Noncommutative matrix product.
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a.mul(&rhs.a).add(&self.c.mul(&rhs.b)),
            c: self.a.mul(&rhs.c).add(&self.c.mul(&rhs.d)),
            b: self.b.mul(&rhs.a).add(&self.d.mul(&rhs.b)),
            d: self.b.mul(&rhs.c).add(&self.d.mul(&rhs.d)),
        }
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a.add(&rhs.a),
            c: self.c.add(&rhs.c),
            b: self.b.add(&rhs.b),
            d: self.d.add(&rhs.d),
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            a: self.a.neg(),
            c: self.c.neg(),
            b: self.b.neg(),
            d: self.d.neg(),
        }
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        self.add(&rhs.neg())
    }

    /// Matrix of the reversion of the represented Cl(4,1) element:
    /// `[[conj(d), conj(c)], [conj(b), conj(a)]]` with Cl(3,0) Clifford
    /// conjugation on the entries. This is the right factor of the
    /// twisted-adjoint sandwich.
    pub fn reversion_matrix(&self) -> Mat2 {
        Mat2 {
            a: self.d.clifford_conjugation(),
            c: self.c.clifford_conjugation(),
            b: self.b.clifford_conjugation(),
            d: self.a.clifford_conjugation(),
        }
    }

    /// Matrix of the Clifford conjugation of the represented Cl(4,1)
    /// element: `[[rev(d), -rev(c)], [-rev(b), rev(a)]]` with Cl(3,0)
    /// reversion on the entries. This is the conjugate used in the unit
    /// condition `g * conj(g) = 1`.
    pub fn conjugation_matrix(&self) -> Mat2 {
        Mat2 {
            a: self.d.reversion(),
            c: self.c.reversion().neg(),
            b: self.b.reversion().neg(),
            d: self.a.reversion(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sub(&Mat2::identity(self.backend())).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_zero_or_small(&self) -> bool {
        [&self.a, &self.c, &self.b, &self.d]
            .iter()
            .all(|m| m.is_zero_or_small())
    }

    pub fn is_small_relative(&self, scale: f64) -> bool {
        [&self.a, &self.c, &self.b, &self.d]
            .iter()
            .all(|m| m.is_small_relative(scale))
    }

    pub fn magnitude(&self) -> f64 {
        [&self.a, &self.c, &self.b, &self.d]
            .iter()
            .map(|m| m.magnitude())
            .fold(0.0, f64::max)
    }

    /// Equality up to a global scalar factor.
    pub fn projectively_eq(&self, rhs: &Mat2) -> bool {
        let to_mv = |m: &Mat2| mat2_to_cl41(m);
        to_mv(self).projectively_eq(&to_mv(rhs))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "d": self.d.to_json(),
        })
    }
}

// ---------------------------------------------------------------------
// The full isomorphism Cl(4,1) <-> Mat2 through the nilpotents E+- and
// the idempotents e11 = E-E+, e22 = E+E-.
// ---------------------------------------------------------------------

struct MatrixUnits {
    e11: Multivector,
    e12: Multivector,
    e21: Multivector,
    e22: Multivector,
}

fn matrix_units(backend: Backend) -> MatrixUnits {
    let half = Scalar::from_ratio(backend, 1, 2);
    let e4 = e_cap(4, backend);
    let e0 = e_cap(0, backend);
    let eplus = e4.add(&e0).scale(&half);
    let eminus = e4.sub(&e0).scale(&half);
    MatrixUnits {
        e11: eminus.mul(&eplus),
        e12: eminus.clone(),
        e21: eplus.clone(),
        e22: eplus.mul(&eminus),
    }
}

/// The entry embedding of Cl(3,0) that commutes with the matrix units
/// and reproduces the displayed paravector matrices: `e_i = E_i E_4 E_0`.
/// (It differs from the defining map `E_i E_0 E_4` of
/// [`super::gamma::cl41_to_cl30`] by the grade involution.)
fn entry_image_table(backend: Backend) -> Vec<(BladeMask, BladeMask, i8)> {
    let imgs: [Multivector; 3] = std::array::from_fn(|k| {
        e_cap(k + 1, backend)
            .mul(&e_cap(4, backend))
            .mul(&e_cap(0, backend))
    });
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

fn entry_to_cl30(mv: &Multivector) -> Multivector {
    let backend = mv.backend();
    let table = entry_image_table(backend);
    let mut terms = Vec::new();
    for (mask, c) in mv.terms() {
        let (m30, _, sign) = table
            .iter()
            .find(|(_, m41, _)| *m41 == mask)
            .expect("matrix-unit extraction lands in the entry subalgebra");
        terms.push((*m30, c.mul_i64(*sign as i64)));
    }
    Multivector::from_terms(CL30, backend, terms)
}

fn cl30_to_entry(mv: &Multivector) -> Multivector {
    let backend = mv.backend();
    let table = entry_image_table(backend);
    let mut terms = Vec::new();
    for (mask, c) in mv.terms() {
        let (_, mask41, sign) = table[mask as usize];
        terms.push((mask41, c.mul_i64(sign as i64)));
    }
    Multivector::from_terms(CL41, backend, terms)
}

/// Decompose an arbitrary Cl(4,1) element into the 2x2 model.
pub fn cl41_to_mat2(mv: &Multivector) -> Mat2 {
    assert_eq!(mv.sig(), CL41, "expected a Cl(4,1) element");
    let backend = mv.backend();
    let u = matrix_units(backend);
    // entry_{ij} = e_{1i} phi e_{j1} + e_{2i} phi e_{j2}, which lands in
    // the entry subalgebra.
    let entry = |r1: &Multivector, r2: &Multivector, c1: &Multivector, c2: &Multivector| {
        let m = r1.mul(mv).mul(c1).add(&r2.mul(mv).mul(c2));
        entry_to_cl30(&m)
    };
    Mat2 {
        a: entry(&u.e11, &u.e21, &u.e11, &u.e12),
        c: entry(&u.e11, &u.e21, &u.e21, &u.e22),
        b: entry(&u.e12, &u.e22, &u.e11, &u.e12),
        d: entry(&u.e12, &u.e22, &u.e21, &u.e22),
    }
}

/// Reassemble a Cl(4,1) element from its 2x2 form.
pub fn mat2_to_cl41(m: &Mat2) -> Multivector {
    let backend = m.backend();
    let u = matrix_units(backend);
    cl30_to_entry(&m.a)
        .mul(&u.e11)
        .add(&cl30_to_entry(&m.c).mul(&u.e12))
        .add(&cl30_to_entry(&m.b).mul(&u.e21))
        .add(&cl30_to_entry(&m.d).mul(&u.e22))
}

// ---------------------------------------------------------------------
// Paravector forms.
// ---------------------------------------------------------------------

/// Coefficients of a Cl(4,1) paravector `a5 + a^A E_A`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParavectorCoeffs {
    /// scalar part
    pub a5: Scalar,
    /// coefficient of E0
    pub a0: Scalar,
    /// coefficients of E1..E3
    pub ai: [Scalar; 3],
    /// coefficient of E4
    pub a4: Scalar,
}

impl ParavectorCoeffs {
    pub fn to_multivector(&self) -> Multivector {
        let backend = self.a5.backend();
        let mut mv = Multivector::scalar(CL41, self.a5.clone());
        mv = mv.add(&e_cap(0, backend).scale(&self.a0));
        for (k, c) in self.ai.iter().enumerate() {
            mv = mv.add(&e_cap(k + 1, backend).scale(c));
        }
        mv.add(&e_cap(4, backend).scale(&self.a4))
    }

    pub fn from_multivector(mv: &Multivector) -> Result<Self, Error> {
        if mv.sig() != CL41 || !mv.is_paravector() {
            return Err(Error::NotParavector);
        }
        Ok(ParavectorCoeffs {
            a5: mv.scalar_part(),
            a0: mv.coeff(1 << 4),
            ai: std::array::from_fn(|k| mv.coeff(1 << k)),
            a4: mv.coeff(1 << 3),
        })
    }
}

/// Matrix form of a Cl(4,1) paravector:
/// `[[a5 + a^i e_i, a4 - a0], [a0 + a4, a5 - a^i e_i]]`.
pub fn paravector_to_mat2(mv: &Multivector) -> Result<Mat2, Error> {
    let co = ParavectorCoeffs::from_multivector(mv)?;
    let backend = co.a5.backend();
    let mut x = Multivector::scalar(CL30, co.a5.clone());
    for (k, c) in co.ai.iter().enumerate() {
        x = x.add(&Multivector::basis_vector(CL30, k as u32, backend).scale(c));
    }
    let xbar = x.clifford_conjugation();
    Ok(Mat2 {
        a: x,
        c: Multivector::scalar(CL30, co.a4.sub(&co.a0)),
        b: Multivector::scalar(CL30, co.a0.add(&co.a4)),
        d: xbar,
    })
}

/// Inverse of [`paravector_to_mat2`], failing off the paravector image:
/// diagonal entries must be conjugate Cl(3,0) paravectors and the
/// off-diagonal entries real scalars.
pub fn mat2_to_paravector(m: &Mat2) -> Result<Multivector, Error> {
    if !m.a.is_paravector()
        || m.d != m.a.clifford_conjugation()
        || !m.b.is_scalar()
        || !m.c.is_scalar()
    {
        return Err(Error::OutsideParavectorImage);
    }
    let mu = m.b.scalar_part();
    let lambda = m.c.scalar_part();
    if !mu.is_real() || !lambda.is_real() {
        return Err(Error::OutsideParavectorImage);
    }
    let half = Scalar::from_ratio(m.backend(), 1, 2);
    let co = ParavectorCoeffs {
        a5: m.a.scalar_part(),
        a0: mu.sub(&lambda).mul(&half),
        ai: std::array::from_fn(|k| m.a.coeff(1 << k)),
        a4: mu.add(&lambda).mul(&half),
    };
    Ok(co.to_multivector())
}

/// 4x4 complex matrices of the gamma model serialize row-major as
/// `[re, im]` rational-string pairs; this renders the 2x2 Cl(3,0) model
/// entry-wise instead (each entry a full multivector).
pub fn mat2_entry_pairs(m: &Multivector) -> Value {
    let pairs: Vec<Value> = m
        .terms()
        .map(|(_, s)| {
            let (re, im) = scalar_to_json(s);
            json!([re, im])
        })
        .collect();
    Value::Array(pairs)
}

/// Parse a 4-array of scalars (used for points and vectors).
pub fn parse_scalar_array(v: &Value, backend: Backend) -> Result<Vec<Scalar>, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::invalid("expected an array of scalars"))?;
    arr.iter()
        .map(|x| scalar_from_json(Some(x), None, backend))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Backend;

    const EX: Backend = Backend::Exact;

    fn rand_mv(seed: &mut u64, sig: crate::algebra::Signature) -> Multivector {
        // tiny xorshift, enough for structural tests
        let mut terms = Vec::new();
        for mask in 0..(1u16 << sig.dim()) {
            *seed ^= *seed << 13;
            *seed ^= *seed >> 7;
            *seed ^= *seed << 17;
            if (*seed).is_multiple_of(3) {
                let n = (*seed % 11) as i64 - 5;
                terms.push((mask, Scalar::from_i64(EX, n)));
            }
        }
        Multivector::from_terms(sig, EX, terms)
    }

    #[test]
    fn scalar_one_maps_to_identity() {
        let one = Multivector::one(CL41, EX);
        let m = cl41_to_mat2(&one);
        assert!(m.is_identity());
        assert_eq!(mat2_to_cl41(&m), one);
    }

    #[test]
    fn paravector_matrix_forms() {
        // b = 1 -> identity
        let m = paravector_to_mat2(&Multivector::one(CL41, EX)).unwrap();
        assert!(m.is_identity());
        // b = E0 -> [[0,-1],[1,0]]
        let m = paravector_to_mat2(&e_cap(0, EX)).unwrap();
        let one30 = Multivector::one(CL30, EX);
        assert!(m.a.is_zero() && m.d.is_zero());
        assert_eq!(m.c, one30.neg());
        assert_eq!(m.b, one30);
        // b = E1 -> [[e1,0],[0,-e1]]
        let m = paravector_to_mat2(&e_cap(1, EX)).unwrap();
        let e1 = Multivector::basis_vector(CL30, 0, EX);
        assert_eq!(m.a, e1);
        assert_eq!(m.d, e1.neg());
        assert!(m.b.is_zero() && m.c.is_zero());
    }

    #[test]
    fn paravector_form_agrees_with_full_isomorphism() {
        let mut seed = 0xfeed5eedu64;
        for _ in 0..20 {
            let mv = rand_mv(&mut seed, CL41);
            let para = mv.grade_project(0).add(&mv.grade_project(1));
            assert_eq!(
                paravector_to_mat2(&para).unwrap(),
                cl41_to_mat2(&para),
                "paravector {para}"
            );
        }
    }

    #[test]
    fn mat2_round_trips_and_homomorphism() {
        let mut seed = 0xabcdef01u64;
        for _ in 0..10 {
            let x = rand_mv(&mut seed, CL41);
            let y = rand_mv(&mut seed, CL41);
            let mx = cl41_to_mat2(&x);
            let my = cl41_to_mat2(&y);
            assert_eq!(mat2_to_cl41(&mx), x);
            assert_eq!(cl41_to_mat2(&x.mul(&y)), mx.mul(&my));
        }
    }

    #[test]
    fn conjugate_matrices_match_the_lift() {
        let mut seed = 0x12345u64;
        for _ in 0..10 {
            let x = rand_mv(&mut seed, CL41);
            let m = cl41_to_mat2(&x);
            assert_eq!(m.reversion_matrix(), cl41_to_mat2(&x.reversion()));
            assert_eq!(
                m.conjugation_matrix(),
                cl41_to_mat2(&x.clifford_conjugation())
            );
        }
    }

    #[test]
    fn mat2_to_paravector_solves_the_field_equations() {
        // [[x, x xbar],[1, xbar]] with x = 2 + e1 -> a5=2, a1=1, mu=1, lambda=3
        let one = Multivector::one(CL30, EX);
        let e1 = Multivector::basis_vector(CL30, 0, EX);
        let x = one.scale_i64(2).add(&e1);
        let xbar = x.clifford_conjugation();
        let xxbar = x.mul(&xbar);
        assert_eq!(xxbar, one.scale_i64(3));
        let m = Mat2::new(x.clone(), xxbar, one.clone(), xbar);
        let b = mat2_to_paravector(&m).unwrap();
        let co = ParavectorCoeffs::from_multivector(&b).unwrap();
        assert_eq!(co.a5, Scalar::from_i64(EX, 2));
        assert_eq!(co.ai[0], Scalar::from_i64(EX, 1));
        // lambda = a4 - a0 = 3, mu = a4 + a0 = 1
        assert_eq!(co.a4.sub(&co.a0), Scalar::from_i64(EX, 3));
        assert_eq!(co.a4.add(&co.a0), Scalar::from_i64(EX, 1));
        // round trip
        assert_eq!(paravector_to_mat2(&b).unwrap(), m);
        // off-image matrix errors
        let bad = Mat2::new(e1.clone(), e1.clone(), one.clone(), e1.neg());
        assert!(mat2_to_paravector(&bad).is_err());
    }
}
