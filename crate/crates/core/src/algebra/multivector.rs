//! Sparse multivectors over an arbitrary signature.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::blade::{
    self, blade_product, conjugation_sign, grade, indices_of_mask, involution_sign,
    mask_from_indices, reversion_sign, BladeMask, Signature,
};
use super::scalar::{format_rational, parse_rational, Backend, Scalar};
use crate::error::Error;

/// A Clifford algebra element: map from basis blades to scalars.
///
/// Invariants: no stored zero coefficients; all coefficients share one
/// scalar backend; blade masks fit the signature dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    sig: Signature,
    backend: Backend,
    terms: BTreeMap<BladeMask, Scalar>,
}

impl Multivector {
    pub fn zero(sig: Signature, backend: Backend) -> Self {
        Multivector {
            sig,
            backend,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, s: Scalar) -> Self {
        let mut mv = Multivector::zero(sig, s.backend());
        mv.insert(0, s);
        mv
    }

    pub fn one(sig: Signature, backend: Backend) -> Self {
        Multivector::scalar(sig, Scalar::one(backend))
    }

    /// The imaginary unit as a scalar element.
    pub fn imag(sig: Signature, backend: Backend) -> Self {
        Multivector::scalar(sig, Scalar::i(backend))
    }

    pub fn basis_vector(sig: Signature, index: u32, backend: Backend) -> Self {
        assert!(index < sig.dim(), "generator index out of range for {sig}");
        let mut mv = Multivector::zero(sig, backend);
        mv.insert(1 << index, Scalar::one(backend));
        mv
    }

    pub fn basis_blade(sig: Signature, indices: &[u32], backend: Backend) -> Self {
        let mask = mask_from_indices(indices);
        assert!(
            grade(mask) == 0 || (mask >> sig.dim()) == 0,
            "blade outside {sig}"
        );
        let mut mv = Multivector::zero(sig, backend);
        mv.insert(mask, Scalar::one(backend));
        mv
    }

    pub fn from_terms<I>(sig: Signature, backend: Backend, terms: I) -> Self
    where
        I: IntoIterator<Item = (BladeMask, Scalar)>,
    {
        let mut mv = Multivector::zero(sig, backend);
        for (mask, s) in terms {
            let cur = mv.coeff(mask).add(&s);
            mv.insert(mask, cur);
        }
        mv
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BladeMask, &Scalar)> {
        self.terms.iter().map(|(m, s)| (*m, s))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: BladeMask) -> Scalar {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.backend))
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coeff(0)
    }

    fn insert(&mut self, mask: BladeMask, s: Scalar) {
        assert_eq!(s.backend(), self.backend, "mixed scalar backends");
        if s.is_zero() {
            self.terms.remove(&mask);
        } else {
            self.terms.insert(mask, s);
        }
    }

    fn check_compat(&self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        assert_eq!(self.backend, rhs.backend, "mixed scalar backends");
    }

    pub fn add(&self, rhs: &Multivector) -> Multivector {
        self.check_compat(rhs);
        let mut out = self.clone();
        for (mask, s) in rhs.terms() {
            let cur = out.coeff(mask).add(s);
            out.insert(mask, cur);
        }
        out
    }

    pub fn sub(&self, rhs: &Multivector) -> Multivector {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.map_coeffs(|_, s| s.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Multivector {
        if k.is_zero() {
            return Multivector::zero(self.sig, self.backend);
        }
        self.map_coeffs(|_, s| s.mul(k))
    }

    pub fn scale_i64(&self, n: i64) -> Multivector {
        if n == 0 {
            return Multivector::zero(self.sig, self.backend);
        }
        self.map_coeffs(|_, s| s.mul_i64(n))
    }

    fn map_coeffs(&self, f: impl Fn(BladeMask, &Scalar) -> Scalar) -> Multivector {
        let mut out = Multivector::zero(self.sig, self.backend);
        for (mask, s) in self.terms() {
            out.insert(mask, f(mask, s));
        }
        out
    }

    /// The geometric product.
    pub fn geometric_product(&self, rhs: &Multivector) -> Multivector {
        self.check_compat(rhs);
        let mut acc: BTreeMap<BladeMask, Scalar> = BTreeMap::new();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                let (mask, sign) = blade_product(ma, mb, self.sig);
                let term = ca.mul(cb).mul_i64(sign as i64);
                match acc.get_mut(&mask) {
                    Some(cur) => *cur = cur.add(&term),
                    None => {
                        acc.insert(mask, term);
                    }
                }
            }
        }
        acc.retain(|_, s| !s.is_zero());
        Multivector {
            sig: self.sig,
            backend: self.backend,
            terms: acc,
        }
    }

    pub fn mul(&self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
    }

    /// `ab - ba`.
    pub fn commutator(&self, rhs: &Multivector) -> Multivector {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, rhs: &Multivector) -> Multivector {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// Reversion: grade-k part times `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Multivector {
        self.map_coeffs(|m, s| s.mul_i64(reversion_sign(grade(m)) as i64))
    }

    /// Grade involution: grade-k part times `(-1)^k`.
    pub fn grade_involution(&self) -> Multivector {
        self.map_coeffs(|m, s| s.mul_i64(involution_sign(grade(m)) as i64))
    }

    /// Clifford conjugation: reversion composed with the grade involution.
    pub fn clifford_conjugation(&self) -> Multivector {
        self.map_coeffs(|m, s| s.mul_i64(conjugation_sign(grade(m)) as i64))
    }

    /// Complex conjugation of every coefficient (the real structure).
    pub fn conjugate_scalars(&self) -> Multivector {
        self.map_coeffs(|_, s| s.conj())
    }

    pub fn grade_project(&self, k: u32) -> Multivector {
        assert!(k <= self.sig.dim(), "grade out of range for {}", self.sig);
        let mut out = Multivector::zero(self.sig, self.backend);
        for (mask, s) in self.terms() {
            if grade(mask) == k {
                out.insert(mask, s.clone());
            }
        }
        out
    }

    pub fn max_grade(&self) -> u32 {
        self.terms().map(|(m, _)| grade(m)).max().unwrap_or(0)
    }

    /// True when only grades 0 and 1 occur.
    pub fn is_paravector(&self) -> bool {
        self.terms().all(|(m, _)| grade(m) <= 1)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms().all(|(m, _)| m == 0)
    }

    /// Drop float coefficients below an absolute cutoff; the identity on
    /// exact elements.
    pub fn prune_below(&self, cutoff: f64) -> Multivector {
        match self.backend {
            Backend::Exact => self.clone(),
            Backend::Float => {
                let mut out = Multivector::zero(self.sig, self.backend);
                for (mask, s) in self.terms() {
                    if s.magnitude() >= cutoff {
                        out.insert(mask, s.clone());
                    }
                }
                out
            }
        }
    }

    /// Drop float coefficients that are numerical noise relative to the
    /// largest one; the identity on exact elements.
    pub fn prune_noise(&self) -> Multivector {
        self.prune_below(1e-12 * (1.0 + self.magnitude()))
    }

    /// Inverse via `z zbar`, which is central in algebras of dimension <= 3
    /// (and a scalar for paravectors in any signature).
    pub fn inverse(&self) -> Result<Multivector, Error> {
        let zbar = self.clifford_conjugation();
        let n = self.mul(&zbar).prune_noise();
        if n.is_scalar() {
            let s = n.scalar_part();
            let inv = s.inv().ok_or(Error::NotInvertible)?;
            return Ok(zbar.scale(&inv));
        }
        // n has grades {0, 3} only; for dim == 3 the pseudoscalar is central
        // with square -1, so n = s + p*w inverts like a complex number.
        if self.sig.dim() == 3 && n.terms().all(|(m, _)| grade(m) == 0 || grade(m) == 3) {
            let omega: BladeMask = 0b111;
            let s = n.coeff(0);
            let p = n.coeff(omega);
            let d = s.mul(&s).add(&p.mul(&p)).inv().ok_or(Error::NotInvertible)?;
            let mut conj = Multivector::zero(self.sig, self.backend);
            conj.insert(0, s.mul(&d));
            conj.insert(omega, p.neg().mul(&d));
            let inv = zbar.mul(&conj);
            debug_assert!(self.mul(&inv).sub(&Multivector::one(self.sig, self.backend)).is_zero_or_small());
            return Ok(inv);
        }
        Err(Error::NotInvertible)
    }

    /// Exact zero, or below 1e-9 in every coefficient for floats.
    pub fn is_zero_or_small(&self) -> bool {
        self.is_small_relative(0.0)
    }

    /// Exact zero, or negligible against the given magnitude scale.
    pub fn is_small_relative(&self, scale: f64) -> bool {
        match self.backend {
            Backend::Exact => self.is_zero(),
            Backend::Float => self.magnitude() < 1e-9 * (1.0 + scale.abs()),
        }
    }

    /// Largest coefficient magnitude (0 for the zero element).
    pub fn magnitude(&self) -> f64 {
        self.terms()
            .map(|(_, s)| s.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> Multivector {
        let mut out = Multivector::zero(self.sig, Backend::Float);
        for (mask, s) in self.terms() {
            out.insert(mask, s.to_float());
        }
        out
    }

    /// Projective equality: `self = k * rhs` for some nonzero scalar k.
    pub fn projectively_eq(&self, rhs: &Multivector) -> bool {
        let lhs = self.prune_noise();
        let rhs = rhs.prune_noise();
        if lhs.is_zero() || rhs.is_zero() {
            return lhs.is_zero() && rhs.is_zero();
        }
        // pivot on the largest coefficient for float stability
        let (mask, a) = lhs
            .terms()
            .max_by(|(_, s), (_, t)| {
                s.magnitude()
                    .partial_cmp(&t.magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonzero");
        let b = rhs.coeff(mask);
        if b.is_zero() {
            return false;
        }
        // k = a / b, then check self == k * rhs
        let k = a.mul(&b.inv().expect("nonzero"));
        lhs.sub(&rhs.scale(&k)).is_small_relative(lhs.magnitude())
    }

    // ------------------------------------------------------------------
    // JSON form: {"sig":[p,q],"terms":[{"blade":[i,...],"re":"a/b","im":"c/d"}]}
    // ------------------------------------------------------------------

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(mask, s)| {
                let blade: Vec<u32> = indices_of_mask(mask);
                let (re, im) = scalar_to_json(s);
                json!({"blade": blade, "re": re, "im": im})
            })
            .collect();
        json!({"sig": [self.sig.p, self.sig.q], "terms": terms})
    }

    pub fn from_json(v: &Value, backend: Backend) -> Result<Multivector, Error> {
        let sig_arr = v
            .get("sig")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("multivector: missing \"sig\""))?;
        if sig_arr.len() != 2 {
            return Err(Error::invalid("multivector: \"sig\" must be [p,q]"));
        }
        let p = sig_arr[0]
            .as_u64()
            .ok_or_else(|| Error::invalid("multivector: bad p"))? as u32;
        let q = sig_arr[1]
            .as_u64()
            .ok_or_else(|| Error::invalid("multivector: bad q"))? as u32;
        if p + q > blade::MAX_DIM {
            return Err(Error::invalid("multivector: dimension above bound"));
        }
        let sig = Signature { p, q };
        let mut mv = Multivector::zero(sig, backend);
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("multivector: missing \"terms\""))?;
        for t in terms {
            let blade_arr = t
                .get("blade")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::invalid("term: missing \"blade\""))?;
            let mut indices = Vec::new();
            for b in blade_arr {
                let i = b
                    .as_u64()
                    .ok_or_else(|| Error::invalid("term: bad blade index"))? as u32;
                if i >= sig.dim() {
                    return Err(Error::invalid("term: blade index outside signature"));
                }
                indices.push(i);
            }
            for w in indices.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::invalid("term: blade indices must be ascending"));
                }
            }
            let s = scalar_from_json(t.get("re"), t.get("im"), backend)?;
            let mask = mask_from_indices(&indices);
            let cur = mv.coeff(mask).add(&s);
            mv.insert(mask, cur);
        }
        Ok(mv)
    }
}

pub fn scalar_to_json(s: &Scalar) -> (Value, Value) {
    match s {
        Scalar::Exact { re, im } => (
            Value::String(format_rational(re)),
            Value::String(format_rational(im)),
        ),
        Scalar::Float { re, im } => (json!(re), json!(im)),
    }
}

pub fn scalar_from_json(
    re: Option<&Value>,
    im: Option<&Value>,
    backend: Backend,
) -> Result<Scalar, Error> {
    let part = |v: Option<&Value>, what: &str| -> Result<Scalar, Error> {
        match v {
            None | Some(Value::Null) => Ok(Scalar::zero(backend)),
            Some(Value::String(s)) => match backend {
                Backend::Exact => parse_rational(s)
                    .map(Scalar::from_rational)
                    .ok_or_else(|| Error::invalid(format!("bad rational {what}: {s:?}"))),
                Backend::Float => {
                    let r = parse_rational(s)
                        .ok_or_else(|| Error::invalid(format!("bad rational {what}: {s:?}")))?;
                    Ok(Scalar::from_f64(super::scalar::rational_to_f64(&r), 0.0))
                }
            },
            Some(Value::Number(n)) => {
                let f = n.as_f64().ok_or_else(|| Error::invalid("bad number"))?;
                match backend {
                    Backend::Exact => {
                        if let Some(i) = n.as_i64() {
                            Ok(Scalar::from_i64(Backend::Exact, i))
                        } else {
                            Err(Error::invalid(format!(
                                "non-integer number {what} in exact mode: {f}; use \"a/b\" strings"
                            )))
                        }
                    }
                    Backend::Float => Ok(Scalar::from_f64(f, 0.0)),
                }
            }
            Some(other) => Err(Error::invalid(format!("bad scalar {what}: {other}"))),
        }
    };
    let re = part(re, "re")?;
    let im = part(im, "im")?;
    Ok(re.add(&im.mul_imag()))
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mask, s) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mask == 0 {
                write!(f, "{}", s)?;
            } else {
                let name: String = indices_of_mask(mask)
                    .iter()
                    .map(|i| format!("e{}", i))
                    .collect();
                write!(f, "{}*{}", s, name)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::blade::{CL13, CL30};

    fn e(i: u32) -> Multivector {
        Multivector::basis_vector(CL30, i, Backend::Exact)
    }

    #[test]
    fn metric_squares() {
        let one = Multivector::one(CL30, Backend::Exact);
        assert_eq!(e(0).mul(&e(0)), one);
        let g1 = Multivector::basis_vector(CL13, 1, Backend::Exact);
        assert_eq!(
            g1.mul(&g1),
            Multivector::one(CL13, Backend::Exact).neg()
        );
    }

    #[test]
    fn idempotent_complement_annihilates() {
        // (1+e1)(1-e1) = 0 in Cl(3,0)
        let one = Multivector::one(CL30, Backend::Exact);
        let a = one.add(&e(0));
        let b = one.sub(&e(0));
        assert!(a.mul(&b).is_zero());
    }

    #[test]
    fn involution_examples() {
        let e12 = e(0).mul(&e(1));
        assert_eq!(e12.reversion(), e12.neg());
        let e123 = e12.mul(&e(2));
        assert_eq!(e123.reversion(), e123.neg());
        assert_eq!(e(0).grade_involution(), e(0).neg());
        assert_eq!(e12.grade_involution(), e12);
        // 1 + e1 -> 1 - e1
        let one = Multivector::one(CL30, Backend::Exact);
        assert_eq!(one.add(&e(0)).grade_involution(), one.sub(&e(0)));
        // conjugation: paravector flips vector part, fixes scalar
        let para = one.scale_i64(5).add(&e(1).scale_i64(2));
        assert_eq!(
            para.clifford_conjugation(),
            one.scale_i64(5).sub(&e(1).scale_i64(2))
        );
        assert_eq!(e12.clifford_conjugation(), e12.neg());
    }

    #[test]
    fn grade_projection_partitions() {
        let one = Multivector::one(CL30, Backend::Exact);
        let m = one.add(&e(0)).add(&e(0).mul(&e(1)));
        assert_eq!(m.grade_project(1), e(0));
        assert!(m.grade_project(3).is_zero());
        let mut sum = Multivector::zero(CL30, Backend::Exact);
        for k in 0..=3 {
            sum = sum.add(&m.grade_project(k));
        }
        assert_eq!(sum, m);
    }

    #[test]
    fn commutator_examples() {
        let g0 = Multivector::basis_vector(CL13, 0, Backend::Exact);
        assert!(g0.commutator(&g0).is_zero());
        let c = e(0).commutator(&e(1));
        assert_eq!(c, e(0).mul(&e(1)).scale_i64(2));
        let one = Multivector::one(CL30, Backend::Exact);
        assert!(one.commutator(&e(2)).is_zero());
    }

    #[test]
    fn cl30_inverse() {
        // paravector
        let one = Multivector::one(CL30, Backend::Exact);
        let x = one.scale_i64(2).add(&e(0));
        let xi = x.inverse().unwrap();
        assert_eq!(x.mul(&xi), one);
        // general element with grade-2 part
        let z = one.add(&e(0).mul(&e(1)).scale_i64(3)).add(&e(2));
        let zi = z.inverse().unwrap();
        assert_eq!(z.mul(&zi), one);
        // non-invertible idempotent factor
        let ni = one.add(&e(2));
        assert!(ni.inverse().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = Multivector::one(CL13, Backend::Exact)
            .add(&Multivector::basis_blade(CL13, &[0, 2], Backend::Exact).scale(&Scalar::from_ratio(Backend::Exact, -7, 3)))
            .add(&Multivector::basis_vector(CL13, 3, Backend::Exact).scale(&Scalar::i(Backend::Exact)));
        let j = m.to_json();
        let back = Multivector::from_json(&j, Backend::Exact).unwrap();
        assert_eq!(m, back);
    }
}
