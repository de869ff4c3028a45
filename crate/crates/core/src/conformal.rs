//! The paravector conformal model: compactified projective points on the
//! Klein quadric and the unit group of 2x2 Cl(3,0) matrices acting on them
//! through the twisted adjoint representation.

use serde_json::{json, Value};

use crate::algebra::multivector::scalar_to_json;
use crate::algebra::scalar::rational_sqrt;
use crate::algebra::{Backend, Multivector, Scalar, Signature, CL30};
use crate::error::Error;
use crate::repr::mat2::{parse_scalar_array, ParavectorCoeffs};
use crate::repr::Mat2;

/// A projective point `(x, lambda, mu)` with `x` a Cl(3,0) paravector.
/// On the Klein quadric `x xbar = lambda mu`; the normalized form has
/// `mu = 1` and `lambda = x xbar`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParavectorPoint {
    pub x: Multivector,
    pub lambda: Scalar,
    pub mu: Scalar,
}

impl ParavectorPoint {
    pub fn new(x: Multivector, lambda: Scalar, mu: Scalar) -> Self {
        assert_eq!(x.sig(), CL30, "point carrier lives in Cl(3,0)");
        assert!(x.is_paravector(), "x must be a paravector");
        ParavectorPoint { x, lambda, mu }
    }

    pub fn backend(&self) -> Backend {
        self.x.backend()
    }

    /// Matrix form `[[x, lambda], [mu, xbar]]`.
    pub fn to_mat2(&self) -> Mat2 {
        Mat2::new(
            self.x.clone(),
            Multivector::scalar(CL30, self.lambda.clone()),
            Multivector::scalar(CL30, self.mu.clone()),
            self.x.clifford_conjugation(),
        )
    }

    /// The corresponding Cl(4,1) paravector `a5 + a^A E_A`.
    pub fn to_cl41(&self) -> Multivector {
        let half = Scalar::from_ratio(self.backend(), 1, 2);
        let co = ParavectorCoeffs {
            a5: self.x.scalar_part(),
            a0: self.mu.sub(&self.lambda).mul(&half),
            ai: std::array::from_fn(|k| self.x.coeff(1 << k)),
            a4: self.mu.add(&self.lambda).mul(&half),
        };
        co.to_multivector()
    }

    pub fn from_cl41(mv: &Multivector) -> Result<Self, Error> {
        let co = ParavectorCoeffs::from_multivector(mv)?;
        let backend = mv.backend();
        let mut x = Multivector::scalar(CL30, co.a5.clone());
        for (k, c) in co.ai.iter().enumerate() {
            x = x.add(&Multivector::basis_vector(CL30, k as u32, backend).scale(c));
        }
        Ok(ParavectorPoint {
            x,
            lambda: co.a4.sub(&co.a0),
            mu: co.a4.add(&co.a0),
        })
    }

    /// `x xbar - lambda mu` as a scalar.
    pub fn klein_residual(&self) -> Scalar {
        let xxbar = self.x.mul(&self.x.clifford_conjugation());
        debug_assert!(xxbar.is_scalar());
        xxbar.scalar_part().sub(&self.lambda.mul(&self.mu))
    }

    /// Rescale to `mu = 1`; errors at infinity.
    pub fn normalize(&self) -> Result<ParavectorPoint, Error> {
        let inv = match self.backend() {
            Backend::Exact => self.mu.inv(),
            Backend::Float => {
                if self.mu.magnitude() < 1e-12 {
                    None
                } else {
                    self.mu.inv()
                }
            }
        }
        .ok_or(Error::AtInfinity)?;
        Ok(ParavectorPoint {
            x: self.x.scale(&inv),
            lambda: self.lambda.mul(&inv),
            mu: Scalar::one(self.backend()),
        })
    }

    pub fn projectively_eq(&self, rhs: &ParavectorPoint) -> bool {
        self.to_cl41().projectively_eq(&rhs.to_cl41())
    }

    pub fn to_json(&self) -> Value {
        let (lr, li) = scalar_to_json(&self.lambda);
        let (mr, mi) = scalar_to_json(&self.mu);
        json!({
            "x": paravector_coeff_array(&self.x),
            "lambda": {"re": lr, "im": li},
            "mu": {"re": mr, "im": mi},
        })
    }
}

/// The four coefficients `[a5, a1, a2, a3]` of a Cl(3,0) paravector.
pub fn paravector_coeff_array(x: &Multivector) -> Value {
    let coeffs = [x.scalar_part(), x.coeff(1), x.coeff(2), x.coeff(4)];
    Value::Array(
        coeffs
            .iter()
            .map(|s| {
                let (re, im) = scalar_to_json(s);
                if s.is_real() {
                    re
                } else {
                    json!([re, im])
                }
            })
            .collect(),
    )
}

/// Build a Cl(3,0) paravector from `[a5, a1, a2, a3]` coefficients.
pub fn paravector_from_coeffs(coeffs: &[Scalar]) -> Multivector {
    assert_eq!(coeffs.len(), 4, "paravector takes 4 coefficients");
    let backend = coeffs[0].backend();
    let mut x = Multivector::scalar(CL30, coeffs[0].clone());
    for k in 0..3 {
        x = x.add(&Multivector::basis_vector(CL30, k as u32, backend).scale(&coeffs[k + 1]));
    }
    x
}

/// Parse a paravector from a JSON 4-array.
pub fn paravector_from_json(v: &Value, backend: Backend) -> Result<Multivector, Error> {
    let coeffs = parse_scalar_array(v, backend)?;
    if coeffs.len() != 4 {
        return Err(Error::invalid("point must be a 4-array [a5,a1,a2,a3]"));
    }
    Ok(paravector_from_coeffs(&coeffs))
}

/// Conformal compactification `x -> (x, g(x,x), 1)` of a Cl(3,0)
/// paravector; the image lies on the Klein quadric.
pub fn compactify(x: &Multivector) -> ParavectorPoint {
    assert!(x.is_paravector() && x.sig() == CL30);
    let xxbar = x.mul(&x.clifford_conjugation()).scalar_part();
    ParavectorPoint {
        x: x.clone(),
        lambda: xxbar,
        mu: Scalar::one(x.backend()),
    }
}

/// Generic compactification of a coordinate vector in R^{p,q}: returns
/// the extended coordinates together with `(lambda, mu) = (g(x,x), 1)`.
pub fn compactify_coords(sig: Signature, coords: &[Scalar]) -> (Vec<Scalar>, Scalar, Scalar) {
    assert_eq!(coords.len(), sig.dim() as usize);
    let backend = coords
        .first()
        .map(Scalar::backend)
        .unwrap_or(Backend::Exact);
    let mut q = Scalar::zero(backend);
    for (i, c) in coords.iter().enumerate() {
        let sq = c.mul(c).mul_i64(sig.generator_square(i as u32) as i64);
        q = q.add(&sq);
    }
    (coords.to_vec(), q, Scalar::one(backend))
}

/// True iff the point satisfies the quadric equation; also cross-checks
/// that the full Cl(4,1) product `b bbar` vanishes iff the scalar form
/// does.
pub fn klein_check(point: &ParavectorPoint) -> bool {
    let residual = point.klein_residual();
    match point.backend() {
        Backend::Exact => {
            let scalar_zero = residual.is_zero();
            // equivalently, the full Cl(4,1) product b bbar vanishes
            let b = point.to_cl41();
            let full_zero = b.mul(&b.clifford_conjugation()).is_zero();
            assert_eq!(
                scalar_zero, full_zero,
                "scalar Klein form and Cl(4,1) product disagree"
            );
            scalar_zero
        }
        Backend::Float => {
            let scale = point.x.magnitude().powi(2)
                + point.lambda.magnitude() * point.mu.magnitude();
            residual.magnitude() < 1e-9 * (1.0 + scale)
        }
    }
}

// ---------------------------------------------------------------------
// The unit group and its action.
// ---------------------------------------------------------------------

/// An element of the conformal double cover: a 2x2 Cl(3,0) matrix `g`
/// with `g * conj(g) = 1`, checked at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct MobiusElement {
    m: Mat2,
}

impl MobiusElement {
    pub fn new(m: Mat2) -> Result<Self, Error> {
        let prod = m.mul(&m.conjugation_matrix());
        let scale = m.magnitude();
        let ok = prod
            .sub(&Mat2::identity(m.backend()))
            .is_small_relative(scale * scale);
        if ok {
            Ok(MobiusElement { m })
        } else {
            Err(Error::NotUnit)
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn backend(&self) -> Backend {
        self.m.backend()
    }

    pub fn identity(backend: Backend) -> Self {
        MobiusElement {
            m: Mat2::identity(backend),
        }
    }

    /// `x -> x + h` for a paravector `h`: matrix `[[1, h], [0, 1]]`.
    pub fn translation(h: &Multivector) -> Result<Self, Error> {
        if !(h.sig() == CL30 && h.is_paravector()) {
            return Err(Error::NotParavector);
        }
        let backend = h.backend();
        let one = Multivector::one(CL30, backend);
        let zero = Multivector::zero(CL30, backend);
        MobiusElement::new(Mat2::new(one.clone(), h.clone(), zero, one))
    }

    /// `x -> rho x` for `rho > 0`: matrix `diag(sqrt(rho), 1/sqrt(rho))`.
    /// Exact mode requires `rho` to be the square of a rational.
    pub fn dilation(rho: &Scalar) -> Result<Self, Error> {
        if !rho.is_real() {
            return Err(Error::NotASquare);
        }
        let backend = rho.backend();
        let root = match rho {
            Scalar::Exact { re, .. } => rational_sqrt(re)
                .filter(|r| !num::Zero::is_zero(r))
                .map(Scalar::from_rational)
                .ok_or(Error::NotASquare)?,
            Scalar::Float { re, .. } => {
                if *re <= 0.0 {
                    return Err(Error::NotASquare);
                }
                Scalar::from_f64(re.sqrt(), 0.0)
            }
        };
        let inv = root.inv().expect("nonzero root");
        let zero = Multivector::zero(CL30, backend);
        MobiusElement::new(Mat2::new(
            Multivector::scalar(CL30, root),
            zero.clone(),
            zero,
            Multivector::scalar(CL30, inv),
        ))
    }

    /// `x -> g x ghat^{-1}` for a unit rotor `g`: matrix `diag(g, ghat)`.
    pub fn rotation(rotor: &Multivector) -> Result<Self, Error> {
        assert_eq!(rotor.sig(), CL30, "rotor lives in Cl(3,0)");
        let backend = rotor.backend();
        let unit = rotor
            .mul(&rotor.clifford_conjugation())
            .sub(&Multivector::one(CL30, backend));
        if !unit.is_zero_or_small() {
            return Err(Error::NotUnit);
        }
        let zero = Multivector::zero(CL30, backend);
        MobiusElement::new(Mat2::new(
            rotor.clone(),
            zero.clone(),
            zero,
            rotor.grade_involution(),
        ))
    }

    /// `x -> -xbar` on the unit quadric, `-x^{-1}` projectively:
    /// matrix `[[0, -1], [1, 0]]`.
    pub fn inversion(backend: Backend) -> Self {
        let one = Multivector::one(CL30, backend);
        let zero = Multivector::zero(CL30, backend);
        MobiusElement::new(Mat2::new(zero.clone(), one.neg(), one, zero))
            .expect("inversion matrix is unit")
    }

    /// `x -> x (h x + 1)^{-1}`: matrix `[[1, 0], [h, 1]]`.
    pub fn transvection(h: &Multivector) -> Result<Self, Error> {
        if !(h.sig() == CL30 && h.is_paravector()) {
            return Err(Error::NotParavector);
        }
        let backend = h.backend();
        let one = Multivector::one(CL30, backend);
        let zero = Multivector::zero(CL30, backend);
        MobiusElement::new(Mat2::new(one.clone(), zero, h.clone(), one))
    }

    /// Matrix product; the action composes accordingly.
    pub fn compose(&self, rhs: &MobiusElement) -> MobiusElement {
        let m = self.m.mul(&rhs.m);
        debug_assert!(
            MobiusElement::new(m.clone()).is_ok(),
            "product of unit elements stays unit"
        );
        MobiusElement { m }
    }

    /// Apply `x' = (a x + c)(b x + d)^{-1}`, returning the normalized
    /// image and the conformal factor `Delta = (bx+d) conj(bx+d)`.
    /// `Delta = 0` means the point maps to infinity.
    pub fn apply(&self, x: &Multivector) -> Result<(Multivector, Scalar), Error> {
        assert!(x.is_paravector() && x.sig() == CL30);
        let num = self.m.a.mul(x).add(&self.m.c);
        let den = self.m.b.mul(x).add(&self.m.d);
        // float noise in the product scales with den^2, not with Delta
        let den_scale = den.magnitude();
        let cutoff = match self.backend() {
            Backend::Exact => 0.0,
            Backend::Float => 1e-11 * (1.0 + den_scale * den_scale),
        };
        let delta_mv = den.mul(&den.clifford_conjugation()).prune_below(cutoff);
        assert!(
            delta_mv.is_scalar(),
            "conformal factor of a unit element is a real scalar"
        );
        let delta = delta_mv.scalar_part();
        if delta.is_zero() {
            return Err(Error::AtInfinity);
        }
        let image = num.mul(&den.inverse()?).prune_noise();
        let image = image.grade_project(0).add(&image.grade_project(1));
        Ok((image, delta))
    }

    /// Full projective action `b -> g b g~` on the matrix form of a
    /// point; defined even where the affine formula hits infinity.
    pub fn twisted_adjoint(&self, point: &ParavectorPoint) -> ParavectorPoint {
        let sandwich = self.m.mul(&point.to_mat2()).mul(&self.m.reversion_matrix());
        // noise in every entry scales with the whole sandwich
        let cutoff = match self.backend() {
            Backend::Exact => 0.0,
            Backend::Float => 1e-11 * (1.0 + sandwich.magnitude()),
        };
        let sandwich = Mat2::new(
            sandwich.a.prune_below(cutoff),
            sandwich.c.prune_below(cutoff),
            sandwich.b.prune_below(cutoff),
            sandwich.d.prune_below(cutoff),
        );
        let x = sandwich.a.clone();
        debug_assert!(
            sandwich
                .d
                .sub(&x.clifford_conjugation())
                .is_small_relative(sandwich.magnitude()),
            "sandwich preserves the point form"
        );
        ParavectorPoint::new(
            x,
            sandwich.c.scalar_part(),
            sandwich.b.scalar_part(),
        )
    }
}

/// Parse a map specification:
/// `{"type":"translation","h":[...]}`, `{"type":"dilation","rho":"4"}`,
/// `{"type":"rotation","rotor":<multivector>}`, `{"type":"inversion"}`,
/// `{"type":"transvection","h":[...]}`, or
/// `{"type":"compose","maps":[...]}` (leftmost acts last).
pub fn mobius_from_json(v: &Value, backend: Backend) -> Result<MobiusElement, Error> {
    let kind = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::invalid("map: missing \"type\""))?;
    match kind {
        "translation" | "transvection" => {
            let h = v
                .get("h")
                .ok_or_else(|| Error::invalid("map: missing \"h\""))?;
            let h = paravector_from_json(h, backend)?;
            if kind == "translation" {
                MobiusElement::translation(&h)
            } else {
                MobiusElement::transvection(&h)
            }
        }
        "dilation" => {
            let rho = v
                .get("rho")
                .ok_or_else(|| Error::invalid("map: missing \"rho\""))?;
            let rho = crate::algebra::multivector::scalar_from_json(Some(rho), None, backend)?;
            MobiusElement::dilation(&rho)
        }
        "rotation" => {
            let rotor = v
                .get("rotor")
                .ok_or_else(|| Error::invalid("map: missing \"rotor\""))?;
            let rotor = Multivector::from_json(rotor, backend)?;
            if rotor.sig() != CL30 {
                return Err(Error::invalid("rotor must have sig [3,0]"));
            }
            MobiusElement::rotation(&rotor)
        }
        "inversion" => Ok(MobiusElement::inversion(backend)),
        "compose" => {
            let maps = v
                .get("maps")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::invalid("map: missing \"maps\""))?;
            let mut acc = MobiusElement::identity(backend);
            for spec in maps {
                acc = acc.compose(&mobius_from_json(spec, backend)?);
            }
            Ok(acc)
        }
        other => Err(Error::invalid(format!("unknown map type {other:?}"))),
    }
}
