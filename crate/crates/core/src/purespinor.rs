//! Fock-basis spinor spaces for complexified Cl(2n): Clifford action,
//! annihilator subspaces and purity, charge conjugation, flag vectors,
//! Penrose and generalized flagpoles, and orbit/coset dimensions.
//!
//! The construction uses the Witt basis `a_i = (e_{2i-1} - i e_{2i})/2`,
//! `a_i* = (e_{2i-1} + i e_{2i})/2` over an orthonormal basis of C^{2n}
//! with `Q(e_j) = 1`; spinors are indexed by occupation subsets of
//! `{1..n}`. Spinor bilinears map to multivectors through the vacuum
//! column idempotent and trace orthogonality over the blade matrices.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::blade::{reversion_sign, Signature};
use crate::algebra::multivector::{scalar_from_json, scalar_to_json};
use crate::algebra::{Backend, Multivector, Scalar};
use crate::error::Error;
use crate::linalg;

pub const MAX_N: u32 = 5;

/// A spinor over the occupation basis of subsets of `{1..n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockSpinor {
    n: u32,
    backend: Backend,
    terms: BTreeMap<u32, Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl FockSpinor {
    pub fn zero(n: u32, backend: Backend) -> Self {
        assert!((1..=MAX_N).contains(&n), "n out of range");
        FockSpinor {
            n,
            backend,
            terms: BTreeMap::new(),
        }
    }

    /// The vacuum `|{}>`.
    pub fn vacuum(n: u32, backend: Backend) -> Self {
        Self::basis_state(n, 0, backend)
    }

    /// A single occupation state from a bitmask over `{1..n}` (bit `i-1`
    /// set means element `i` occupied).
    pub fn basis_state(n: u32, occ: u32, backend: Backend) -> Self {
        assert!(occ < (1 << n), "occupation outside {{1..n}}");
        let mut s = FockSpinor::zero(n, backend);
        s.terms.insert(occ, Scalar::one(backend));
        s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, occ: u32) -> Scalar {
        self.terms
            .get(&occ)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.backend))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(m, s)| (*m, s))
    }

    fn insert(&mut self, occ: u32, s: Scalar) {
        if s.is_zero() {
            self.terms.remove(&occ);
        } else {
            self.terms.insert(occ, s);
        }
    }

    pub fn add(&self, rhs: &FockSpinor) -> FockSpinor {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (occ, s) in rhs.terms() {
            let cur = out.coeff(occ).add(s);
            out.insert(occ, cur);
        }
        out
    }

    pub fn sub(&self, rhs: &FockSpinor) -> FockSpinor {
        self.add(&rhs.scale(&Scalar::from_i64(rhs.backend, -1)))
    }

    pub fn scale(&self, k: &Scalar) -> FockSpinor {
        let mut out = FockSpinor::zero(self.n, self.backend);
        if k.is_zero() {
            return out;
        }
        for (occ, s) in self.terms() {
            out.insert(occ, s.mul(k));
        }
        out
    }

    /// Parity tag when homogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut parities = self.terms().map(|(occ, _)| occ.count_ones() % 2);
        let first = parities.next()?;
        if parities.all(|p| p == first) {
            Some(if first == 0 { Parity::Even } else { Parity::Odd })
        } else {
            None
        }
    }

    /// Fock coefficients as a dense column.
    pub fn to_column(&self) -> Vec<Scalar> {
        (0..self.dim() as u32).map(|occ| self.coeff(occ)).collect()
    }

    pub fn magnitude(&self) -> f64 {
        self.terms().map(|(_, s)| s.magnitude()).fold(0.0, f64::max)
    }

    /// Exact zero, or below 1e-9 in every coefficient for floats.
    pub fn is_zero_or_small(&self) -> bool {
        match self.backend {
            Backend::Exact => self.is_zero(),
            Backend::Float => self.magnitude() < 1e-9,
        }
    }

    // JSON form: {"n":n,"terms":[{"occ":[i,...],"re":...,"im":...}]}
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(occ, s)| {
                let occ_list: Vec<u32> = (0..self.n).filter(|i| occ & (1 << i) != 0).map(|i| i + 1).collect();
                let (re, im) = scalar_to_json(s);
                json!({"occ": occ_list, "re": re, "im": im})
            })
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn from_json(v: &Value, backend: Backend) -> Result<FockSpinor, Error> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::invalid("fock spinor: missing \"n\""))? as u32;
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::invalid("fock spinor: n out of range (1..=5)"));
        }
        let mut out = FockSpinor::zero(n, backend);
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("fock spinor: missing \"terms\""))?;
        for t in terms {
            let occ_list = t
                .get("occ")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::invalid("term: missing \"occ\""))?;
            let mut occ = 0u32;
            for o in occ_list {
                let i = o
                    .as_u64()
                    .ok_or_else(|| Error::invalid("term: bad occupation index"))? as u32;
                if i < 1 || i > n {
                    return Err(Error::invalid("term: occupation index outside 1..=n"));
                }
                occ |= 1 << (i - 1);
            }
            let s = scalar_from_json(t.get("re"), t.get("im"), backend)?;
            let cur = out.coeff(occ).add(&s);
            out.insert(occ, cur);
        }
        Ok(out)
    }
}

/// Fermionic reordering sign: `(-1)^{#{k in S : k < i}}` for 1-based `i`.
fn occupation_sign(occ: u32, i: u32) -> i64 {
    let below = occ & ((1 << (i - 1)) - 1);
    if below.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Action of the orthonormal basis vector `e_j` (1-based, `j <= 2n`).
pub fn apply_basis_vector(j: u32, u: &FockSpinor) -> FockSpinor {
    assert!(j >= 1 && j <= 2 * u.n, "basis index out of range");
    let i = j.div_ceil(2); // Witt pair index, 1-based
    let bit = 1u32 << (i - 1);
    let mut out = FockSpinor::zero(u.n, u.backend);
    for (occ, c) in u.terms() {
        let sign = occupation_sign(occ, i);
        let target = occ ^ bit;
        let coeff = if j % 2 == 1 {
            // e_{2i-1} = a_i + a_i*
            c.mul_i64(sign)
        } else {
            // e_{2i} = i (a_i - a_i*): annihilation keeps +, creation -
            let branch = if occ & bit != 0 { 1 } else { -1 };
            c.mul_i64(sign * branch).mul_imag()
        };
        let cur = out.coeff(target).add(&coeff);
        out.insert(target, cur);
    }
    out
}

/// Clifford action of a coefficient vector `v in C^{2n}` on a spinor.
pub fn vector_action(v: &[Scalar], u: &FockSpinor) -> FockSpinor {
    assert_eq!(v.len(), 2 * u.n as usize, "dimension mismatch");
    let mut out = FockSpinor::zero(u.n, u.backend);
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = out.add(&apply_basis_vector(j as u32 + 1, u).scale(c));
    }
    out
}

/// The complex quadratic form `Q(v) = sum v_j^2`.
pub fn quadratic_form(v: &[Scalar]) -> Scalar {
    let backend = v.first().map(Scalar::backend).unwrap_or(Backend::Exact);
    v.iter()
        .fold(Scalar::zero(backend), |acc, c| acc.add(&c.mul(c)))
}

/// Polarization `B(v, w) = sum v_j w_j`.
pub fn polarization(v: &[Scalar], w: &[Scalar]) -> Scalar {
    let backend = v.first().map(Scalar::backend).unwrap_or(Backend::Exact);
    v.iter()
        .zip(w)
        .fold(Scalar::zero(backend), |acc, (a, b)| acc.add(&a.mul(b)))
}

/// A totally null subspace of C^{2n}, stored by a deterministic basis.
#[derive(Clone, Debug)]
pub struct IsotropicSubspace {
    pub basis: Vec<Vec<Scalar>>,
    pub dim: usize,
}

/// The annihilator `{v in C^{2n} : v . u = 0}` as the exact kernel of
/// the action map.
pub fn annihilator(u: &FockSpinor) -> Result<IsotropicSubspace, Error> {
    if u.is_zero() {
        return Err(Error::ZeroSpinor);
    }
    let cols = 2 * u.n as usize;
    // rows: one per Fock component, columns indexed by e_j
    let images: Vec<Vec<Scalar>> = (1..=cols as u32)
        .map(|j| apply_basis_vector(j, u).to_column())
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..u.dim())
        .map(|s| (0..cols).map(|j| images[j][s].clone()).collect())
        .collect();
    let basis = linalg::kernel_basis(rows, cols, u.backend);
    let dim = basis.len();
    Ok(IsotropicSubspace { basis, dim })
}

/// A spinor is pure when its annihilator has the maximal dimension `n`.
pub fn is_pure(u: &FockSpinor) -> Result<bool, Error> {
    Ok(annihilator(u)?.dim == u.n as usize)
}

/// Sign table of the charge-conjugation / bilinear pairing:
/// `s(S) = (-1)^{sum_{i in S} (i-1)}`.
fn pairing_sign(occ: u32) -> i64 {
    let mut total = 0u32;
    let mut m = occ;
    while m != 0 {
        let i = m.trailing_zeros(); // i-1 for the 1-based element
        total += i;
        m &= m - 1;
    }
    if total.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Charge conjugation: the antilinear map `|S> -> s(S) |S^c>` fixed by
/// demanding `(v u)_C = conj(v) u_C` for every real basis vector.
pub fn charge_conjugate(u: &FockSpinor) -> FockSpinor {
    let full = (1u32 << u.n) - 1;
    let mut out = FockSpinor::zero(u.n, u.backend);
    for (occ, c) in u.terms() {
        let target = full ^ occ;
        let cur = out
            .coeff(target)
            .add(&c.conj().mul_i64(pairing_sign(occ)));
        out.insert(target, cur);
    }
    out
}

/// Global sign of double conjugation, `C^2 = (-1)^{n(n-1)/2}`.
pub fn double_conjugation_sign(n: u32) -> i64 {
    if (n * (n - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------
// Spinor bilinears as multivectors of Cl(2n).
// ---------------------------------------------------------------------

fn cl2n(n: u32) -> Signature {
    Signature::new(2 * n, 0)
}

/// Row of the reversion-compatible bilinear form:
/// `row(v)_T = s(T^c) v_{T^c}`.
fn beta_row(v: &FockSpinor) -> Vec<Scalar> {
    let full = (1u32 << v.n) - 1;
    (0..v.dim() as u32)
        .map(|t| {
            let tc = full ^ t;
            v.coeff(tc).mul_i64(pairing_sign(tc))
        })
        .collect()
}

/// Column action of a blade (ascending product of `e_j` for set bits of
/// `mask`, 1-based `j = bit + 1`) on a basis state: returns
/// `(target state, phase)`.
fn blade_column(n: u32, mask: u32, state: u32, backend: Backend) -> (u32, Scalar) {
    let mut phase = Scalar::one(backend);
    let mut cur = state;
    // rightmost factor acts first: descending bit order
    for bit in (0..2 * n).rev() {
        if mask & (1 << bit) == 0 {
            continue;
        }
        let j = bit + 1;
        let i = j.div_ceil(2);
        let occ_bit = 1u32 << (i - 1);
        let sign = occupation_sign(cur, i);
        if j % 2 == 1 {
            phase = phase.mul_i64(sign);
        } else {
            let branch = if cur & occ_bit != 0 { 1 } else { -1 };
            phase = phase.mul_i64(sign * branch).mul_imag();
        }
        cur ^= occ_bit;
    }
    (cur, phase)
}

/// Decompose the rank-one operator `col * row^T` into a multivector of
/// Cl(2n) by trace orthogonality over the blade matrices.
fn multivector_of_rank_one(n: u32, col: &FockSpinor, row: &[Scalar]) -> Multivector {
    let backend = col.backend;
    let sig = cl2n(n);
    let dim = 1usize << n;
    let col_dense = col.to_column();
    let norm = Scalar::from_ratio(backend, 1, dim as i64);
    let mut terms = Vec::new();
    for mask in 0..(1u32 << (2 * n)) {
        // tr(G_B M) = sum_k phase_k * M[k][target_k]
        //           = sum_k phase_k * col_k_target... M[a][b] = col_a row_b
        // with G_B |k> = phase_k |target_k>: tr = sum_k phase_k col_{k}? no:
        // (G_B M)[j][j] = sum_k G_B[j][k] M[k][j]; G_B[target_k][k]=phase_k
        // => tr = sum_k phase_k M[k][target_k] = sum_k phase_k col_k row_{target_k}
        let mut tr = Scalar::zero(backend);
        for k in 0..dim as u32 {
            if col_dense[k as usize].is_zero() {
                continue;
            }
            let (target, phase) = blade_column(n, mask, k, backend);
            let term = phase.mul(&col_dense[k as usize]).mul(&row[target as usize]);
            tr = tr.add(&term);
        }
        if tr.is_zero() {
            continue;
        }
        let k_grade = mask.count_ones();
        let sq = reversion_sign(k_grade); // blade inverse sign, all e_j^2 = 1
        terms.push((mask as u16, tr.mul_i64(sq as i64).mul(&norm)));
    }
    Multivector::from_terms(sig, backend, terms)
}

/// The bilinear `u * rev-dual(v)` as a multivector of Cl(2n).
pub fn bilinear_multivector(u: &FockSpinor, v: &FockSpinor) -> Multivector {
    assert_eq!(u.n, v.n);
    multivector_of_rank_one(u.n, u, &beta_row(v))
}

fn real_part(mv: &Multivector) -> Multivector {
    mv.add(&mv.conjugate_scalars())
        .scale(&Scalar::from_ratio(mv.backend(), 1, 2))
}

fn imag_part(mv: &Multivector) -> Multivector {
    mv.sub(&mv.conjugate_scalars())
        .scale(&Scalar::from_ratio(mv.backend(), 1, 2))
        .scale(&Scalar::i(mv.backend()).neg())
}

/// The flag vector `p = <i u u_C>_1`. For parity-homogeneous (Weyl)
/// inputs this vanishes identically in the fixed real structure: the
/// pairing couples equal-parity components, so the bilinear carries only
/// even grades. Mixed-parity pinors produce nonzero flag vectors.
pub fn flag_vector(u: &FockSpinor) -> Multivector {
    let uc = charge_conjugate(u);
    bilinear_multivector(u, &uc)
        .scale(&Scalar::i(u.backend))
        .grade_project(1)
}

/// The Penrose flagpole 2-form `F = Re <i u u~>_2`.
pub fn penrose_flagpole(u: &FockSpinor) -> Multivector {
    real_part(
        &bilinear_multivector(u, u)
            .scale(&Scalar::i(u.backend))
            .grade_project(2),
    )
}

/// The generalized flagpole `G = (i u u~ - i u_C u_C~)/2` at grade 2.
pub fn generalized_flagpole(u: &FockSpinor) -> Multivector {
    let i = Scalar::i(u.backend);
    let a = bilinear_multivector(u, u).scale(&i).grade_project(2);
    let uc = charge_conjugate(u);
    let b = bilinear_multivector(&uc, &uc).scale(&i).grade_project(2);
    a.sub(&b).scale(&Scalar::from_ratio(u.backend, 1, 2))
}

/// Verifies `-i u_C u_C~ = conj(i u u~)` for the pinned intertwiner; the
/// phase-rotation law of `G` is conditional on it.
pub fn conjugation_identity_holds(u: &FockSpinor) -> bool {
    let i = Scalar::i(u.backend);
    let a = bilinear_multivector(u, u).scale(&i);
    let uc = charge_conjugate(u);
    let b = bilinear_multivector(&uc, &uc).scale(&i).neg();
    b.sub(&a.conjugate_scalars()).is_zero_or_small()
}

/// Decomposition helpers for the rotation law:
/// `G(e^{i t} u) = cos(2t) Re(i u u~)_2 - sin(2t) Im(i u u~)_2`.
pub fn flagpole_phase_components(u: &FockSpinor) -> (Multivector, Multivector) {
    let a = bilinear_multivector(u, u)
        .scale(&Scalar::i(u.backend))
        .grade_project(2);
    (real_part(&a), imag_part(&a))
}

/// Real dimension of the orbit of the projective class `[u]` under the
/// bivector algebra so(2n): the rank of `X -> X u` into the tangent
/// space of projective spinor space.
pub fn orbit_dimension(u: &FockSpinor) -> Result<usize, Error> {
    if !is_pure(u)? {
        return Err(Error::NotPure);
    }
    let backend = u.backend;
    let dim = u.dim();
    // real coordinates: [Re; Im] of each Fock component
    let realify = |w: &FockSpinor| -> Vec<Scalar> {
        let col = w.to_column();
        let mut row = Vec::with_capacity(2 * dim);
        for c in &col {
            row.push(c.re());
        }
        for c in &col {
            row.push(c.im());
        }
        row
    };
    let mut rows = Vec::new();
    for i in 1..=2 * u.n {
        for j in (i + 1)..=2 * u.n {
            let w = apply_basis_vector(i, &apply_basis_vector(j, u));
            rows.push(realify(&w));
        }
    }
    // quotient by the complex scalar direction: span{u, iu}
    rows.push(realify(u));
    rows.push(realify(&u.scale(&Scalar::i(backend))));
    let total = linalg::rank(rows);
    Ok(total - 2)
}

/// `dim SO(2n) - dim U(n) = n(n-1)`.
pub fn coset_dim(n: u32) -> Result<u32, Error> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    Ok(n * (n - 1))
}
