//! Generators of the spacetime conformal Lie algebra inside complexified
//! Cl(1,3), and machine verification of their commutation table.
//!
//! With `g5 = g0 g1 g2 g3` and metric `diag(1,-1,-1,-1)`:
//!   `P_mu = (g_mu + i g_mu g5)/2`, `K_mu = -(g_mu - i g_mu g5)/2`,
//!   `D = i g5 / 2`, `M_{mu nu} = (g_mu ^ g_nu)/2`.
//!
//! Bivector order: the table closes with `M_{mu nu} = (g_mu ^ g_nu)/2`;
//! with the opposite order the `[M,P]`, `[M,K]` and `[P,K]` families flip
//! sign and fail. The reports carry this convention as a note.

use crate::algebra::{Backend, Multivector, Scalar, CL13};
use crate::error::Error;
use crate::par;
use crate::repr::GammaRep;
use crate::verify::report::{Check, Residual, SuiteReport};

pub const METRIC: [i64; 4] = [1, -1, -1, -1];

pub const M_CONVENTION_NOTE: &str =
    "bivector generators use M[mu][nu] = (g_mu ^ g_nu)/2; all nine families close with this order";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    P,
    K,
    D,
    M,
}

/// A conformal generator: its kind, indices and multivector value.
#[derive(Clone, Debug)]
pub struct ConfGenerator {
    pub kind: GeneratorKind,
    pub indices: Vec<usize>,
    pub value: Multivector,
}

fn gamma(mu: usize, backend: Backend) -> Multivector {
    Multivector::basis_vector(CL13, mu as u32, backend)
}

fn gamma5(backend: Backend) -> Multivector {
    gamma(0, backend)
        .mul(&gamma(1, backend))
        .mul(&gamma(2, backend))
        .mul(&gamma(3, backend))
}

/// Antisymmetrized product of two vectors: `(ab - ba)/2`.
fn wedge(a: &Multivector, b: &Multivector) -> Multivector {
    a.commutator(b).scale(&Scalar::from_ratio(a.backend(), 1, 2))
}

/// Build a generator from its defining formula.
pub fn generator(kind: GeneratorKind, indices: &[usize], backend: Backend) -> Result<ConfGenerator, Error> {
    let half = Scalar::from_ratio(backend, 1, 2);
    let i = Scalar::i(backend);
    let value = match (kind, indices) {
        (GeneratorKind::P, [mu]) if *mu < 4 => {
            let g = gamma(*mu, backend);
            g.add(&g.mul(&gamma5(backend)).scale(&i)).scale(&half)
        }
        (GeneratorKind::K, [mu]) if *mu < 4 => {
            let g = gamma(*mu, backend);
            g.sub(&g.mul(&gamma5(backend)).scale(&i))
                .scale(&half)
                .neg()
        }
        (GeneratorKind::D, []) => gamma5(backend).scale(&i).scale(&half),
        (GeneratorKind::M, [mu, nu]) if *mu < 4 && *nu < 4 && mu != nu => {
            wedge(&gamma(*mu, backend), &gamma(*nu, backend)).scale(&half)
        }
        _ => return Err(Error::invalid("bad generator indices")),
    };
    Ok(ConfGenerator {
        kind,
        indices: indices.to_vec(),
        value,
    })
}

/// The full generator set; `m[mu][nu]` is antisymmetric with zero
/// diagonal.
#[derive(Clone)]
pub struct ConfAlgebra {
    pub p: [Multivector; 4],
    pub k: [Multivector; 4],
    pub d: Multivector,
    pub m: Vec<Vec<Multivector>>,
}

impl ConfAlgebra {
    pub fn new(backend: Backend) -> ConfAlgebra {
        let p = std::array::from_fn(|mu| {
            generator(GeneratorKind::P, &[mu], backend).unwrap().value
        });
        let k = std::array::from_fn(|mu| {
            generator(GeneratorKind::K, &[mu], backend).unwrap().value
        });
        let d = generator(GeneratorKind::D, &[], backend).unwrap().value;
        let m = (0..4)
            .map(|mu| {
                (0..4)
                    .map(|nu| {
                        if mu == nu {
                            Multivector::zero(CL13, backend)
                        } else {
                            generator(GeneratorKind::M, &[mu, nu], backend).unwrap().value
                        }
                    })
                    .collect()
            })
            .collect();
        ConfAlgebra { p, k, d, m }
    }

    /// The substitution `P -> -K, K -> -P, D -> -D` that leaves the
    /// table invariant.
    pub fn duality_image(&self) -> ConfAlgebra {
        ConfAlgebra {
            p: std::array::from_fn(|mu| self.k[mu].neg()),
            k: std::array::from_fn(|mu| self.p[mu].neg()),
            d: self.d.neg(),
            m: self.m.clone(),
        }
    }

    fn backend(&self) -> Backend {
        self.d.backend()
    }
}

/// One relation instance: identifier, index tuple, and `lhs - rhs`.
fn relation_residual(alg: &ConfAlgebra, family: usize, idx: &[usize]) -> (String, Multivector) {
    let g = |n: i64, mv: &Multivector| mv.scale_i64(n);
    let metric = |a: usize, b: usize| if a == b { METRIC[a] } else { 0 };
    match (family, idx) {
        // [P_mu, P_nu] = 0
        (0, &[mu, nu]) => ("comm.PP".into(), alg.p[mu].commutator(&alg.p[nu])),
        // [K_mu, K_nu] = 0
        (1, &[mu, nu]) => ("comm.KK".into(), alg.k[mu].commutator(&alg.k[nu])),
        // [M_{mu nu}, D] = 0
        (2, &[mu, nu]) => ("comm.MD".into(), alg.m[mu][nu].commutator(&alg.d)),
        // [M_{mu nu}, P_lam] = -(g_{mu lam} P_nu - g_{nu lam} P_mu)
        (3, &[mu, nu, lam]) => {
            let lhs = alg.m[mu][nu].commutator(&alg.p[lam]);
            let rhs = g(-metric(mu, lam), &alg.p[nu]).sub(&g(-metric(nu, lam), &alg.p[mu]));
            ("comm.MP".into(), lhs.sub(&rhs))
        }
        // [M_{mu nu}, K_lam] = -(g_{mu lam} K_nu - g_{nu lam} K_mu)
        (4, &[mu, nu, lam]) => {
            let lhs = alg.m[mu][nu].commutator(&alg.k[lam]);
            let rhs = g(-metric(mu, lam), &alg.k[nu]).sub(&g(-metric(nu, lam), &alg.k[mu]));
            ("comm.MK".into(), lhs.sub(&rhs))
        }
        // [M_{mu nu}, M_{sig rho}] =
        //   g_{mu rho} M_{nu sig} + g_{nu sig} M_{mu rho}
        //   - g_{mu sig} M_{nu rho} - g_{nu rho} M_{mu sig}
        (5, &[mu, nu, sg, rho]) => {
            let lhs = alg.m[mu][nu].commutator(&alg.m[sg][rho]);
            let rhs = g(metric(mu, rho), &alg.m[nu][sg])
                .add(&g(metric(nu, sg), &alg.m[mu][rho]))
                .sub(&g(metric(mu, sg), &alg.m[nu][rho]))
                .sub(&g(metric(nu, rho), &alg.m[mu][sg]));
            ("comm.MM".into(), lhs.sub(&rhs))
        }
        // [P_mu, K_nu] = 2 (g_{mu nu} D - M_{mu nu})
        (6, &[mu, nu]) => {
            let lhs = alg.p[mu].commutator(&alg.k[nu]);
            let rhs = g(2 * metric(mu, nu), &alg.d).sub(&g(2, &alg.m[mu][nu]));
            ("comm.PK".into(), lhs.sub(&rhs))
        }
        // [P_mu, D] = P_mu
        (7, &[mu]) => {
            let lhs = alg.p[mu].commutator(&alg.d);
            ("comm.PD".into(), lhs.sub(&alg.p[mu]))
        }
        // [K_mu, D] = -K_mu
        (8, &[mu]) => {
            let lhs = alg.k[mu].commutator(&alg.d);
            ("comm.KD".into(), lhs.add(&alg.k[mu]))
        }
        _ => unreachable!("bad relation descriptor"),
    }
}

fn relation_instances() -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    let r = 0..4usize;
    for mu in r.clone() {
        for nu in r.clone() {
            out.push((0, vec![mu, nu]));
            out.push((1, vec![mu, nu]));
            out.push((6, vec![mu, nu]));
            if mu != nu {
                out.push((2, vec![mu, nu]));
                for lam in r.clone() {
                    out.push((3, vec![mu, nu, lam]));
                    out.push((4, vec![mu, nu, lam]));
                }
                for sg in r.clone() {
                    for rho in r.clone() {
                        if sg != rho {
                            out.push((5, vec![mu, nu, sg, rho]));
                        }
                    }
                }
            }
        }
        out.push((7, vec![mu]));
        out.push((8, vec![mu]));
    }
    out.sort();
    out
}

/// Evaluate one instance in the multivector engine and independently in
/// the 4x4 gamma-matrix oracle; the check passes only when the engine
/// residual vanishes, the matrix residual vanishes, and the two routes
/// agree term by term.
fn check_instance(
    alg: &ConfAlgebra,
    rep: &GammaRep,
    family: usize,
    idx: &[usize],
    tol: f64,
) -> Check {
    let (id, residual_mv) = relation_residual(alg, family, idx);
    // independent route: map the operands, not the result
    let matrix_residual = matrix_route_residual(alg, rep, family, idx);
    let routes_agree = rep.matrix_of(&residual_mv).sub(&matrix_residual);
    let combined = match alg.backend() {
        Backend::Exact => Residual::Exact {
            zero: residual_mv.is_zero() && matrix_residual.is_zero() && routes_agree.is_zero(),
        },
        Backend::Float => Residual::Float {
            magnitude: residual_mv
                .magnitude()
                .max(matrix_residual.magnitude())
                .max(routes_agree.magnitude()),
        },
    };
    Check::new(id, idx.iter().map(|&i| i as i64).collect(), combined, tol)
}

/// Re-evaluate the relation with every generator replaced by its matrix,
/// so products and commutators happen in matrix arithmetic.
fn matrix_route_residual(
    alg: &ConfAlgebra,
    rep: &GammaRep,
    family: usize,
    idx: &[usize],
) -> crate::repr::Mat4 {
    // Rebuild a matrix-valued ConfAlgebra once per call is wasteful; use
    // the relation on a wrapped algebra of matrices instead.
    struct MatAlg {
        p: Vec<crate::repr::Mat4>,
        k: Vec<crate::repr::Mat4>,
        d: crate::repr::Mat4,
        m: Vec<Vec<crate::repr::Mat4>>,
    }
    let mat = MatAlg {
        p: alg.p.iter().map(|x| rep.matrix_of(x)).collect(),
        k: alg.k.iter().map(|x| rep.matrix_of(x)).collect(),
        d: rep.matrix_of(&alg.d),
        m: alg
            .m
            .iter()
            .map(|row| row.iter().map(|x| rep.matrix_of(x)).collect())
            .collect(),
    };
    let comm = |a: &crate::repr::Mat4, b: &crate::repr::Mat4| a.mul(b).sub(&b.mul(a));
    let metric = |a: usize, b: usize| if a == b { METRIC[a] } else { 0 };
    let scale = |n: i64, m: &crate::repr::Mat4| m.scale(&Scalar::from_i64(m.backend(), n));
    match (family, idx) {
        (0, &[mu, nu]) => comm(&mat.p[mu], &mat.p[nu]),
        (1, &[mu, nu]) => comm(&mat.k[mu], &mat.k[nu]),
        (2, &[mu, nu]) => comm(&mat.m[mu][nu], &mat.d),
        (3, &[mu, nu, lam]) => {
            let lhs = comm(&mat.m[mu][nu], &mat.p[lam]);
            let rhs = scale(-metric(mu, lam), &mat.p[nu]).sub(&scale(-metric(nu, lam), &mat.p[mu]));
            lhs.sub(&rhs)
        }
        (4, &[mu, nu, lam]) => {
            let lhs = comm(&mat.m[mu][nu], &mat.k[lam]);
            let rhs = scale(-metric(mu, lam), &mat.k[nu]).sub(&scale(-metric(nu, lam), &mat.k[mu]));
            lhs.sub(&rhs)
        }
        (5, &[mu, nu, sg, rho]) => {
            let lhs = comm(&mat.m[mu][nu], &mat.m[sg][rho]);
            let rhs = scale(metric(mu, rho), &mat.m[nu][sg])
                .add(&scale(metric(nu, sg), &mat.m[mu][rho]))
                .sub(&scale(metric(mu, sg), &mat.m[nu][rho]))
                .sub(&scale(metric(nu, rho), &mat.m[mu][sg]));
            lhs.sub(&rhs)
        }
        (6, &[mu, nu]) => {
            let lhs = comm(&mat.p[mu], &mat.k[nu]);
            let rhs = scale(2 * metric(mu, nu), &mat.d).sub(&scale(2, &mat.m[mu][nu]));
            lhs.sub(&rhs)
        }
        (7, &[mu]) => comm(&mat.p[mu], &mat.d).sub(&mat.p[mu]),
        (8, &[mu]) => comm(&mat.k[mu], &mat.d).add(&mat.k[mu]),
        _ => unreachable!(),
    }
}

fn sweep(alg: &ConfAlgebra, suite: &str, note: &str, tol: f64) -> SuiteReport {
    let rep = GammaRep::shared(alg.backend());
    let instances = relation_instances();
    let checks = par::map_collect(&instances, |(family, idx)| {
        check_instance(alg, &rep, *family, idx, tol)
    });
    SuiteReport::new(suite, vec![note.to_string()], checks)
}

/// Sequential twin of [`commutation_table`], for baseline benchmarks.
pub fn commutation_table_seq(backend: Backend, tol: f64) -> SuiteReport {
    let alg = ConfAlgebra::new(backend);
    let rep = GammaRep::shared(backend);
    let instances = relation_instances();
    let checks = par::map_collect_seq(&instances, |(family, idx)| {
        check_instance(&alg, &rep, *family, idx, tol)
    });
    SuiteReport::new("generators", vec![M_CONVENTION_NOTE.to_string()], checks)
}

/// Verify every relation family over all index tuples, through both the
/// multivector engine and the gamma-matrix oracle.
pub fn commutation_table(backend: Backend, tol: f64) -> SuiteReport {
    let alg = ConfAlgebra::new(backend);
    sweep(&alg, "generators", M_CONVENTION_NOTE, tol)
}

/// Apply `P -> -K, K -> -P, D -> -D` and re-verify the whole table.
pub fn duality_check(backend: Backend, tol: f64) -> SuiteReport {
    let alg = ConfAlgebra::new(backend).duality_image();
    sweep(
        &alg,
        "generators.duality",
        "table re-verified under P -> -K, K -> -P, D -> -D",
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX: Backend = Backend::Exact;

    #[test]
    fn defining_formulas() {
        // D = i g0 g1 g2 g3 / 2
        let d = generator(GeneratorKind::D, &[], EX).unwrap().value;
        let g5 = gamma5(EX);
        assert_eq!(d, g5.scale(&Scalar::i(EX)).scale(&Scalar::from_ratio(EX, 1, 2)));
        // M_12 = (g1 ^ g2)/2 = g1 g2 / 2 on orthogonal indices
        let m12 = generator(GeneratorKind::M, &[1, 2], EX).unwrap().value;
        let expect = gamma(1, EX).mul(&gamma(2, EX)).scale(&Scalar::from_ratio(EX, 1, 2));
        assert_eq!(m12, expect);
        // P_0 + K_0 = i g0 g5
        let p0 = generator(GeneratorKind::P, &[0], EX).unwrap().value;
        let k0 = generator(GeneratorKind::K, &[0], EX).unwrap().value;
        let expect = gamma(0, EX).mul(&gamma5(EX)).scale(&Scalar::i(EX));
        assert_eq!(p0.add(&k0), expect);
        // bad indices are rejected
        assert!(generator(GeneratorKind::M, &[1, 1], EX).is_err());
        assert!(generator(GeneratorKind::P, &[4], EX).is_err());
    }

    #[test]
    fn pinned_commutators() {
        let alg = ConfAlgebra::new(EX);
        // [P0, K0] = 2D
        assert_eq!(alg.p[0].commutator(&alg.k[0]), alg.d.scale_i64(2));
        // [P1, D] = P1
        assert_eq!(alg.p[1].commutator(&alg.d), alg.p[1]);
        // [P_mu, P_nu] = 0 for all 16 pairs
        for mu in 0..4 {
            for nu in 0..4 {
                assert!(alg.p[mu].commutator(&alg.p[nu]).is_zero());
            }
        }
    }

    #[test]
    fn table_and_duality_close() {
        let report = commutation_table(EX, 0.0);
        assert!(report.pass, "failures: {:?}", report.failures().collect::<Vec<_>>());
        let dual = duality_check(EX, 0.0);
        assert!(dual.pass);
    }

    #[test]
    fn duality_examples() {
        let alg = ConfAlgebra::new(EX).duality_image();
        // [P0', P1'] = [-K0, -K1] = 0
        assert!(alg.p[0].commutator(&alg.p[1]).is_zero());
        // [P1', D'] = P1' encodes [K1, D] = -K1
        assert_eq!(alg.p[1].commutator(&alg.d), alg.p[1]);
        // [M12, D'] = 0 unchanged
        assert!(alg.m[1][2].commutator(&alg.d).is_zero());
    }

    #[test]
    fn scalar_conjugation_swaps_p_and_k() {
        // conjugating the complex unit sends P_mu to -K_mu and D to -D
        let alg = ConfAlgebra::new(EX);
        for mu in 0..4 {
            assert_eq!(alg.p[mu].conjugate_scalars(), alg.k[mu].neg());
        }
        assert_eq!(alg.d.conjugate_scalars(), alg.d.neg());
    }

    #[test]
    fn paper_order_fails_where_documented() {
        // with M'[mu][nu] = (g_nu ^ g_mu)/2 the [M,P] family breaks
        let alg = ConfAlgebra::new(EX);
        let mut flipped = alg.clone();
        for mu in 0..4 {
            for nu in 0..4 {
                flipped.m[mu][nu] = alg.m[mu][nu].neg();
            }
        }
        let (_, res) = relation_residual(&flipped, 3, &[0, 1, 0]);
        assert!(!res.is_zero(), "flipped order should fail [M,P]");
        let (_, res) = relation_residual(&flipped, 6, &[0, 1]);
        assert!(!res.is_zero(), "flipped order should fail [P,K]");
    }
}
