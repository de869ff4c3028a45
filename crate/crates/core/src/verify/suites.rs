//! The per-module identity suites behind `verify`.

use crate::algebra::{Backend, Multivector, Scalar, Signature, CL13, CL30, CL41};
use crate::conformal::{compactify, klein_check, MobiusElement, ParavectorPoint};
use crate::par;
use crate::purespinor::{
    self, annihilator, charge_conjugate, conjugation_identity_holds, flag_vector,
    flagpole_phase_components, generalized_flagpole, is_pure, orbit_dimension, penrose_flagpole,
    polarization, quadratic_form, FockSpinor, Parity,
};
use crate::repr::e_cap;
use crate::twistor::{
    algebraic_twistor, incidence, reference_twistor, reference_twistor_closed_form,
    chiral_projection_matrix, FourVector, WeylSpinor,
};
use crate::verify::report::{Check, Residual, SuiteReport};
use crate::verify::sample::Sampler;
use crate::verify::SuiteConfig;

fn scalar_residual(s: &Scalar) -> Residual {
    Residual::from_scalar(s)
}

fn mv_residual(mv: &Multivector) -> Residual {
    Residual::from_multivector(mv)
}

// ---------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------

pub fn algebra_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut sampler = Sampler::new(cfg.seed, cfg.backend);
    let sigs = [CL30, CL13, CL41, Signature::new(2, 2)];
    let mut inputs = Vec::new();
    for (si, sig) in sigs.iter().enumerate() {
        for k in 0..200usize {
            let a = sampler.multivector(*sig, 6, true);
            let b = sampler.multivector(*sig, 6, true);
            let c = sampler.multivector(*sig, 6, true);
            inputs.push((si, k, a, b, c));
        }
    }
    let tol = cfg.tolerance;
    let checks = par::map_collect(&inputs, |(si, k, a, b, c)| {
        let sig = sigs[*si];
        let idx = vec![*si as i64, *k as i64];
        let mut out = Vec::new();
        // associativity (ab)c = a(bc)
        let assoc = a.mul(b).mul(c).sub(&a.mul(&b.mul(c)));
        out.push(Check::new(
            format!("algebra.assoc.{sig}"),
            idx.clone(),
            mv_residual(&assoc),
            tol,
        ));
        if *k < 50 {
            // reversion anti-automorphism
            let rev = a.mul(b).reversion().sub(&b.reversion().mul(&a.reversion()));
            out.push(Check::new(
                format!("algebra.reversion.{sig}"),
                idx.clone(),
                mv_residual(&rev),
                tol,
            ));
            // grade involution is an automorphism
            let inv = a
                .mul(b)
                .grade_involution()
                .sub(&a.grade_involution().mul(&b.grade_involution()));
            out.push(Check::new(
                format!("algebra.involution.{sig}"),
                idx.clone(),
                mv_residual(&inv),
                tol,
            ));
            // conjugation = involution o reversion = reversion o involution
            let conj1 = a
                .clifford_conjugation()
                .sub(&a.reversion().grade_involution());
            let conj2 = a
                .clifford_conjugation()
                .sub(&a.grade_involution().reversion());
            out.push(Check::new(
                format!("algebra.conjugation.{sig}"),
                idx.clone(),
                mv_residual(&conj1.add(&conj2)),
                tol,
            ));
        }
        if *k < 20 {
            // grade decomposition partitions the element
            let mut sum = Multivector::zero(sig, a.backend());
            let mut cross = Multivector::zero(sig, a.backend());
            for g in 0..=sig.dim() {
                let part = a.grade_project(g);
                sum = sum.add(&part);
                // idempotence
                cross = cross.add(&part.grade_project(g).sub(&part));
                // pairwise annihilation
                for h in 0..=sig.dim() {
                    if h != g {
                        cross = cross.add(&part.grade_project(h));
                    }
                }
            }
            out.push(Check::new(
                format!("algebra.grades.{sig}"),
                idx,
                mv_residual(&sum.sub(a).add(&cross)),
                tol,
            ));
        }
        out
    });
    SuiteReport::new("algebra", vec![], checks.into_iter().flatten().collect())
}

// ---------------------------------------------------------------------
// conformal
// ---------------------------------------------------------------------

pub fn conformal_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut sampler = Sampler::new(cfg.seed ^ 0x636f6e66, cfg.backend);
    let backend = cfg.backend;
    let tol = cfg.tolerance;
    let mut checks: Vec<Check> = Vec::new();

    // Klein quadric: 500 compactified points give b bbar = 0 exactly.
    let points: Vec<Multivector> = (0..500).map(|_| sampler.paravector()).collect();
    checks.extend(par::map_collect(&points, |x| {
        let b = compactify(x).to_cl41();
        let prod = b.mul(&b.clifford_conjugation());
        Check::new("conformal.klein.compactify", vec![], mv_residual(&prod), tol)
    }));

    // Klein equivalence on 200 random extended vectors, both directions.
    let alphas: Vec<[Scalar; 6]> = (0..200)
        .map(|k| {
            if k % 2 == 0 {
                // on the quadric: a rescaled compactified point
                let p = compactify(&sampler.paravector());
                let scale = sampler.nonzero_rational();
                let half = Scalar::from_ratio(backend, 1, 2);
                let a0 = p.mu.sub(&p.lambda).mul(&half).mul(&scale);
                let a4 = p.mu.add(&p.lambda).mul(&half).mul(&scale);
                [
                    a0,
                    p.x.coeff(1).mul(&scale),
                    p.x.coeff(2).mul(&scale),
                    p.x.coeff(4).mul(&scale),
                    a4,
                    p.x.scalar_part().mul(&scale),
                ]
            } else {
                std::array::from_fn(|_| sampler.rational())
            }
        })
        .collect();
    checks.extend(par::map_collect(&alphas, |a| {
        // quadratic form (a5)^2 + (a0)^2 - (a1)^2 - (a2)^2 - (a3)^2 - (a4)^2
        let [a0, a1, a2, a3, a4, a5] = a;
        let form = a5
            .mul(a5)
            .add(&a0.mul(a0))
            .sub(&a1.mul(a1))
            .sub(&a2.mul(a2))
            .sub(&a3.mul(a3))
            .sub(&a4.mul(a4));
        let mut b = Multivector::scalar(CL41, a5.clone());
        b = b.add(&e_cap(0, backend).scale(a0));
        b = b.add(&e_cap(1, backend).scale(a1));
        b = b.add(&e_cap(2, backend).scale(a2));
        b = b.add(&e_cap(3, backend).scale(a3));
        b = b.add(&e_cap(4, backend).scale(a4));
        let prod = b.mul(&b.clifford_conjugation());
        let form_zero = match backend {
            Backend::Exact => form.is_zero(),
            Backend::Float => form.magnitude() < tol,
        };
        let prod_zero = prod.is_zero_or_small();
        Check::new(
            "conformal.klein.iff",
            vec![],
            Residual::from_bool(form_zero == prod_zero),
            tol,
        )
    }));

    // Table rows, 100 random inputs each.
    #[allow(clippy::type_complexity)]
    let row_inputs: Vec<(usize, Multivector, Multivector, Scalar, Multivector)> = (0..500)
        .map(|k| {
            let row = k % 5;
            let x = if row == 3 {
                sampler.unit_quadric_paravector()
            } else {
                sampler.paravector()
            };
            let param = sampler.paravector();
            let rho = sampler.square_rational();
            let rotor = sampler.rotor();
            (row, x, param, rho, rotor)
        })
        .collect();
    checks.extend(par::map_collect(&row_inputs, |(row, x, param, rho, rotor)| {
        match row {
            0 => {
                let g = MobiusElement::translation(param).unwrap();
                let (img, delta) = g.apply(x).unwrap();
                let residual = img.sub(&x.add(param));
                let delta_res = delta.sub(&Scalar::one(backend));
                Check::new(
                    "conformal.table.translation",
                    vec![],
                    mv_residual(&residual.add(&Multivector::scalar(CL30, delta_res))),
                    tol,
                )
            }
            1 => {
                let g = MobiusElement::dilation(rho).unwrap();
                let (img, delta) = g.apply(x).unwrap();
                let residual = img.sub(&x.scale(rho));
                // Delta = 1/rho
                let delta_res = delta.mul(rho).sub(&Scalar::one(backend));
                Check::new(
                    "conformal.table.dilation",
                    vec![],
                    mv_residual(&residual.add(&Multivector::scalar(CL30, delta_res))),
                    tol,
                )
            }
            2 => {
                let g = MobiusElement::rotation(rotor).unwrap();
                let (img, _) = g.apply(x).unwrap();
                let oracle = rotor
                    .mul(x)
                    .mul(&rotor.grade_involution().inverse().unwrap());
                Check::new(
                    "conformal.table.rotation",
                    vec![],
                    mv_residual(&img.sub(&oracle)),
                    tol,
                )
            }
            3 => {
                // inversion on the unit quadric: x -> -xbar exactly
                let g = MobiusElement::inversion(backend);
                let (img, _) = g.apply(x).unwrap();
                let residual = img.add(&x.clifford_conjugation());
                // general projective agreement via the twisted adjoint
                let moved = g.twisted_adjoint(&compactify(x));
                let expected = ParavectorPoint::new(
                    x.clifford_conjugation().neg(),
                    Scalar::one(backend),
                    x.mul(&x.clifford_conjugation()).scalar_part(),
                );
                let proj_ok = moved.projectively_eq(&expected) && klein_check(&moved);
                let ok = residual.is_zero_or_small() && proj_ok;
                Check::new(
                    "conformal.table.inversion",
                    vec![],
                    Residual::from_bool(ok),
                    tol,
                )
            }
            _ => {
                let g = MobiusElement::transvection(param).unwrap();
                match g.apply(x) {
                    Ok((img, _)) => {
                        // x (h x + 1)^{-1} straight from the formula
                        let hx1 = param.mul(x).add(&Multivector::one(CL30, backend));
                        let oracle = x.mul(&hx1.inverse().unwrap());
                        Check::new(
                            "conformal.table.transvection",
                            vec![],
                            mv_residual(&img.sub(&oracle)),
                            tol,
                        )
                    }
                    Err(_) => {
                        // the pole of the map: (hx+1) not invertible is a
                        // legitimate outcome, counted as pass for the row
                        Check::new(
                            "conformal.table.transvection",
                            vec![],
                            Residual::from_bool(true),
                            tol,
                        )
                    }
                }
            }
        }
    }));

    // Random words: unit closure, composition homomorphism, conformal
    // factor multiplicativity, Klein preservation, projective agreement.
    let words: Vec<(MobiusElement, MobiusElement, Multivector)> = (0..100)
        .map(|_| {
            (
                sampler.mobius_word(3),
                sampler.mobius_word(3),
                sampler.paravector(),
            )
        })
        .collect();
    checks.extend(par::map_collect(&words, |(g1, g2, x)| {
        let mut ok = true;
        // closure: both words and their product pass the unit check
        let g12 = g1.compose(g2);
        ok &= MobiusElement::new(g12.matrix().clone()).is_ok();
        // action homomorphism wherever both sides are defined
        if let (Ok((y, d2)), Ok((direct, d12))) = (g2.apply(x), g12.apply(x)) {
            if let Ok((z, d1)) = g1.apply(&y) {
                ok &= direct.sub(&z).is_small_relative(z.magnitude());
                // Delta multiplicativity
                let dd = d1.mul(&d2).sub(&d12);
                ok &= match backend {
                    Backend::Exact => dd.is_zero(),
                    Backend::Float => dd.magnitude() < tol * (1.0 + d12.magnitude()),
                };
            }
        }
        // Klein preservation + projective compatibility through the
        // twisted adjoint
        let p = compactify(x);
        let moved = g12.twisted_adjoint(&p);
        match backend {
            Backend::Exact => ok &= klein_check(&moved),
            Backend::Float => {
                // noise budget set by the sandwich intermediates
                let gm = g12.matrix().magnitude();
                let s = gm * gm * p.to_mat2().magnitude();
                ok &= moved.klein_residual().magnitude() < tol * (1.0 + s * s);
            }
        }
        if let Ok((img, _)) = g12.apply(x) {
            ok &= moved.projectively_eq(&compactify(&img));
        }
        Check::new("conformal.words", vec![], Residual::from_bool(ok), tol)
    }));

    SuiteReport::new("conformal", vec![], checks)
}

// ---------------------------------------------------------------------
// twistor
// ---------------------------------------------------------------------

pub fn twistor_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut sampler = Sampler::new(cfg.seed ^ 0x74776973, cfg.backend);
    let tol = cfg.tolerance;
    let backend = cfg.backend;
    let inputs: Vec<(FourVector, FourVector, WeylSpinor, Scalar)> = (0..100)
        .map(|_| {
            (
                sampler.four_vector(),
                sampler.four_vector(),
                sampler.weyl(),
                sampler.gaussian(),
            )
        })
        .collect();
    let spinor_residual = |diff: &crate::twistor::DiracSpinor| match backend {
        Backend::Exact => Residual::Exact {
            zero: diff.is_zero(),
        },
        Backend::Float => Residual::Float {
            magnitude: diff.magnitude(),
        },
    };
    let checks = par::map_collect(&inputs, |(x, xp, pi, c)| {
        let mut out = Vec::new();
        // two-path agreement for the reference twistor
        let eta = reference_twistor(x, pi).unwrap().eta;
        let closed = reference_twistor_closed_form(x, pi).unwrap();
        out.push(Check::new(
            "twistor.reference.two_path",
            vec![],
            spinor_residual(&eta.sub(&closed)),
            tol,
        ));
        // flagpole chain g5 x q = -i x q
        let rep = crate::repr::GammaRep::shared(backend);
        let q = chiral_projection_matrix(pi).unwrap();
        let xmat = rep.matrix_of(&x.to_multivector());
        let chain = rep
            .gamma5
            .mul(&xmat)
            .mul(&q)
            .add(&xmat.mul(&q).scale(&Scalar::i(backend)));
        let chain_residual = match backend {
            Backend::Exact => Residual::Exact {
                zero: chain.is_zero(),
            },
            Backend::Float => Residual::Float {
                magnitude: chain.magnitude(),
            },
        };
        out.push(Check::new("twistor.flagpole.chain", vec![], chain_residual, tol));
        // self-incidence vanishes
        let j = incidence(x, x, pi).unwrap();
        out.push(Check::new(
            "twistor.incidence.self",
            vec![],
            scalar_residual(&j),
            tol,
        ));
        // algebraic spinor route equals the reference twistor
        let para = crate::conformal::paravector_from_coeffs(&x.0);
        let alg = algebraic_twistor(&compactify(&para), pi).unwrap();
        out.push(Check::new(
            "twistor.algebraic.agreement",
            vec![],
            spinor_residual(&alg.sub(&eta)),
            tol,
        ));
        // sesquilinear scaling of the incidence product
        let j1 = incidence(x, xp, pi).unwrap();
        let j2 = incidence(x, xp, &pi.scale(c)).unwrap();
        let res = j2.sub(&j1.mul(&c.abs_sq()));
        out.push(Check::new(
            "twistor.incidence.scaling",
            vec![],
            scalar_residual(&res),
            tol,
        ));
        out
    });
    SuiteReport::new("twistor", vec![], checks.into_iter().flatten().collect())
}

// ---------------------------------------------------------------------
// pure spinors
// ---------------------------------------------------------------------

pub fn pure_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut sampler = Sampler::new(cfg.seed ^ 0x70757265, cfg.backend);
    let tol = cfg.tolerance;
    let mut checks: Vec<Check> = Vec::new();

    // Purity census: n = 1, 2, 3 random Weyl spinors are all pure.
    let mut census: Vec<FockSpinor> = Vec::new();
    for n in 1..=3u32 {
        for k in 0..100 {
            let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
            census.push(sampler.fock_weyl(n, parity));
        }
    }
    checks.extend(par::map_collect(&census, |u| {
        let ann = annihilator(u).unwrap();
        let pure = ann.dim == u.n() as usize;
        // total nullity of the annihilator
        let mut null = true;
        for v in &ann.basis {
            null &= quadratic_form(v).is_zero() || quadratic_form(v).magnitude() < tol;
            for w in &ann.basis {
                null &= polarization(v, w).is_zero() || polarization(v, w).magnitude() < tol;
            }
        }
        Check::new(
            format!("pure.census.n{}", u.n()),
            vec![],
            Residual::from_bool(pure && null),
            tol,
        )
    }));

    // n = 4 fixtures: the vacuum is pure, the classic witness is not.
    let vac4 = FockSpinor::vacuum(4, cfg.backend);
    let witness = FockSpinor::vacuum(4, cfg.backend)
        .add(&FockSpinor::basis_state(4, 0b1111, cfg.backend));
    checks.push(Check::new(
        "pure.census.n4.vacuum",
        vec![],
        Residual::from_bool(annihilator(&vac4).unwrap().dim == 4),
        tol,
    ));
    checks.push(Check::new(
        "pure.census.n4.witness",
        vec![],
        Residual::from_bool(annihilator(&witness).unwrap().dim == 0),
        tol,
    ));

    // Orbit dimensions at n = 2, 3, 4 on the vacuum and random pure
    // spinors match the coset dimension n(n-1).
    let mut orbit_inputs: Vec<FockSpinor> = Vec::new();
    for n in 2..=4u32 {
        orbit_inputs.push(FockSpinor::vacuum(n, cfg.backend));
        for _ in 0..4 {
            orbit_inputs.push(sampler.fock_pure(n));
        }
    }
    checks.extend(par::map_collect(&orbit_inputs, |u| {
        let expect = purespinor::coset_dim(u.n()).unwrap() as usize;
        let ok = is_pure(u).unwrap() && orbit_dimension(u).unwrap() == expect;
        Check::new(
            format!("pure.orbit.n{}", u.n()),
            vec![],
            Residual::from_bool(ok),
            tol,
        )
    }));

    // Flagpoles at n = 2, 3: p real, phase-invariant and null; F
    // self-conjugate; G follows the rotation law where the conjugation
    // identity holds.
    let mut flag_inputs: Vec<(FockSpinor, Scalar)> = Vec::new();
    for n in 2..=3u32 {
        for _ in 0..15 {
            flag_inputs.push((sampler.fock_pure(n), sampler.unit_phase()));
        }
    }
    checks.extend(par::map_collect(&flag_inputs, |(u, phase)| {
        let mut ok = true;
        let p = flag_vector(u);
        // real, phase invariant, null
        ok &= p.sub(&p.conjugate_scalars()).is_zero_or_small();
        ok &= flag_vector(&u.scale(phase)).sub(&p).is_zero_or_small();
        // nullity of the flag vector: its Clifford square vanishes
        ok &= p.mul(&p).is_zero_or_small();
        // F is fixed by the real structure
        let f = penrose_flagpole(u);
        ok &= f.sub(&f.conjugate_scalars()).is_zero_or_small();
        // conjugation identity and the 2-theta law
        ok &= conjugation_identity_holds(u);
        let (re2, im2) = flagpole_phase_components(u);
        let cos2 = phase.mul(phase).re();
        let sin2 = phase.mul(phase).im();
        let lhs = generalized_flagpole(&u.scale(phase));
        let rhs = re2.scale(&cos2).sub(&im2.scale(&sin2));
        ok &= lhs.sub(&rhs).is_zero_or_small();
        // F = G at theta = 0
        ok &= generalized_flagpole(u).sub(&f).is_zero_or_small();
        Check::new(
            format!("pure.flagpole.n{}", u.n()),
            vec![],
            Residual::from_bool(ok),
            tol,
        )
    }));

    // Charge conjugation: intertwining and the pinned double-conjugation
    // sign per n.
    let mut conj_inputs: Vec<(FockSpinor, Vec<Scalar>)> = Vec::new();
    for n in 1..=4u32 {
        for k in 0..12 {
            let parity = if k % 2 == 0 { Parity::Even } else { Parity::Odd };
            let u = sampler.fock_weyl(n, parity);
            let v: Vec<Scalar> = (0..2 * n).map(|_| sampler.rational()).collect();
            conj_inputs.push((u, v));
        }
    }
    checks.extend(par::map_collect(&conj_inputs, |(u, v)| {
        let lhs = charge_conjugate(&purespinor::vector_action(v, u));
        let vbar: Vec<Scalar> = v.iter().map(Scalar::conj).collect();
        let rhs = purespinor::vector_action(&vbar, &charge_conjugate(u));
        let mut ok = lhs.sub(&rhs).is_zero_or_small();
        let twice = charge_conjugate(&charge_conjugate(u));
        let sign = purespinor::double_conjugation_sign(u.n());
        ok &= twice
            .sub(&u.scale(&Scalar::from_i64(u.backend(), sign)))
            .is_zero_or_small();
        Check::new(
            format!("pure.conjugation.n{}", u.n()),
            vec![],
            Residual::from_bool(ok),
            tol,
        )
    }));

    SuiteReport::new(
        "pure",
        vec![
            "flag vectors of parity-homogeneous spinors vanish in this real structure; \
             the zero vector passes reality, phase-invariance and nullity"
                .to_string(),
        ],
        checks,
    )
}
