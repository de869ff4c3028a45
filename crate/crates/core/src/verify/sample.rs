//! Seeded random generation of exact test data: rationals, multivectors,
//! points on quadrics, unit rotors, Moebius words and Fock spinors.
//!
//! Everything is generated in exact arithmetic (converted to floats only
//! when the float backend is requested), so identity checks can demand
//! zero residuals.

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Backend, Multivector, Scalar, Signature, CL30};
use crate::conformal::MobiusElement;
use crate::purespinor::{apply_basis_vector, FockSpinor, Parity};
use crate::twistor::{FourVector, WeylSpinor};

pub struct Sampler {
    rng: ChaCha8Rng,
    backend: Backend,
}

impl Sampler {
    pub fn new(seed: u64, backend: Backend) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            backend,
        }
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    fn cast(&self, s: Scalar) -> Scalar {
        match self.backend {
            Backend::Exact => s,
            Backend::Float => s.to_float(),
        }
    }

    /// Small random rational in [-5, 5] with denominator up to 4.
    pub fn rational(&mut self) -> Scalar {
        let num = self.rng.gen_range(-20..=20i64);
        let den = self.rng.gen_range(1..=4i64);
        self.cast(Scalar::Exact {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::from_integer(BigInt::from(0)),
        })
    }

    pub fn nonzero_rational(&mut self) -> Scalar {
        loop {
            let s = self.rational();
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn gaussian(&mut self) -> Scalar {
        let re = self.rational();
        let im = self.rational();
        re.add(&im.mul_imag())
    }

    /// A rational point on the unit circle, `(cos t, sin t)` with
    /// `cos^2 + sin^2 = 1` exactly.
    pub fn unit_circle(&mut self) -> (Scalar, Scalar) {
        let t_num = self.rng.gen_range(-6..=6i64);
        let t_den = self.rng.gen_range(1..=3i64);
        let ex = Backend::Exact;
        let t = Scalar::Exact {
            re: BigRational::new(BigInt::from(t_num), BigInt::from(t_den)),
            im: BigRational::from_integer(BigInt::from(0)),
        };
        let one = Scalar::one(ex);
        let t2 = t.mul(&t);
        let denom = one.add(&t2).inv().expect("1 + t^2 > 0");
        let cos = one.sub(&t2).mul(&denom);
        let sin = t.mul_i64(2).mul(&denom);
        (self.cast(cos), self.cast(sin))
    }

    /// A unit-modulus Gaussian rational `cos t + i sin t`.
    pub fn unit_phase(&mut self) -> Scalar {
        let (c, s) = self.unit_circle();
        c.add(&s.mul_imag())
    }

    /// A rational pair with `a^2 - b^2 = 1` (hyperbola points).
    pub fn unit_hyperbola(&mut self) -> (Scalar, Scalar) {
        let m_num = self.rng.gen_range(1..=6i64);
        let m_den = self.rng.gen_range(1..=4i64);
        let m = Scalar::Exact {
            re: BigRational::new(BigInt::from(m_num), BigInt::from(m_den)),
            im: BigRational::from_integer(BigInt::from(0)),
        };
        let half = Scalar::from_ratio(Backend::Exact, 1, 2);
        let minv = m.inv().expect("m > 0");
        let a = m.add(&minv).mul(&half);
        let b = minv.sub(&m).mul(&half);
        (self.cast(a), self.cast(b))
    }

    /// A random multivector with at most `max_terms` nonzero blades.
    pub fn multivector(&mut self, sig: Signature, max_terms: usize, complex: bool) -> Multivector {
        let blades = 1u32 << sig.dim();
        let count = self.rng.gen_range(1..=max_terms);
        let mut terms = Vec::new();
        for _ in 0..count {
            let mask = self.rng.gen_range(0..blades) as u16;
            let c = if complex {
                self.gaussian()
            } else {
                self.rational()
            };
            terms.push((mask, c));
        }
        Multivector::from_terms(sig, self.backend, terms)
    }

    /// A random Cl(3,0) paravector (scalar + vector).
    pub fn paravector(&mut self) -> Multivector {
        let coeffs: [Scalar; 4] = std::array::from_fn(|_| self.rational());
        crate::conformal::paravector_from_coeffs(&coeffs)
    }

    /// A random spacetime vector.
    pub fn four_vector(&mut self) -> FourVector {
        FourVector(std::array::from_fn(|_| self.rational()))
    }

    /// A random dotted Weyl spinor, nonzero.
    pub fn weyl(&mut self) -> WeylSpinor {
        loop {
            let xi = [self.gaussian(), self.gaussian()];
            if !(xi[0].is_zero() && xi[1].is_zero()) {
                return WeylSpinor::dotted_from_xi(xi);
            }
        }
    }

    /// A rational direction with `|v|^2 = 1` from a Pythagorean
    /// quadruple `(p^2+q^2-r^2-s^2)^2 + (2(pr+qs))^2 + (2(qr-ps))^2 = d^2`.
    fn unit_direction(&mut self) -> [Scalar; 3] {
        loop {
            let p = self.rng.gen_range(-3..=3i64);
            let q = self.rng.gen_range(-3..=3i64);
            let r = self.rng.gen_range(-3..=3i64);
            let s = self.rng.gen_range(-3..=3i64);
            let d = p * p + q * q + r * r + s * s;
            if d == 0 {
                continue;
            }
            let a = p * p + q * q - r * r - s * s;
            let b = 2 * (p * r + q * s);
            let c = 2 * (q * r - p * s);
            debug_assert_eq!(a * a + b * b + c * c, d * d);
            return [
                self.cast(Scalar::from_ratio(Backend::Exact, a, d)),
                self.cast(Scalar::from_ratio(Backend::Exact, b, d)),
                self.cast(Scalar::from_ratio(Backend::Exact, c, d)),
            ];
        }
    }

    /// A paravector on the unit quadric `x xbar = 1`.
    pub fn unit_quadric_paravector(&mut self) -> Multivector {
        let (t, r) = self.unit_hyperbola();
        let dir = self.unit_direction();
        let coeffs = [
            t,
            r.mul(&dir[0]),
            r.mul(&dir[1]),
            r.mul(&dir[2]),
        ];
        crate::conformal::paravector_from_coeffs(&coeffs)
    }

    /// A random unit element of Cl(3,0): a product of rational plane
    /// rotors and boosts, `g conj(g) = 1` exactly.
    pub fn rotor(&mut self) -> Multivector {
        let backend = self.backend;
        let mut g = Multivector::one(CL30, backend);
        let factors = self.rng.gen_range(1..=3);
        for _ in 0..factors {
            let kind = self.rng.gen_range(0..2);
            let f = if kind == 0 {
                // plane rotor a + b e_i e_j, a^2 + b^2 = 1
                let (a, b) = self.unit_circle();
                let planes = [(0u32, 1u32), (0, 2), (1, 2)];
                let (i, j) = planes[self.rng.gen_range(0..3)];
                Multivector::scalar(CL30, a).add(
                    &Multivector::basis_vector(CL30, i, backend)
                        .mul(&Multivector::basis_vector(CL30, j, backend))
                        .scale(&b),
                )
            } else {
                // boost a + b e_i, a^2 - b^2 = 1
                let (a, b) = self.unit_hyperbola();
                let i = self.rng.gen_range(0..3u32);
                Multivector::scalar(CL30, a)
                    .add(&Multivector::basis_vector(CL30, i, backend).scale(&b))
            };
            g = g.mul(&f);
        }
        g
    }

    /// A square of a nonzero rational, for exact dilations.
    pub fn square_rational(&mut self) -> Scalar {
        let r = self.nonzero_rational();
        r.mul(&r)
    }

    /// A random word in the five constructors, length `1..=max_len`.
    pub fn mobius_word(&mut self, max_len: usize) -> MobiusElement {
        let len = self.rng.gen_range(1..=max_len);
        let mut g = MobiusElement::identity(self.backend);
        for _ in 0..len {
            let factor = match self.rng.gen_range(0..5) {
                0 => MobiusElement::translation(&self.paravector()).unwrap(),
                1 => MobiusElement::dilation(&self.square_rational()).unwrap(),
                2 => MobiusElement::rotation(&self.rotor()).unwrap(),
                3 => MobiusElement::inversion(self.backend),
                _ => MobiusElement::transvection(&self.paravector()).unwrap(),
            };
            g = g.compose(&factor);
        }
        g
    }

    /// A random nonzero Fock spinor of fixed parity.
    pub fn fock_weyl(&mut self, n: u32, parity: Parity) -> FockSpinor {
        loop {
            let mut u = FockSpinor::zero(n, self.backend);
            for occ in 0..(1u32 << n) {
                let even = occ.count_ones() % 2 == 0;
                if even != (parity == Parity::Even) {
                    continue;
                }
                if self.rng.gen_bool(0.8) {
                    let c = self.gaussian();
                    u = u.add(&FockSpinor::basis_state(n, occ, self.backend).scale(&c));
                }
            }
            if !u.is_zero() {
                return u;
            }
        }
    }

    /// A random pure spinor: the vacuum moved by a word of invertible
    /// plane elements `a + b e_i e_j` (complex rotations), which stays in
    /// the pure-spinor orbit.
    pub fn fock_pure(&mut self, n: u32) -> FockSpinor {
        let mut u = FockSpinor::vacuum(n, self.backend);
        let factors = self.rng.gen_range(1..=3);
        for _ in 0..factors {
            let i = self.rng.gen_range(1..=2 * n);
            let mut j = self.rng.gen_range(1..=2 * n);
            while j == i {
                j = self.rng.gen_range(1..=2 * n);
            }
            let a = self.nonzero_rational();
            let b = loop {
                // the factor a + b e_i e_j must be invertible: a^2 + b^2 != 0
                let b = self.gaussian();
                if !a.mul(&a).add(&b.mul(&b)).is_zero() {
                    break b;
                }
            };
            let moved = apply_basis_vector(i, &apply_basis_vector(j, &u));
            u = u.scale(&a).add(&moved.scale(&b));
        }
        u
    }

    pub fn gen_range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}
