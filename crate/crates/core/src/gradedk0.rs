//! Graded Grothendieck groups of polycephaly graphs as modules over the
//! integral Laurent ring, head by head:
//!
//! * sink head: a Laurent polynomial module with unit `sum x^(-length)`;
//! * comet of length l: `Z^l` with the cyclic x-action, unit the vector of
//!   length counts per residue mod l;
//! * rose with n petals: `Z[1/n]` with x acting as multiplication by n,
//!   unit `sum n^(-length)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polycephaly::{Coefficient, HeadAlgebra, HeadKind, PolycephalyDecomposition};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GradedError {
    /// The denominator is not supported on the base.
    NotNAdic { base: usize, denominator: BigInt },
    /// Rose bases must be at least 2.
    BadBase(usize),
}

impl fmt::Display for GradedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradedError::NotNAdic { base, denominator } => {
                write!(
                    f,
                    "denominator {denominator} is not a divisor of a power of {base}"
                )
            }
            GradedError::BadBase(n) => write!(f, "rose base {n} must be at least 2"),
        }
    }
}

// ====== Laurent polynomials ======

/// Integer Laurent polynomial; exponents are machine integers, coefficients
/// arbitrary precision. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, BigInt::one());
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplication by x^k.
    pub fn mul_x_pow(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (e, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{c}x^{e}")?,
            }
        }
        Ok(())
    }
}

// ====== Residue count vectors ======

/// Element of `Z^l` carrying the cyclic x-action of a comet of length l.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ResidueVector {
    counts: Vec<BigInt>,
}

impl ResidueVector {
    pub fn new(counts: Vec<BigInt>) -> Self {
        assert!(!counts.is_empty(), "modulus must be positive");
        ResidueVector { counts }
    }

    pub fn from_i64(counts: &[i64]) -> Self {
        ResidueVector::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// The x^k action: each residue class moves up by k.
    pub fn rotate(&self, k: i64) -> ResidueVector {
        let l = self.counts.len() as i64;
        let mut out = alloc::vec![BigInt::zero(); self.counts.len()];
        for (j, c) in self.counts.iter().enumerate() {
            let to = (j as i64 + k).rem_euclid(l) as usize;
            out[to] = c.clone();
        }
        ResidueVector { counts: out }
    }

    /// The lexicographically minimal rotation.
    pub fn min_rotation(&self) -> ResidueVector {
        (0..self.counts.len() as i64)
            .map(|k| self.rotate(k))
            .min_by(|a, b| a.counts.cmp(&b.counts))
            .expect("modulus is positive")
    }
}

impl fmt::Display for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// ====== n-adic fractions ======

/// Element of `Z[1/base]`, kept as an exact rational whose denominator is
/// supported on `base`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct NAdicFraction {
    base: usize,
    value: BigRational,
}

impl NAdicFraction {
    pub fn new(base: usize, value: BigRational) -> Result<Self, GradedError> {
        if base < 2 {
            return Err(GradedError::BadBase(base));
        }
        let mut d = value.denom().abs();
        let n = BigInt::from(base);
        loop {
            let g = d.gcd(&n);
            if g.is_one() {
                break;
            }
            d /= g;
        }
        if !d.is_one() {
            return Err(GradedError::NotNAdic {
                base,
                denominator: value.denom().clone(),
            });
        }
        Ok(NAdicFraction { base, value })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    /// The x^k action: multiplication by base^k.
    pub fn times_base_pow(&self, k: i64) -> NAdicFraction {
        let n = BigInt::from(self.base);
        let factor = if k >= 0 {
            BigRational::from_integer(n.pow(k as u32))
        } else {
            BigRational::new(BigInt::one(), n.pow((-k) as u32))
        };
        NAdicFraction {
            base: self.base,
            value: &self.value * factor,
        }
    }
}

impl fmt::Display for NAdicFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// ====== The module ======

/// One head's contribution to the graded Grothendieck group, together with
/// its order-unit coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HeadComponent {
    Laurent { unit: LaurentPoly },
    Cyclic { unit: ResidueVector },
    Rose { base: usize, unit: NAdicFraction },
}

/// Graded Grothendieck group of a polycephaly graph: a direct sum of head
/// components, with the class of the algebra as order unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedK0Module {
    pub components: Vec<HeadComponent>,
}

/// An element of a `GradedK0Module`, one value per component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    pub values: Vec<ComponentValue>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComponentValue {
    Laurent(LaurentPoly),
    Cyclic(ResidueVector),
    Rose(NAdicFraction),
}

impl GradedK0Module {
    /// The order unit as an element.
    pub fn unit(&self) -> ModuleElement {
        ModuleElement {
            values: self
                .components
                .iter()
                .map(|c| match c {
                    HeadComponent::Laurent { unit } => ComponentValue::Laurent(unit.clone()),
                    HeadComponent::Cyclic { unit } => ComponentValue::Cyclic(unit.clone()),
                    HeadComponent::Rose { unit, .. } => ComponentValue::Rose(unit.clone()),
                })
                .collect(),
        }
    }
}

/// The x^k action on an element, componentwise; k may be negative.
pub fn x_act_pow(e: &ModuleElement, k: i64) -> ModuleElement {
    ModuleElement {
        values: e
            .values
            .iter()
            .map(|v| match v {
                ComponentValue::Laurent(p) => ComponentValue::Laurent(p.mul_x_pow(k)),
                ComponentValue::Cyclic(r) => ComponentValue::Cyclic(r.rotate(k)),
                ComponentValue::Rose(q) => ComponentValue::Rose(q.times_base_pow(k)),
            })
            .collect(),
    }
}

/// The x action.
pub fn x_act(e: &ModuleElement) -> ModuleElement {
    x_act_pow(e, 1)
}

/// Build the graded Grothendieck group from a polycephaly decomposition.
pub fn k0_graded_polycephaly(d: &PolycephalyDecomposition) -> GradedK0Module {
    let components = d
        .heads
        .iter()
        .map(|h| match &h.kind {
            HeadKind::Sink => HeadComponent::Laurent {
                unit: LaurentPoly::from_terms(
                    h.lengths.iter().map(|&l| (-(l as i64), BigInt::one())),
                ),
            },
            HeadKind::Comet { cycle } => {
                let l = cycle.len();
                let mut counts = alloc::vec![BigInt::zero(); l];
                for &len in &h.lengths {
                    counts[len % l] += 1;
                }
                HeadComponent::Cyclic {
                    unit: ResidueVector::new(counts),
                }
            }
            HeadKind::Rose { petals } => {
                let n = BigInt::from(*petals);
                let unit = h
                    .lengths
                    .iter()
                    .map(|&l| BigRational::new(BigInt::one(), n.pow(l as u32)))
                    .fold(BigRational::zero(), |a, b| a + b);
                HeadComponent::Rose {
                    base: *petals,
                    unit: NAdicFraction::new(*petals, unit)
                        .expect("powers of the base are base-adic"),
                }
            }
        })
        .collect();
    GradedK0Module { components }
}

// ====== Canonical forms ======

/// Shift-invariant canonical form of one head component. Equality of
/// canonical forms is graded isomorphism of the components, except for
/// composite rose bases, which stay in raw form and are compared by the
/// power-ratio test instead.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CanonicalHeadForm {
    /// Multiplicity of each length offset above the minimum, ascending.
    Laurent { lengths: Vec<(u64, BigInt)> },
    /// Lexicographically minimal rotation of the residue counts.
    Cyclic { counts: Vec<BigInt> },
    /// `unit * base^e` for the unique e making it an integer prime to base.
    RosePrime { base: usize, reduced: BigInt },
    /// Composite base: the raw unit.
    RoseComposite { base: usize, unit: BigRational },
}

pub fn canonical_head_form(c: &HeadComponent) -> CanonicalHeadForm {
    match c {
        HeadComponent::Laurent { unit } => {
            // Lengths are negated exponents; slide so the minimum is 0.
            let max_exp = unit.terms().map(|(e, _)| e).max().expect("unit is nonzero");
            let mut lengths: Vec<(u64, BigInt)> = unit
                .terms()
                .map(|(e, c)| ((max_exp - e) as u64, c.clone()))
                .collect();
            lengths.sort_unstable();
            CanonicalHeadForm::Laurent { lengths }
        }
        HeadComponent::Cyclic { unit } => CanonicalHeadForm::Cyclic {
            counts: unit.min_rotation().counts().to_vec(),
        },
        HeadComponent::Rose { base, unit } => {
            if is_prime(*base) {
                let (reduced, _) = prime_rose_normal(*base, unit.value());
                CanonicalHeadForm::RosePrime {
                    base: *base,
                    reduced,
                }
            } else {
                CanonicalHeadForm::RoseComposite {
                    base: *base,
                    unit: unit.value().clone(),
                }
            }
        }
    }
}

/// For prime `base`: write `value = base^e * reduced` with `reduced` an
/// integer not divisible by `base`; returns `(reduced, e)`.
pub fn prime_rose_normal(base: usize, value: &BigRational) -> (BigInt, i64) {
    assert!(is_prime(base));
    assert!(value.is_positive(), "order units are positive");
    let n = BigInt::from(base);
    let mut e: i64 = 0;
    let mut num = value.numer().clone();
    let mut den = value.denom().clone();
    while num.is_multiple_of(&n) {
        num /= &n;
        e += 1;
    }
    while den.is_multiple_of(&n) {
        den /= &n;
        e -= 1;
    }
    debug_assert!(den.is_one(), "denominator was base-adic and base is prime");
    (num, e)
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2usize;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ====== Homogeneous components ======

/// Dimension over the ground field of one homogeneous component.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomogeneousDim {
    Finite(usize),
    Infinite,
}

/// Dimension of the degree-`lambda` component of a matrix block
/// `M_size(coefficient)(shifts)`: entry (i, j) is homogeneous of degree
/// `lambda` exactly when `lambda + shift_j - shift_i` vanishes in the
/// coefficient algebra's grade group.
pub fn homogeneous_dim(h: &HeadAlgebra, lambda: i64) -> HomogeneousDim {
    let step = match &h.coefficient {
        Coefficient::Field => None,
        Coefficient::LaurentSub { step } => Some(*step as i64),
        Coefficient::Leavitt { .. } => return HomogeneousDim::Infinite,
    };
    let mut count = 0usize;
    for &di in &h.shifts {
        for &dj in &h.shifts {
            let deg = lambda + dj as i64 - di as i64;
            let vanishes = match step {
                None => deg == 0,
                Some(l) => deg.rem_euclid(l) == 0,
            };
            if vanishes {
                count += 1;
            }
        }
    }
    HomogeneousDim::Finite(count)
}

impl fmt::Display for HeadComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadComponent::Laurent { unit } => {
                write!(f, "Z[x,x^-1] with unit {unit}")
            }
            HeadComponent::Cyclic { unit } => {
                write!(f, "Z^{} with rotation action, unit {unit}", unit.modulus())
            }
            HeadComponent::Rose { base, unit } => {
                write!(f, "Z[1/{base}] with unit {unit}")
            }
        }
    }
}

/// Render a rational in `p/q` form even for integers' sake of uniformity in
/// reports: integers print without the denominator.
pub fn rational_string(q: &BigRational) -> String {
    alloc::format!("{q}")
}
