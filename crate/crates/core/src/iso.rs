//! Deciding graded isomorphism.
//!
//! Two polycephaly graphs have graded-isomorphic Leavitt path algebras
//! exactly when their graded Grothendieck groups match as ordered modules
//! with order unit, and that comparison reduces to a head-by-head matching:
//!
//! * sink heads compare by the length multiset slid to start at 0;
//! * comet heads compare by residue counts up to rotation;
//! * rose heads with a prime petal count compare by the unit with all
//!   powers of the base stripped;
//! * rose heads with a composite petal count are matched by an exact
//!   power-of-base ratio test, which is sound but not complete: when it
//!   fails the answer is `Unknown` rather than `NotIso`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gradedk0::{
    canonical_head_form, is_prime, prime_rose_normal, CanonicalHeadForm, GradedK0Module,
    HeadComponent,
};

/// Outcome of an isomorphism decision.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Iso,
    NotIso,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Iso => write!(f, "isomorphic"),
            Verdict::NotIso => write!(f, "not isomorphic"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// One matched pair of heads: `x^twist . left_unit = right_unit`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HeadMatch {
    pub left: usize,
    pub right: usize,
    pub twist: i64,
}

/// Decision together with a certificate: on `Iso` the matching pairs every
/// head of the left module with a head of the right module and records the
/// twist aligning the units.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoVerdict {
    pub verdict: Verdict,
    pub matching: Vec<HeadMatch>,
    pub reason: Option<String>,
}

impl IsoVerdict {
    fn not_iso(reason: String) -> Self {
        IsoVerdict {
            verdict: Verdict::NotIso,
            matching: Vec::new(),
            reason: Some(reason),
        }
    }

    fn unknown(reason: String) -> Self {
        IsoVerdict {
            verdict: Verdict::Unknown,
            matching: Vec::new(),
            reason: Some(reason),
        }
    }
}

/// Class key grouping comparable head components.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum HeadClass {
    Laurent,
    Cyclic { modulus: usize },
    Rose { base: usize },
}

fn head_class(c: &HeadComponent) -> HeadClass {
    match c {
        HeadComponent::Laurent { .. } => HeadClass::Laurent,
        HeadComponent::Cyclic { unit } => HeadClass::Cyclic {
            modulus: unit.modulus(),
        },
        HeadComponent::Rose { base, .. } => HeadClass::Rose { base: *base },
    }
}

/// Decide graded isomorphism of two graded Grothendieck groups.
pub fn decide_graded_iso(a: &GradedK0Module, b: &GradedK0Module) -> IsoVerdict {
    let mut classes_a: Vec<HeadClass> = a.components.iter().map(head_class).collect();
    let mut classes_b: Vec<HeadClass> = b.components.iter().map(head_class).collect();
    classes_a.sort_unstable();
    classes_b.sort_unstable();
    if classes_a != classes_b {
        return IsoVerdict::not_iso(alloc::format!(
            "head type multisets differ: {classes_a:?} vs {classes_b:?}"
        ));
    }

    // Decisive classes: canonical forms must match as multisets.
    let decisive = |c: &HeadComponent| {
        !matches!(
            canonical_head_form(c),
            CanonicalHeadForm::RoseComposite { .. }
        )
    };
    let mut canon_a: Vec<(CanonicalHeadForm, usize)> = a
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| decisive(c))
        .map(|(i, c)| (canonical_head_form(c), i))
        .collect();
    let mut canon_b: Vec<(CanonicalHeadForm, usize)> = b
        .components
        .iter()
        .enumerate()
        .filter(|(_, c)| decisive(c))
        .map(|(i, c)| (canonical_head_form(c), i))
        .collect();
    canon_a.sort();
    canon_b.sort();
    debug_assert_eq!(
        canon_a.len(),
        canon_b.len(),
        "type multisets already matched"
    );

    let mut matching = Vec::new();
    for ((ca, ia), (cb, ib)) in canon_a.iter().zip(&canon_b) {
        if ca != cb {
            return IsoVerdict::not_iso(alloc::format!(
                "canonical head forms differ: {ca:?} vs {cb:?}"
            ));
        }
        let twist = aligning_twist(&a.components[*ia], &b.components[*ib]);
        matching.push(HeadMatch {
            left: *ia,
            right: *ib,
            twist,
        });
    }

    // Composite-base roses: greedy exact power-ratio matching.
    let composite = |m: &GradedK0Module| -> Vec<usize> {
        m.components
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c, HeadComponent::Rose { base, .. } if !is_prime(*base)))
            .map(|(i, _)| i)
            .collect()
    };
    let comp_a = composite(a);
    let mut comp_b = composite(b);
    for &ia in &comp_a {
        let HeadComponent::Rose { base, unit: ua } = &a.components[ia] else {
            unreachable!()
        };
        let found = comp_b.iter().position(|&ib| {
            let HeadComponent::Rose { base: bb, unit: ub } = &b.components[ib] else {
                unreachable!()
            };
            bb == base && power_ratio(*base, ua.value(), ub.value()).is_some()
        });
        match found {
            Some(pos) => {
                let ib = comp_b.remove(pos);
                let HeadComponent::Rose { unit: ub, .. } = &b.components[ib] else {
                    unreachable!()
                };
                let twist = power_ratio(*base, ua.value(), ub.value()).expect("just matched");
                matching.push(HeadMatch {
                    left: ia,
                    right: ib,
                    twist,
                });
            }
            None => {
                return IsoVerdict::unknown(alloc::format!(
                    "no power-of-{base} ratio matches the rose unit {}; composite petal \
                     counts admit order-unit automorphisms this test cannot rule out",
                    ua.value()
                ));
            }
        }
    }

    matching.sort_by_key(|m| m.left);
    IsoVerdict {
        verdict: Verdict::Iso,
        matching,
        reason: None,
    }
}

/// For two components already known to share a canonical form, find the
/// twist j with `x^j . left_unit = right_unit`.
fn aligning_twist(left: &HeadComponent, right: &HeadComponent) -> i64 {
    match (left, right) {
        (HeadComponent::Laurent { unit: ul }, HeadComponent::Laurent { unit: ur }) => {
            let max = |p: &crate::gradedk0::LaurentPoly| {
                p.terms().map(|(e, _)| e).max().expect("units are nonzero")
            };
            // x^j slides every exponent up by j.
            max(ur) - max(ul)
        }
        (HeadComponent::Cyclic { unit: ul }, HeadComponent::Cyclic { unit: ur }) => {
            let l = ul.modulus() as i64;
            (0..l)
                .find(|&k| &ul.rotate(k) == ur)
                .expect("canonical forms matched, so some rotation aligns them")
        }
        (HeadComponent::Rose { base, unit: ul }, HeadComponent::Rose { unit: ur, .. }) => {
            let (_, el) = prime_rose_normal(*base, ul.value());
            let (_, er) = prime_rose_normal(*base, ur.value());
            // value = reduced * base^e and the reduced parts agree.
            er - el
        }
        _ => unreachable!("only same-class components are aligned"),
    }
}

/// If `r / l` is an exact power of `base`, return its exponent.
pub fn power_ratio(base: usize, l: &BigRational, r: &BigRational) -> Option<i64> {
    assert!(
        l.is_positive() && r.is_positive(),
        "order units are positive"
    );
    let q = r / l;
    let num = q.numer();
    let den = q.denom();
    if den.is_one() {
        exact_log(base, num)
    } else if num.is_one() {
        exact_log(base, den).map(|j| -j)
    } else {
        None
    }
}

/// If `m = base^j` for an integer j >= 0, return j.
fn exact_log(base: usize, m: &BigInt) -> Option<i64> {
    let n = BigInt::from(base);
    let mut m = m.clone();
    let mut j = 0i64;
    while m > BigInt::one() {
        let (q, rem) = m.div_rem(&n);
        if !rem.is_zero() {
            return None;
        }
        m = q;
        j += 1;
    }
    (m.is_one()).then_some(j)
}

// ====== Matrix algebras over a single rose ======

/// A matrix algebra `M_k(L(1, base))` twisted by one grade shift per row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftVector {
    base: usize,
    shifts: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IsoError {
    EmptyShiftVector,
    BadBase(usize),
    BaseMismatch { left: usize, right: usize },
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::EmptyShiftVector => write!(f, "shift vector must be nonempty"),
            IsoError::BadBase(n) => write!(f, "base {n} must be at least 2"),
            IsoError::BaseMismatch { left, right } => {
                write!(
                    f,
                    "cannot compare modules over different bases {left} and {right}"
                )
            }
        }
    }
}

impl ShiftVector {
    pub fn new(base: usize, shifts: Vec<i64>) -> Result<Self, IsoError> {
        if base < 2 {
            return Err(IsoError::BadBase(base));
        }
        if shifts.is_empty() {
            return Err(IsoError::EmptyShiftVector);
        }
        Ok(ShiftVector { base, shifts })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// `sum base^(-shift)`: the order-unit coordinate of the corresponding
    /// matrix algebra in `Z[1/base]`.
    pub fn unit_value(&self) -> BigRational {
        self.shifts
            .iter()
            .map(|&s| base_pow(self.base, -s))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// `sum base^(+shift)`: the class of the corresponding free module.
    pub fn free_value(&self) -> BigRational {
        self.shifts
            .iter()
            .map(|&s| base_pow(self.base, s))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

fn base_pow(base: usize, e: i64) -> BigRational {
    let n = BigInt::from(base);
    if e >= 0 {
        BigRational::from_integer(n.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), n.pow((-e) as u32))
    }
}

/// Outcome of the matrix-algebra comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixIsoVerdict {
    /// `x^twist . unit(left) = unit(right)`.
    Iso {
        twist: i64,
    },
    NotIso,
}

/// Decide graded isomorphism of `M_k(L(1, n))(shifts)` algebras: the units
/// must agree up to an exact power of the base.
pub fn decide_matrix_leavitt_iso(
    a: &ShiftVector,
    b: &ShiftVector,
) -> Result<MatrixIsoVerdict, IsoError> {
    if a.base != b.base {
        return Ok(MatrixIsoVerdict::NotIso);
    }
    Ok(
        match power_ratio(a.base, &a.unit_value(), &b.unit_value()) {
            Some(twist) => MatrixIsoVerdict::Iso { twist },
            None => MatrixIsoVerdict::NotIso,
        },
    )
}

/// Decide graded isomorphism of free modules `⊕_i L(1, n)(shift_i)`: their
/// classes must be exactly equal. Different bases are not comparable.
pub fn decide_free_module_iso(a: &ShiftVector, b: &ShiftVector) -> Result<bool, IsoError> {
    if a.base != b.base {
        return Err(IsoError::BaseMismatch {
            left: a.base,
            right: b.base,
        });
    }
    Ok(a.free_value() == b.free_value())
}

/// Write `k = t * d` with `gcd(t, base) = 1` and every prime of `d`
/// dividing `base`.
pub fn abrams_factorization(k: u64, base: u64) -> (u64, u64) {
    assert!(k >= 1, "matrix sizes are positive");
    assert!(base >= 2, "base must be at least 2");
    let mut t = k;
    let mut d = 1u64;
    loop {
        let g = num_integer::gcd(t, base);
        if g == 1 {
            return (t, d);
        }
        t /= g;
        d *= g;
    }
}
