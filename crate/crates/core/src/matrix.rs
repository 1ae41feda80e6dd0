//! Exact integer linear algebra: dense matrices over arbitrary-precision
//! integers, Smith normal form with unimodular transforms, cokernels as
//! finitely generated abelian groups, and eventual kernels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::graph::{Graph, VertexId};

/// Dense row-major matrix over `BigInt`. Shape mismatches are programmer
/// errors and panic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Convenience constructor from machine integers (tests, small fixtures).
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    /// `self` to the `m`-th power; `m = 0` gives the identity.
    pub fn pow(&self, m: usize) -> IntMatrix {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut acc = IntMatrix::identity(self.rows);
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Keep only the columns whose index satisfies `keep`.
    pub fn filter_cols(&self, keep: impl Fn(usize) -> bool) -> IntMatrix {
        let kept: Vec<usize> = (0..self.cols).filter(|&j| keep(j)).collect();
        IntMatrix::from_fn(self.rows, kept.len(), |i, j| self[(i, kept[j])].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn row_addmul(&mut self, dst: usize, src: usize, c: &BigInt) {
        assert_ne!(dst, src);
        for j in 0..self.cols {
            let t = &self[(src, j)] * c;
            self[(dst, j)] += t;
        }
    }

    fn col_addmul(&mut self, dst: usize, src: usize, c: &BigInt) {
        assert_ne!(dst, src);
        for i in 0..self.rows {
            let t = &self[(i, src)] * c;
            self[(i, dst)] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division is exact");
                    m[(i, j)] = q;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

// ====== Smith normal form ======

/// `u * a * v = s` with `u`, `v` unimodular and `s` in Smith normal form:
/// diagonal, nonnegative, each nonzero entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Does `a * x = w` have an integer solution? Solved through the
    /// decomposition: `s * y = u * w` with `x = v * y`.
    pub fn image_contains(&self, w: &[BigInt]) -> bool {
        assert_eq!(w.len(), self.s.rows(), "shape mismatch in image_contains");
        let uw = self.u.apply(w);
        let r = self.rank();
        for (i, val) in uw.iter().enumerate() {
            if i < r {
                if !val.is_multiple_of(&self.s[(i, i)]) {
                    return false;
                }
            } else if !val.is_zero() {
                return false;
            }
        }
        true
    }
}

/// Smith normal form with transforms. Pivots are chosen as a smallest-
/// absolute-value nonzero entry of the remaining submatrix, which keeps
/// intermediate entries small on the inputs this crate produces.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut s = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let bound = a.rows().min(a.cols());

    for k in 0..bound {
        'pivot: loop {
            // Move a smallest-magnitude nonzero entry of s[k.., k..] to (k, k).
            let Some((pi, pj)) = min_abs_nonzero(&s, k) else {
                break 'pivot;
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // Reduce the rest of column k; remainders are strictly smaller
            // than the pivot, so re-picking the pivot terminates.
            let mut reduced = true;
            for i in k + 1..s.rows() {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, k)] / &s[(k, k)]);
                if !q.is_zero() {
                    s.row_addmul(i, k, &q);
                    u.row_addmul(i, k, &q);
                }
                if !s[(i, k)].is_zero() {
                    reduced = false;
                }
            }
            if !reduced {
                continue 'pivot;
            }
            for j in k + 1..s.cols() {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(k, j)] / &s[(k, k)]);
                if !q.is_zero() {
                    s.col_addmul(j, k, &q);
                    v.col_addmul(j, k, &q);
                }
                if !s[(k, j)].is_zero() {
                    reduced = false;
                }
            }
            if !reduced {
                continue 'pivot;
            }

            // Divisibility: the pivot must divide the remaining submatrix so
            // the final diagonal forms a chain. Fold an offending row in and
            // start over at this position.
            for i in k + 1..s.rows() {
                for j in k + 1..s.cols() {
                    if !s[(i, j)].is_multiple_of(&s[(k, k)]) {
                        s.row_addmul(k, i, &BigInt::one());
                        u.row_addmul(k, i, &BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }

    for i in 0..bound {
        if s[(i, i)].is_negative() {
            s.negate_row(i);
            u.negate_row(i);
        }
    }
    SmithDecomposition { s, u, v }
}

fn min_abs_nonzero(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows() {
        for j in from..m.cols() {
            if m[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some(b) if m[b].abs() <= m[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

// ====== Finitely generated abelian groups ======

/// Invariant-factor presentation `Z^free_rank (+) Z/d1 (+) ... (+) Z/dk`
/// with `1 < d1 | d2 | ... | dk`. Structural equality is isomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinAbGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<alloc::string::String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(alloc::format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

/// The group `Z^rows(a) / image(a)`, in invariant-factor form.
pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    FinAbGroup {
        free_rank: a.rows() - factors.len(),
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Basis and certified power for the eventual kernel of a square matrix.
#[derive(Clone, Debug)]
pub struct StableKernel {
    /// A lattice basis of `ker(a^power)` = the union of all `ker(a^m)`.
    pub basis: Vec<Vec<BigInt>>,
    /// Power at which the kernel stabilized: kernel ranks at `power` and
    /// `power + 1` agree.
    pub power: usize,
}

impl StableKernel {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// The eventual kernel `union over m of ker(a^m)` of a square matrix, with
/// the stabilization certified by equal kernel ranks at consecutive powers.
pub fn stable_kernel(a: &IntMatrix) -> StableKernel {
    assert!(a.is_square(), "stable_kernel of non-square matrix");
    let n = a.rows();
    if n == 0 {
        return StableKernel {
            basis: Vec::new(),
            power: 0,
        };
    }
    let mut power = 1usize;
    let mut current = a.clone();
    loop {
        let snf = smith_normal_form(&current);
        let next = current.mul(a);
        let next_rank = smith_normal_form(&next).rank();
        if snf.rank() == next_rank {
            // Kernel columns of v span ker(current): s*y = 0 exactly on the
            // coordinates past the rank.
            let basis = (snf.rank()..n)
                .map(|j| (0..n).map(|i| snf.v[(i, j)].clone()).collect())
                .collect();
            return StableKernel { basis, power };
        }
        current = next;
        power += 1;
        debug_assert!(
            power <= n + 1,
            "kernel ranks stabilize within the dimension"
        );
    }
}

// ====== Graph-derived matrices ======

/// Adjacency matrix in declaration order: entry (i, j) counts edges from
/// vertex i to vertex j.
pub fn adjacency(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zero(g.vertex_count(), g.vertex_count());
    for (_, e) in g.edges() {
        m[(e.source.0, e.range.0)] += 1;
    }
    m
}

/// The presentation matrix of the Grothendieck group: transpose the adjacency
/// matrix and the identity, drop the columns of sink vertices, and subtract.
/// Maps `Z^(non-sinks) -> Z^(vertices)`.
pub fn k0_presentation_matrix(g: &Graph) -> IntMatrix {
    let keep = |j: usize| !g.is_sink(VertexId(j));
    let nt = adjacency(g).transpose().filter_cols(keep);
    let it = IntMatrix::identity(g.vertex_count()).filter_cols(keep);
    nt.sub(&it)
}
