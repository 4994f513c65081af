//! Dense exact linear algebra over the rationals.
//!
//! Vectors are coordinate columns (`Vec<Rat>`), matrices act on the left.
//! Subspaces keep a fully reduced row echelon basis, so membership tests and
//! coordinate extraction are single reduction passes.

#![allow(clippy::needless_range_loop)]

use crate::dense;
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rat) {
        let cell = &mut self.data[r * self.cols + c];
        *cell += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn row_slice(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Matrix product, skipping zero entries on both sides; generator
    /// coefficient matrices are sparse.
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let brow = other.row_slice(k);
                for (c, b) in brow.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(r, c, &(a * b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Rat::zero(); self.rows];
        for r in 0..self.rows {
            let row = self.row_slice(r);
            let mut acc = Rat::zero();
            for (a, x) in row.iter().zip(v) {
                if a.is_zero() || x.is_zero() {
                    continue;
                }
                acc += &(a * x);
            }
            out[r] = acc;
        }
        out
    }

    pub fn commutes_with(&self, other: &RatMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Basis of the null space `{x : Mx = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut rref: Vec<Vec<Rat>> = (0..self.rows).map(|r| self.row_slice(r).to_vec()).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (rank..rref.len()).find(|&r| !rref[r][col].is_zero()) else {
                continue;
            };
            rref.swap(rank, pr);
            let inv = rref[rank][col].recip();
            for c in col..self.cols {
                let v = &rref[rank][c] * &inv;
                rref[rank][c] = v;
            }
            for r in 0..rref.len() {
                if r != rank && !rref[r][col].is_zero() {
                    let factor = rref[r][col].clone();
                    for c in col..self.cols {
                        let t = &rref[rank][c] * &factor;
                        rref[r][c] -= &t;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rref.len() {
                break;
            }
        }
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A subspace of `Q^dim` kept as a fully reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(dim: usize) -> Subspace {
        Subspace {
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Subspace {
        let mut s = Subspace::empty(dim);
        for i in 0..dim {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::one();
            s.insert(&v);
        }
        s
    }

    pub fn from_vectors(dim: usize, vectors: &[Vec<Rat>]) -> Subspace {
        let mut s = Subspace::empty(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Residue of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if w[pc].is_zero() {
                continue;
            }
            let c = w[pc].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &(&c * ri);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc].clone();
            if !c.is_zero() {
                for (wi, ri) in w.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *wi -= &(&c * ri);
                    }
                }
            }
            coords.push(c);
        }
        if w.iter().all(Rat::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = self.reduce(v);
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pivot].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // Eliminate the new pivot column from the existing rows.
        for row in self.basis.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let c = row[pivot].clone();
            for (ri, wi) in row.iter_mut().zip(&w) {
                if !wi.is_zero() {
                    *ri -= &(&c * wi);
                }
            }
        }
        // Keep rows ordered by pivot column.
        let at = self
            .pivots
            .iter()
            .position(|&pc| pc > pivot)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, pivot);
        self.basis.insert(at, w);
        true
    }

    /// Linear combination of the echelon basis.
    pub fn combine(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut out = vec![Rat::zero(); self.dim];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (oi, ri) in out.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *oi += &(c * ri);
                }
            }
        }
        out
    }

    /// Smallest subspace containing the seeds and invariant under every
    /// operator.
    pub fn invariant_closure(dim: usize, seeds: &[Vec<Rat>], ops: &[&RatMatrix]) -> Subspace {
        let mut space = Subspace::empty(dim);
        let mut work: Vec<Vec<Rat>> = Vec::new();
        for s in seeds {
            if space.insert(s) {
                work.push(s.to_vec());
            }
        }
        while let Some(v) = work.pop() {
            for op in ops {
                let w = op.mul_vec(&v);
                if space.insert(&w) {
                    work.push(w);
                }
            }
        }
        space
    }

    /// Matrix of `op` restricted to this subspace, if the subspace is
    /// invariant under it.
    pub fn restrict(&self, op: &RatMatrix) -> Option<RatMatrix> {
        let k = self.basis.len();
        let mut m = RatMatrix::zeros(k, k);
        for (j, b) in self.basis.iter().enumerate() {
            let coords = self.coords(&op.mul_vec(b))?;
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Some(m)
    }

    /// Largest subspace of `self` mapped into `self` by `op`.
    pub fn largest_invariant_under(&self, op: &RatMatrix) -> Subspace {
        let mut cur = self.clone();
        loop {
            if cur.rank() == 0 {
                return cur;
            }
            // Residues of op(basis) modulo cur; kernel of the residue map
            // gives the combinations staying inside.
            let residues: Vec<Vec<Rat>> = cur
                .basis
                .iter()
                .map(|b| cur.reduce(&op.mul_vec(b)))
                .collect();
            if residues.iter().all(|r| r.iter().all(Rat::is_zero)) {
                return cur;
            }
            // Columns of the residue matrix are indexed by basis vectors.
            let mut m = RatMatrix::zeros(self.dim, cur.rank());
            for (j, r) in residues.iter().enumerate() {
                for (i, x) in r.iter().enumerate() {
                    if !x.is_zero() {
                        m.set(i, j, x.clone());
                    }
                }
            }
            let combos = m.kernel();
            let next_vectors: Vec<Vec<Rat>> = combos.iter().map(|c| cur.combine(c)).collect();
            let next = Subspace::from_vectors(self.dim, &next_vectors);
            debug_assert!(next.rank() < cur.rank());
            cur = next;
        }
    }
}

/// Monic minimal polynomial of a square matrix (ascending coefficients),
/// via Krylov sequences from every standard basis vector.
pub fn minimal_polynomial(m: &RatMatrix) -> Vec<Rat> {
    assert_eq!(m.rows(), m.cols());
    let k = m.rows();
    if k == 0 {
        return vec![Rat::one()];
    }
    let mut min = vec![Rat::one()];
    for start in 0..k {
        if dense::degree(&min) == k {
            break;
        }
        let mut v = vec![Rat::zero(); k];
        v[start] = Rat::one();
        let local = local_annihilator(m, &v);
        min = dense::lcm(&min, &local);
    }
    min
}

fn local_annihilator(m: &RatMatrix, v: &[Rat]) -> Vec<Rat> {
    let k = m.rows();
    // (reduced vector, pivot, polynomial combination) triples.
    let mut rows: Vec<(Vec<Rat>, usize, Vec<Rat>)> = Vec::new();
    let mut power = v.to_vec();
    let mut deg = 0usize;
    loop {
        let mut w = power.clone();
        let mut q = vec![Rat::zero(); deg + 1];
        q[deg] = Rat::one();
        for (row, pivot, poly) in &rows {
            if w[*pivot].is_zero() {
                continue;
            }
            let c = w[*pivot].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *wi -= &(&c * ri);
                }
            }
            for (i, pi) in poly.iter().enumerate() {
                if !pi.is_zero() {
                    q[i] -= &(&c * pi);
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => return q,
            Some(pivot) => {
                let inv = w[pivot].recip();
                for x in w.iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                let q_scaled = dense::scale(&q, &inv);
                rows.push((w, pivot, q_scaled));
            }
        }
        debug_assert!(deg <= k);
        power = m.mul_vec(&power);
        deg += 1;
    }
}
