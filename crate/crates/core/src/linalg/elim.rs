//! Exact elimination over Q(q).
//!
//! Rows are sparse: sorted `(column, value)` pairs without zeros. Kernel,
//! rank and solve clear denominators and eliminate fraction-free over Z[q];
//! back substitution happens in Q(q). Pivots are chosen column by column,
//! taking the lowest-index row among those whose leading entry sits in the
//! current column.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Matrix;
use crate::scalars::{modp, IntPoly, ScalarError, Q};

pub type SparseVec = Vec<(usize, Q)>;

/// Drop zeros from a dense vector.
pub fn sparse_from_dense(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn sparse_rows(m: &Matrix) -> Vec<SparseVec> {
    (0..m.rows()).map(|i| sparse_from_dense(m.row(i))).collect()
}

/// `v + c * w`.
pub fn axpy(v: &SparseVec, c: &Q, w: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return v.clone();
    }
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut a, mut b) = (v.iter().peekable(), w.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap().clone()),
            (None, Some(_)) => {
                let (j, y) = b.next().unwrap();
                out.push((*j, c * y));
            }
            (Some((i, _)), Some((j, _))) => {
                if i < j {
                    out.push(a.next().unwrap().clone());
                } else if j < i {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                } else {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + &(c * y);
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                }
            }
        }
    }
    out
}

pub fn scale_sparse(v: &SparseVec, c: &Q) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

fn lookup(v: &SparseVec, col: usize) -> Option<&Q> {
    v.binary_search_by_key(&col, |(i, _)| *i).ok().map(|k| &v[k].1)
}

type PolyRow = Vec<(usize, IntPoly)>;

fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    a.div_exact(&g).unwrap().mul(b)
}

fn make_primitive(mut row: PolyRow) -> PolyRow {
    if row.is_empty() {
        return row;
    }
    let mut g = row[0].1.clone();
    for (_, p) in &row[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(p);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, p) in row.iter_mut() {
            *p = p.div_exact(&g).unwrap();
        }
    }
    if row[0].1.leading().is_some_and(|l| l < &num_bigint::BigInt::from(0)) {
        for (_, p) in row.iter_mut() {
            *p = p.neg();
        }
    }
    row
}

fn clear_denominators(v: &SparseVec) -> PolyRow {
    let mut l = IntPoly::one();
    for (_, x) in v {
        l = lcm(&l, x.denominator());
    }
    let row = v
        .iter()
        .map(|(i, x)| {
            let f = l.div_exact(x.denominator()).unwrap();
            (*i, x.numerator().mul(&f))
        })
        .collect();
    make_primitive(row)
}

/// `p * target - a * pivot` after cancelling `gcd(p, a)`, made primitive.
fn eliminate(target: &PolyRow, pivot: &PolyRow) -> PolyRow {
    let col = pivot[0].0;
    debug_assert_eq!(target[0].0, col);
    let a = &target[0].1;
    let p = &pivot[0].1;
    let g = a.gcd(p);
    let (a, p) = if g.is_one() {
        (a.clone(), p.clone())
    } else {
        (a.div_exact(&g).unwrap(), p.div_exact(&g).unwrap())
    };
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut x, mut y) = (target[1..].iter().peekable(), pivot[1..].iter().peekable());
    loop {
        match (x.peek(), y.peek()) {
            (None, None) => break,
            (Some(_), None) => {
                let (i, u) = x.next().unwrap();
                out.push((*i, u.mul(&p)));
            }
            (None, Some(_)) => {
                let (j, w) = y.next().unwrap();
                out.push((*j, w.mul(&a).neg()));
            }
            (Some((i, _)), Some((j, _))) => {
                if i < j {
                    let (i, u) = x.next().unwrap();
                    out.push((*i, u.mul(&p)));
                } else if j < i {
                    let (j, w) = y.next().unwrap();
                    out.push((*j, w.mul(&a).neg()));
                } else {
                    let (i, u) = x.next().unwrap();
                    let (_, w) = y.next().unwrap();
                    let s = u.mul(&p).sub(&w.mul(&a));
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                }
            }
        }
    }
    make_primitive(out)
}

/// Row echelon form over Z[q]; returns pivot rows sorted by pivot column.
fn echelon(rows: &[SparseVec]) -> Vec<PolyRow> {
    let mut store: Vec<PolyRow> = Vec::with_capacity(rows.len());
    let mut buckets: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for r in rows {
        let pr = clear_denominators(r);
        if let Some(&(c, _)) = pr.first() {
            buckets.entry(c).or_default().insert(store.len());
        }
        store.push(pr);
    }
    let mut pivots = Vec::new();
    while let Some((_, members)) = buckets.pop_first() {
        let mut it = members.into_iter();
        let pidx = it.next().unwrap();
        let pivot = std::mem::take(&mut store[pidx]);
        for r in it {
            let reduced = eliminate(&store[r], &pivot);
            if let Some(&(c, _)) = reduced.first() {
                buckets.entry(c).or_default().insert(r);
            }
            store[r] = reduced;
        }
        pivots.push(pivot);
    }
    pivots
}

fn to_q_row(row: &PolyRow) -> SparseVec {
    row.iter().map(|(i, p)| (*i, Q::from_poly(p.clone()))).collect()
}

/// Fully reduced echelon form over Q(q) with unit pivots.
fn reduced_echelon(rows: &[SparseVec]) -> Vec<SparseVec> {
    let ech = echelon(rows);
    let mut out: Vec<SparseVec> = Vec::with_capacity(ech.len());
    for row in ech.iter().rev() {
        let mut v = to_q_row(row);
        let lead = v[0].1.inv().expect("pivot is nonzero");
        v = scale_sparse(&v, &lead);
        for done in &out {
            let pc = done[0].0;
            if let Some(c) = lookup(&v, pc).cloned() {
                v = axpy(&v, &-c, done);
            }
        }
        out.push(v);
    }
    out.reverse();
    out
}

/// Null-space basis of the matrix with the given sparse rows. One basis
/// vector per free column in increasing order, with a 1 in that column.
pub fn kernel_sparse(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let rref = reduced_echelon(rows);
    let pivot_cols: BTreeSet<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v: SparseVec = Vec::new();
        for r in &rref {
            if let Some(x) = lookup(r, f) {
                v.push((r[0].0, -x));
            }
        }
        v.push((f, Q::one()));
        v.sort_by_key(|(i, _)| *i);
        out.push(v);
    }
    out
}

pub fn kernel(a: &Matrix) -> Vec<Vec<Q>> {
    kernel_sparse(&sparse_rows(a), a.cols())
        .iter()
        .map(|v| dense_from_sparse(v, a.cols()))
        .collect()
}

/// A particular solution of `A x = b` with free variables set to zero.
pub fn solve_sparse(rows: &[SparseVec], ncols: usize, b: &[Q]) -> Option<SparseVec> {
    assert_eq!(rows.len(), b.len());
    let aug: Vec<SparseVec> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            if !bi.is_zero() {
                r.push((ncols, bi.clone()));
            }
            r
        })
        .collect();
    let rref = reduced_echelon(&aug);
    let mut x = Vec::new();
    for r in &rref {
        let pc = r[0].0;
        if pc == ncols {
            return None;
        }
        if let Some(v) = lookup(r, ncols) {
            x.push((pc, v.clone()));
        }
    }
    x.sort_by_key(|(i, _)| *i);
    Some(x)
}

pub fn solve(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    solve_sparse(&sparse_rows(a), a.cols(), b).map(|x| dense_from_sparse(&x, a.cols()))
}

pub fn rank_exact(rows: &[SparseVec]) -> usize {
    echelon(rows).len()
}

const PRESCREEN_SEED: u64 = 0x005e_ed0f_9a55;

/// Evaluate rows at a random point mod the fixed prime; `None` if every
/// attempted point hits a pole.
fn modular_image(rows: &[SparseVec], ncols: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<u64>>> {
    'attempt: for _ in 0..8 {
        let q0 = rng.gen_range(2..modp::PRIME - 1);
        let mut out = vec![vec![0u64; ncols]; rows.len()];
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row {
                match x.eval_mod_p(q0, modp::PRIME) {
                    Ok(v) => out[r][*c] = v,
                    Err(ScalarError::Pole { .. }) => continue 'attempt,
                    Err(e) => panic!("unexpected scalar error {e}"),
                }
            }
        }
        return Some(out);
    }
    None
}

/// Rank of a random specialisation. Never exceeds the exact rank.
pub fn rank_mod_p(rows: &[SparseVec], ncols: usize, seed: u64) -> Option<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    modular_image(rows, ncols, &mut rng).map(|m| modp::rank(m, ncols, modp::PRIME))
}

/// Exact rank. A full-rank modular image certifies the answer; otherwise
/// the exact path decides.
pub fn rank_sparse(rows: &[SparseVec], ncols: usize) -> usize {
    let full = rows.len().min(ncols);
    if rank_mod_p(rows, ncols, PRESCREEN_SEED) == Some(full) {
        return full;
    }
    rank_exact(rows)
}

pub fn rank(a: &Matrix) -> usize {
    rank_sparse(&sparse_rows(a), a.cols())
}

/// Incrementally built span of sparse vectors with coordinate tracking.
///
/// Each stored row has a unit pivot and zeros in all earlier columns, and
/// remembers how to write it in terms of the accepted generators.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<(usize, SparseVec, SparseVec)>,
    accepted: usize,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.accepted
    }

    fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v.clone();
        let mut combo: SparseVec = Vec::new();
        for (pc, row, rc) in &self.rows {
            if v.first().is_none() {
                break;
            }
            if let Some(c) = lookup(&v, *pc).cloned() {
                let neg = -c;
                v = axpy(&v, &neg, row);
                combo = axpy(&combo, &neg, rc);
            }
        }
        (v, combo)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Add `v` if independent; returns its index among accepted generators.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let (res, combo) = self.reduce(v);
        let (pc, lead) = res.first()?.clone();
        let inv = lead.inv().expect("nonzero");
        let idx = self.accepted;
        self.accepted += 1;
        let mut rc = scale_sparse(&combo, &inv);
        rc.push((idx, inv.clone()));
        let row = scale_sparse(&res, &inv);
        let pos = self.rows.partition_point(|(c, _, _)| *c < pc);
        self.rows.insert(pos, (pc, row, rc));
        Some(idx)
    }

    /// Coefficients of `v` on the accepted generators, if `v` lies in the span.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let (res, combo) = self.reduce(v);
        if res.is_empty() {
            Some(scale_sparse(&combo, &Q::from_int(-1)))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(c: i64) -> Q {
        Q::from_int(c)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel(&Matrix::identity(4)).is_empty());
        assert_eq!(rank(&Matrix::identity(4)), 4);
    }

    #[test]
    fn solve_zero_rhs() {
        let a = Matrix::from_fn(2, 3, |i, j| Q::q_pow((i + j) as i64));
        let x = solve(&a, &[Q::zero(), Q::zero()]).unwrap();
        assert!(x.iter().all(Q::is_zero));
    }

    #[test]
    fn kernel_of_q_matrix() {
        // [[q, 1], [q^2, q]] has kernel spanned by (-1/q, 1).
        let a = Matrix::from_rows(vec![vec![Q::q(), qi(1)], vec![Q::q_pow(2), Q::q()]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![-Q::q_pow(-1), qi(1)]);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn inconsistent_system() {
        let a = Matrix::from_rows(vec![vec![qi(1), qi(1)], vec![qi(1), qi(1)]]);
        assert!(solve(&a, &[qi(1), qi(2)]).is_none());
        let x = solve(&a, &[Q::q(), Q::q()]).unwrap();
        assert_eq!(x, vec![Q::q(), Q::zero()]);
    }

    #[test]
    fn span_coordinates() {
        let mut s = Span::new();
        let v1 = vec![(0, qi(1)), (1, Q::q())];
        let v2 = vec![(1, qi(1)), (2, qi(2))];
        assert_eq!(s.insert(&v1), Some(0));
        assert_eq!(s.insert(&v2), Some(1));
        let w = axpy(&scale_sparse(&v1, &qi(3)), &Q::hecke(), &v2);
        assert_eq!(s.insert(&w), None);
        assert_eq!(s.coords(&w), Some(vec![(0, qi(3)), (1, Q::hecke())]));
        assert!(!s.contains(&vec![(2, qi(1))]));
    }

    #[test]
    fn span_coordinates_after_reduction() {
        let mut s = Span::new();
        let v1 = vec![(0, qi(1)), (1, qi(2))];
        let v2 = vec![(0, qi(3)), (1, Q::q())];
        s.insert(&v1);
        s.insert(&v2);
        let w = axpy(&scale_sparse(&v1, &Q::q()), &qi(-5), &v2);
        assert_eq!(s.coords(&w), Some(vec![(0, Q::q()), (1, qi(-5))]));
        assert_eq!(s.coords(&v2), Some(vec![(1, qi(1))]));
    }
}
