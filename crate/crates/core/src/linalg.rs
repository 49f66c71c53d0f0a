//! Exact dense linear algebra over the rationals.
//!
//! Everything downstream (derivation spaces, biderivation solvers) reduces to
//! assembling a constraint matrix and computing its reduced row-echelon form or
//! nullspace. All arithmetic is exact: entries are arbitrary-precision
//! rationals, elimination is fraction-free internally (integer rows with
//! content removal) and only normalizes to rational pivots on output.
//!
//! Pivot choice is deterministic: first nonzero entry scanning left-to-right,
//! top-to-bottom. Together with the canonical reduced echelon output this makes
//! every basis produced here reproducible across runs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer rational `n/1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`, normalized. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the canonical rational encoding: `p` or `p/q` in base 10, with an
/// optional leading `-` on `p` only and `q` a positive integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    fn parse_digits(part: &str, allow_sign: bool) -> Result<BigInt, String> {
        let (neg, digits) = match part.strip_prefix('-') {
            Some(rest) if allow_sign => (true, rest),
            Some(_) => return Err("sign not allowed here".to_string()),
            None => (false, part),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid integer literal {part:?}"));
        }
        let mut n = BigInt::zero();
        for b in digits.bytes() {
            n = n * 10 + (b - b'0');
        }
        Ok(if neg { -n } else { n })
    }

    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_digits(s, true)?)),
        Some((p, q)) => {
            let num = parse_digits(p, true)?;
            let den = parse_digits(q, false)?;
            if den.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Formats a rational in the canonical encoding (`p` or `p/q`).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Dense row-major matrix of rationals. Row and column counts may be zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in Matrix::from_rows"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-literal convenience, mostly for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| rat(n)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).map(|k| self.at(r, k) * other.at(k, c)).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, k: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * k)
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        (0..self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    /// Stacks matrices vertically; all must share the column count.
    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        assert!(parts.iter().all(|m| m.cols == cols), "vstack column mismatch");
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for m in parts {
            entries.extend_from_slice(&m.entries);
        }
        Matrix { rows, cols, entries }
    }

    /// Appends `b` as an extra column.
    pub fn augment_column(&self, b: &[Rational]) -> Matrix {
        assert_eq!(self.rows, b.len(), "augment length mismatch");
        Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Sparse integer row: nonzero entries sorted by column index.
#[derive(Clone)]
struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    fn from_dense(row: &[Rational]) -> Self {
        // Clear denominators so elimination stays in the integers.
        let mut lcm = BigInt::one();
        for x in row {
            if !x.is_zero() {
                lcm = lcm.lcm(x.denom());
            }
        }
        let entries = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
            .collect();
        let mut r = SparseRow { entries };
        r.remove_content();
        r
    }

    fn from_sparse(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|&(c, _)| c);
        // Merge duplicate columns, then clear denominators.
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        let mut lcm = BigInt::one();
        for (_, v) in &merged {
            lcm = lcm.lcm(v.denom());
        }
        let entries = merged
            .into_iter()
            .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
            .collect();
        let mut r = SparseRow { entries };
        r.remove_content();
        r
    }

    fn lead(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    /// Divides out the gcd of all entries and makes the leading entry positive.
    fn remove_content(&mut self) {
        if self.entries.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if self.entries[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v = &*v / &g;
            }
        }
    }

    /// `pivot_lead * self - self_lead * pivot_row`, cancelling the shared
    /// leading column. Both rows must lead at the same column.
    fn eliminate_with(&self, pivot_row: &SparseRow) -> SparseRow {
        let (c_self, lead_self) = self.lead().expect("eliminate_with on zero row");
        let (c_piv, lead_piv) = pivot_row.lead().expect("zero pivot row");
        debug_assert_eq!(c_self, c_piv);
        let a = lead_piv.clone();
        let b = lead_self.clone();
        let mut out = Vec::with_capacity(self.entries.len() + pivot_row.entries.len());
        let mut it_s = self.entries.iter().peekable();
        let mut it_p = pivot_row.entries.iter().peekable();
        loop {
            match (it_s.peek(), it_p.peek()) {
                (None, None) => break,
                (Some((cs, vs)), None) => {
                    out.push((*cs, &a * vs));
                    it_s.next();
                }
                (None, Some((cp, vp))) => {
                    out.push((*cp, -(&b * vp)));
                    it_p.next();
                }
                (Some((cs, vs)), Some((cp, vp))) => {
                    if cs < cp {
                        out.push((*cs, &a * vs));
                        it_s.next();
                    } else if cp < cs {
                        out.push((*cp, -(&b * vp)));
                        it_p.next();
                    } else {
                        let v = &a * vs - &b * vp;
                        if !v.is_zero() {
                            out.push((*cs, v));
                        }
                        it_s.next();
                        it_p.next();
                    }
                }
            }
        }
        let mut r = SparseRow { entries: out };
        r.remove_content();
        r
    }
}

/// Incremental echelon-form accumulator over integer rows.
///
/// Rows are inserted one at a time and reduced against the pivots already
/// present; the row space after any prefix of insertions equals the row space
/// of the rows inserted so far. Used both for one-shot `rref`/`nullspace` and
/// for streaming constraint assembly where materializing the full matrix would
/// be wasteful.
pub(crate) struct Eliminator {
    cols: usize,
    /// Echelon rows sorted by leading column; leading columns are distinct.
    rows: Vec<SparseRow>,
}

impl Eliminator {
    pub(crate) fn new(cols: usize) -> Self {
        Eliminator { cols, rows: Vec::new() }
    }

    pub(crate) fn cols(&self) -> usize {
        self.cols
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// True once the row space is all of the ambient space (kernel is zero).
    pub(crate) fn saturated(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub(crate) fn insert_dense(&mut self, row: &[Rational]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        self.insert(SparseRow::from_dense(row))
    }

    pub(crate) fn insert_sparse(&mut self, entries: Vec<(usize, Rational)>) -> bool {
        debug_assert!(entries.iter().all(|&(c, _)| c < self.cols));
        self.insert(SparseRow::from_sparse(entries))
    }

    fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let lead_col = match row.lead() {
                None => return false,
                Some((c, _)) => c,
            };
            match self.rows.binary_search_by_key(&lead_col, |r| r.lead().unwrap().0) {
                Ok(idx) => row = row.eliminate_with(&self.rows[idx]),
                Err(idx) => {
                    self.rows.insert(idx, row);
                    return true;
                }
            }
        }
    }

    pub(crate) fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.lead().unwrap().0).collect()
    }

    /// Reduced echelon rows as rationals: unit pivots, zeros above each pivot.
    pub(crate) fn into_rref_rows(self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let pivots = self.pivots();
        let cols = self.cols;
        let mut dense: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| {
                let lead = r.lead().unwrap().1.clone();
                let mut d = vec![Rational::zero(); cols];
                for (c, v) in &r.entries {
                    d[*c] = Rational::new(v.clone(), lead.clone());
                }
                d
            })
            .collect();
        for i in (0..dense.len()).rev() {
            let p = pivots[i];
            for j in 0..i {
                let factor = dense[j][p].clone();
                if !factor.is_zero() {
                    let (above, below) = dense.split_at_mut(i);
                    let src = &below[0];
                    for c in p..cols {
                        if !src[c].is_zero() {
                            let delta = &factor * &src[c];
                            above[j][c] -= delta;
                        }
                    }
                }
            }
        }
        (dense, pivots)
    }

    /// Canonical kernel vectors: one per free column, with value 1 at the free
    /// column and 0 at every other free column, solved by back-substitution.
    pub(crate) fn kernel_vectors(&self) -> Vec<Vec<Rational>> {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Rational::zero(); self.cols];
            x[f] = Rational::one();
            for row in self.rows.iter().rev() {
                let (p, lead) = row.lead().unwrap();
                let mut s = Rational::zero();
                for (c, v) in row.entries.iter().skip(1) {
                    if !x[*c].is_zero() {
                        s += Rational::from_integer(v.clone()) * &x[*c];
                    }
                }
                x[p] = if s.is_zero() {
                    Rational::zero()
                } else {
                    -s / Rational::from_integer(lead.clone())
                };
            }
            out.push(x);
        }
        out
    }
}

/// Result of reduced row-echelon elimination.
pub struct RrefResult {
    pub matrix: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Reduced row-echelon form, computed exactly. The output shape equals the
/// input shape (zero rows padded at the bottom).
pub fn rref(m: &Matrix) -> RrefResult {
    let mut elim = Eliminator::new(m.cols());
    for r in 0..m.rows() {
        elim.insert_dense(m.row(r));
    }
    let (mut rows, pivot_cols) = elim.into_rref_rows();
    let rank = rows.len();
    while rows.len() < m.rows() {
        rows.push(vec![Rational::zero(); m.cols()]);
    }
    let matrix = if m.rows() == 0 {
        Matrix::zero(0, m.cols())
    } else {
        Matrix::from_rows(rows)
    };
    RrefResult { matrix, pivot_cols, rank }
}

/// Rank only; stops early once the rank saturates the column count.
pub fn rank(m: &Matrix) -> usize {
    let mut elim = Eliminator::new(m.cols());
    for r in 0..m.rows() {
        if elim.saturated() {
            break;
        }
        elim.insert_dense(m.row(r));
    }
    elim.rank()
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let mut elim = Eliminator::new(m.cols());
    for r in 0..m.rows() {
        if elim.saturated() {
            break;
        }
        elim.insert_dense(m.row(r));
    }
    kernel_of(elim)
}

pub(crate) fn kernel_of(elim: Eliminator) -> Subspace {
    let ambient = elim.cols();
    let vectors = elim.kernel_vectors();
    Subspace::span(ambient, vectors)
}

/// Solves `a x = b`, returning the canonical solution with zeros in all
/// non-pivot coordinates, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "solve: rhs length mismatch");
    let aug = a.augment_column(b);
    let red = rref(&aug);
    if red.pivot_cols.contains(&a.cols()) {
        return None;
    }
    let mut x = vec![Rational::zero(); a.cols()];
    for (i, &p) in red.pivot_cols.iter().enumerate() {
        x[p] = red.matrix.at(i, a.cols()).clone();
    }
    Some(x)
}

/// Linear subspace of `Q^n`, stored as a reduced row-echelon basis. Because the
/// reduced echelon form is unique, structural equality is equality of spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivot_cols: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivot_cols: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors, canonicalized.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut elim = Eliminator::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "span: vector length mismatch");
            elim.insert_dense(&v);
        }
        let (rows, pivot_cols) = elim.into_rref_rows();
        let basis = if rows.is_empty() {
            Matrix::zero(0, ambient)
        } else {
            Matrix::from_rows(rows)
        };
        Subspace { ambient, basis, pivot_cols }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Remainder of `v` after reduction against the basis; zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "reduce: vector length mismatch");
        let mut w = v.to_vec();
        for (i, &p) in self.pivot_cols.iter().enumerate() {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for (wc, bc) in w.iter_mut().zip(self.basis.row(i)) {
                    if !bc.is_zero() {
                        *wc -= &factor * bc;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        // Echelon basis rows have unit pivots and zeros at the other pivot
        // columns, so coordinates can be read off at the pivot positions.
        let coords: Vec<Rational> = self.pivot_cols.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (coeff, row) in coords.iter().zip(self.basis.row_iter()) {
            if !coeff.is_zero() {
                for (rc, bc) in residual.iter_mut().zip(row) {
                    if !bc.is_zero() {
                        *rc -= coeff * bc;
                    }
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::span(
            self.ambient,
            self.basis_rows().chain(other.basis_rows()).map(<[Rational]>::to_vec),
        )
    }

    /// Linear combination of the basis rows with the given coefficients.
    pub fn combination(&self, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(coeffs.len(), self.dim());
        let mut v = vec![Rational::zero(); self.ambient];
        for (coeff, row) in coeffs.iter().zip(self.basis.row_iter()) {
            if !coeff.is_zero() {
                for (vc, bc) in v.iter_mut().zip(row) {
                    if !bc.is_zero() {
                        *vc += coeff * bc;
                    }
                }
            }
        }
        v
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{})", self.dim(), self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "3", "-3", "1/2", "-7/3", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // Non-canonical input normalizes.
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("-2/4").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0");
    }

    #[test]
    fn rational_parse_rejects_bad_grammar() {
        for s in ["", "/", "1/", "/2", "3/-4", "3/0", "+3", "1.5", "a", "1/2/3", "- 1"] {
            assert!(parse_rational(s).is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn rref_identity_is_fixed() {
        let res = rref(&Matrix::identity(2));
        assert_eq!(res.matrix, Matrix::identity(2));
        assert_eq!(res.pivot_cols, vec![0, 1]);
        assert_eq!(res.rank, 2);
    }

    #[test]
    fn rref_proportional_rows() {
        let res = rref(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(res.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(res.pivot_cols, vec![0]);
        assert_eq!(res.rank, 1);
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(&[&[2, 4, 1], &[3, 6, 0], &[0, 0, 5], &[1, 2, 3]]);
        let once = rref(&a).matrix;
        let twice = rref(&once).matrix;
        assert_eq!(once, twice);
    }

    #[test]
    fn rref_handles_empty_shapes() {
        let res = rref(&Matrix::zero(0, 3));
        assert_eq!(res.rank, 0);
        assert_eq!(res.matrix.rows(), 0);
        let res = rref(&Matrix::zero(3, 0));
        assert_eq!(res.rank, 0);
        assert_eq!(res.matrix.cols(), 0);
    }

    #[test]
    fn nullspace_identity_is_trivial() {
        assert_eq!(nullspace(&Matrix::identity(3)).dim(), 0);
    }

    #[test]
    fn nullspace_proportional_rows() {
        let ns = nullspace(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(ns.dim(), 1);
        // Canonical echelon representative of span{(-2, 1)}.
        assert_eq!(ns.basis().row(0), &[rat(1), frac(-1, 2)][..]);
    }

    #[test]
    fn nullspace_zero_matrix_is_full() {
        let ns = nullspace(&Matrix::zero(4, 6));
        assert_eq!(ns.dim(), 6);
        assert_eq!(ns.basis(), &Matrix::identity(6));
    }

    #[test]
    fn solve_identity() {
        let b = vec![rat(3), rat(-1), frac(1, 2)];
        assert_eq!(solve(&Matrix::identity(3), &b), Some(b.clone()));
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&a, &[rat(1), rat(3)]), None);
    }

    #[test]
    fn solve_canonical_free_coordinates_are_zero() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&a, &[rat(1), rat(2)]), Some(vec![rat(1), rat(0)]));
    }

    #[test]
    fn subspace_membership_and_coordinates() {
        let s = Subspace::span(3, vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]]);
        assert_eq!(s.dim(), 2);
        let v = vec![rat(2), rat(3), rat(5)];
        assert!(s.contains(&v));
        let coords = s.coordinates(&v).unwrap();
        assert_eq!(coords, vec![rat(2), rat(3)]);
        assert_eq!(s.combination(&coords), v);
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
        assert_eq!(s.coordinates(&[rat(0), rat(0), rat(1)]), None);
    }

    // Independent rank oracle: largest k such that some k x k submatrix has a
    // nonzero determinant, with determinants by cofactor expansion.
    fn det_cofactor(entries: &[Vec<Rational>]) -> Rational {
        let n = entries.len();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return entries[0][0].clone();
        }
        let mut acc = Rational::zero();
        for (j, top) in entries[0].iter().enumerate() {
            if top.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = entries[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = top * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if k > n {
            return vec![];
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.clone());
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    fn minor_rank(mat: &Matrix) -> usize {
        let max_k = mat.rows().min(mat.cols());
        for k in (1..=max_k).rev() {
            for rows in combinations(mat.rows(), k) {
                for cols in combinations(mat.cols(), k) {
                    let sub: Vec<Vec<Rational>> = rows
                        .iter()
                        .map(|&r| cols.iter().map(|&c| mat.at(r, c).clone()).collect())
                        .collect();
                    if !det_cofactor(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_matches_minor_expansion_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4 {
            let mat = Matrix::from_fn(5, 7, |_, _| {
                frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
            });
            assert_eq!(rank(&mat), minor_rank(&mat));
        }
        // Force a rank-deficient case: repeat and combine rows.
        let base = Matrix::from_fn(3, 7, |_, _| frac(rng.gen_range(-3..=3), 1));
        let r0: Vec<Rational> = base.row(0).to_vec();
        let r1: Vec<Rational> = base.row(1).to_vec();
        let sum: Vec<Rational> = r0.iter().zip(&r1).map(|(a, b)| a + b).collect();
        let mat = Matrix::from_rows(vec![
            r0.clone(),
            r1.clone(),
            base.row(2).to_vec(),
            sum,
            r0.iter().map(|x| x * rat(3)).collect(),
        ]);
        assert_eq!(rank(&mat), minor_rank(&mat));
    }

    #[test]
    fn streaming_eliminator_matches_one_shot() {
        let mat = m(&[&[2, 4, 6, 1], &[1, 2, 3, 0], &[0, 0, 1, 5], &[3, 6, 10, 6]]);
        let mut elim = Eliminator::new(4);
        for r in 0..mat.rows() {
            elim.insert_dense(mat.row(r));
        }
        let (rows, pivots) = elim.into_rref_rows();
        let direct = rref(&mat);
        assert_eq!(pivots, direct.pivot_cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.as_slice(), direct.matrix.row(i));
        }
    }
}
