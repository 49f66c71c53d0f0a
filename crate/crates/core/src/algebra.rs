//! Finite-dimensional Lie algebras over the rationals, presented by structure
//! constants, together with their finite-dimensional representations.
//!
//! An algebra of dimension `n` is stored as the family of adjoint matrices
//! `ad(e_i)`; the structure constant `c_{ij}^k` is entry `(k, j)` of `ad(e_i)`.
//! This makes the Jacobi identity literally the statement that `ad` is a
//! homomorphism, which is how [`LieAlgebra::validate`] checks it.

use crate::error::{CoreError, Result};
use crate::linalg::{self, Matrix, Rational, Subspace};
use num_traits::Zero;

/// Lie algebra given by structure constants on a fixed ordered basis.
#[derive(Clone, PartialEq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    /// `ad[i]` is the matrix of `x -> [e_i, x]` in the basis; `n` square
    /// matrices of size `n`.
    ad: Vec<Matrix>,
}

/// A failure of the structure constants to define a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureDefect {
    /// `[e_i, e_j] != -[e_j, e_i]` (includes a nonzero diagonal bracket).
    Antisymmetry { i: usize, j: usize },
    /// The Jacobi identity fails on the basis triple `i < j < k`.
    Jacobi { i: usize, j: usize, k: usize },
}

impl std::fmt::Display for StructureDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureDefect::Antisymmetry { i, j } => {
                write!(f, "antisymmetry fails on basis pair ({i}, {j})")
            }
            StructureDefect::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails on basis triple ({i}, {j}, {k})")
            }
        }
    }
}

/// Sparse bracket entry `(i, j, coefficients)` with `i < j`, as accepted by
/// [`LieAlgebra::from_brackets`].
pub type BracketEntry = (usize, usize, Vec<(usize, Rational)>);

impl LieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j]` for `i < j`; the
    /// remaining brackets are filled in by antisymmetry. Each entry is
    /// `(i, j, coefficients)` with sparse coefficients `(k, value)`.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: &[BracketEntry],
    ) -> Result<Self> {
        let n = basis.len();
        let mut ad = vec![Matrix::zero(n, n); n];
        let mut seen = std::collections::HashSet::new();
        for (i, j, coeffs) in brackets {
            if *i >= *j || *j >= n {
                return Err(CoreError::ShapeMismatch(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            if !seen.insert((*i, *j)) {
                return Err(CoreError::ShapeMismatch(format!(
                    "duplicate bracket pair ({i}, {j})"
                )));
            }
            for (k, v) in coeffs {
                if *k >= n {
                    return Err(CoreError::ShapeMismatch(format!(
                        "coefficient index {k} out of range for dimension {n}"
                    )));
                }
                *ad[*i].at_mut(*k, *j) += v;
                *ad[*j].at_mut(*k, *i) -= v;
            }
        }
        Ok(LieAlgebra { name: name.into(), basis, ad })
    }

    /// Builds from the full structure tensor `c[i][j][k]` without symmetrizing;
    /// use [`LieAlgebra::validate`] to audit it.
    pub fn from_structure_tensor(
        name: impl Into<String>,
        basis: Vec<String>,
        c: &[Vec<Vec<Rational>>],
    ) -> Result<Self> {
        let n = basis.len();
        if c.len() != n || c.iter().any(|p| p.len() != n || p.iter().any(|q| q.len() != n)) {
            return Err(CoreError::ShapeMismatch(format!(
                "structure tensor must be {n}x{n}x{n}"
            )));
        }
        let ad = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| c[i][j][k].clone()))
            .collect();
        Ok(LieAlgebra { name: name.into(), basis, ad })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.ad.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// Matrix of `ad(e_i)`.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    /// Matrix of `ad(x)` for a coordinate vector `x`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.dim());
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for (xi, adi) in x.iter().zip(&self.ad) {
            if !xi.is_zero() {
                m = m.add(&adi.scale(xi));
            }
        }
        m
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.ad[i].at(k, j)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.ad[i].column(j)
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi * yj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *slot += &scale * c;
                    }
                }
            }
        }
        out
    }

    /// Checks antisymmetry and the Jacobi identity, returning every defect.
    pub fn validate(&self) -> Vec<StructureDefect> {
        let n = self.dim();
        let mut defects = Vec::new();
        for i in 0..n {
            for j in i..n {
                let fwd = self.bracket_basis(i, j);
                let bwd = self.bracket_basis(j, i);
                if fwd.iter().zip(&bwd).any(|(a, b)| !(a + b).is_zero()) {
                    defects.push(StructureDefect::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket(&unit(n, i), &self.bracket_basis(j, k));
                    let t2 = self.bracket(&unit(n, j), &self.bracket_basis(k, i));
                    let t3 = self.bracket(&unit(n, k), &self.bracket_basis(i, j));
                    let ok = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .all(|((a, b), c)| (a + b + c).is_zero());
                    if !ok {
                        defects.push(StructureDefect::Jacobi { i, j, k });
                    }
                }
            }
        }
        defects
    }

    /// Adjoint representation `x -> ad(x)` on the algebra itself.
    pub fn adjoint(&self) -> Representation {
        Representation {
            module_dim: self.dim(),
            action: self.ad.clone(),
        }
    }

    /// Span of all brackets `[x, y]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                gens.push(self.bracket_basis(i, j));
            }
        }
        Subspace::span(n, gens)
    }

    /// Span of brackets of elements of `sub` with each other.
    pub fn derived_of(&self, sub: &Subspace) -> Subspace {
        let rows: Vec<Vec<Rational>> = sub.basis_rows().map(<[Rational]>::to_vec).collect();
        let mut gens = Vec::new();
        for (a, u) in rows.iter().enumerate() {
            for v in rows.iter().skip(a + 1) {
                gens.push(self.bracket(u, v));
            }
        }
        Subspace::span(self.dim(), gens)
    }

    /// Decreasing chain `g, [g,g], [[g,g],[g,g]], ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.dim())];
        loop {
            let next = self.derived_of(chain.last().unwrap());
            if &next == chain.last().unwrap() {
                return chain;
            }
            chain.push(next);
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().dim() == self.dim()
    }

    /// True when the derived series of `sub` reaches zero. Meaningful for
    /// subspaces closed under the bracket.
    pub fn is_solvable_span(&self, sub: &Subspace) -> bool {
        let mut cur = sub.clone();
        loop {
            let next = self.derived_of(&cur);
            if next.dim() == 0 {
                return true;
            }
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_span(&Subspace::full(self.dim()))
    }

    /// Killing form `K[i][j] = trace(ad(e_i) ad(e_j))`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| {
            let mut t = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    let x = self.ad[i].at(a, b);
                    if !x.is_zero() {
                        let y = self.ad[j].at(b, a);
                        if !y.is_zero() {
                            t += x * y;
                        }
                    }
                }
            }
            t
        })
    }

    /// Solvable radical, computed as the Killing-orthogonal complement of the
    /// derived subalgebra (valid in characteristic zero).
    pub fn radical(&self) -> Subspace {
        let killing = self.killing_form();
        let derived = self.derived_subalgebra();
        let rows: Vec<Vec<Rational>> = derived
            .basis_rows()
            .map(|b| killing.mul_vec(b))
            .collect();
        if rows.is_empty() {
            return Subspace::full(self.dim());
        }
        linalg::nullspace(&Matrix::from_rows(rows))
    }

    pub fn is_semisimple(&self) -> bool {
        linalg::rank(&self.killing_form()) == self.dim()
    }

    /// Restricts the structure constants to a subspace closed under the
    /// bracket, producing a standalone algebra on the subspace basis.
    pub fn subalgebra_on(&self, name: impl Into<String>, sub: &Subspace) -> Result<LieAlgebra> {
        let rows: Vec<Vec<Rational>> = sub.basis_rows().map(<[Rational]>::to_vec).collect();
        let mut brackets = Vec::new();
        for (i, u) in rows.iter().enumerate() {
            for (j, v) in rows.iter().enumerate().skip(i + 1) {
                let w = self.bracket(u, v);
                let coords = sub.coordinates(&w).ok_or_else(|| {
                    CoreError::InvalidStructure(format!(
                        "subspace is not closed under the bracket (pair {i}, {j})"
                    ))
                })?;
                let sparse: Vec<(usize, Rational)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                if !sparse.is_empty() {
                    brackets.push((i, j, sparse));
                }
            }
        }
        let basis = (0..sub.dim()).map(|k| format!("b{k}")).collect();
        LieAlgebra::from_brackets(name, basis, &brackets)
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra({:?}, dim {})", self.name, self.dim())
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from_integer(1.into());
    v
}

/// Representation of an `n`-dimensional algebra on `Q^m`: one `m x m` matrix
/// per algebra basis element, acting on column coordinate vectors.
#[derive(Clone, PartialEq)]
pub struct Representation {
    module_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(module_dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for (i, m) in action.iter().enumerate() {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(CoreError::ShapeMismatch(format!(
                    "action matrix {i} is {}x{}, expected {module_dim}x{module_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { module_dim, action })
    }

    /// The zero action of an `n`-dimensional algebra on `Q^m`.
    pub fn trivial(algebra_dim: usize, module_dim: usize) -> Self {
        Representation {
            module_dim,
            action: vec![Matrix::zero(module_dim, module_dim); algebra_dim],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.action
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Matrix of the action of a coordinate vector `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.algebra_dim());
        let mut m = Matrix::zero(self.module_dim, self.module_dim);
        for (xi, a) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                m = m.add(&a.scale(xi));
            }
        }
        m
    }

    pub fn apply_basis(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        self.action[i].mul_vec(v)
    }

    /// Checks `rho([e_i, e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i)` on all
    /// basis pairs of `g`.
    pub fn validate(&self, g: &LieAlgebra) -> Result<()> {
        if g.dim() != self.algebra_dim() {
            return Err(CoreError::ShapeMismatch(format!(
                "representation has {} action matrices for a dimension-{} algebra",
                self.algebra_dim(),
                g.dim()
            )));
        }
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.act(&g.bracket_basis(i, j));
                let rhs = self.action[i].commutator(&self.action[j]);
                if lhs != rhs {
                    return Err(CoreError::NotAHomomorphism { i, j });
                }
            }
        }
        Ok(())
    }

    /// Joint kernel of the action: vectors killed by every basis element.
    pub fn invariants(&self) -> Subspace {
        if self.action.is_empty() {
            return Subspace::full(self.module_dim);
        }
        let refs: Vec<&Matrix> = self.action.iter().collect();
        linalg::nullspace(&Matrix::vstack(&refs))
    }

    /// Span of `{rho(e_i) v : all i, v in sub's basis}`.
    pub fn action_span(&self, sub: &Subspace) -> Subspace {
        assert_eq!(sub.ambient_dim(), self.module_dim, "action_span ambient mismatch");
        let mut images = Vec::new();
        for a in &self.action {
            for v in sub.basis_rows() {
                images.push(a.mul_vec(v));
            }
        }
        Subspace::span(self.module_dim, images)
    }

    /// True when every action matrix is a derivation of `r`'s bracket; on
    /// failure reports the acting index and the module pair.
    pub fn acts_by_derivations(&self, r: &LieAlgebra) -> Result<()> {
        if r.dim() != self.module_dim {
            return Err(CoreError::ShapeMismatch(format!(
                "action on dimension {} cannot derive an algebra of dimension {}",
                self.module_dim,
                r.dim()
            )));
        }
        for (a, psi) in self.action.iter().enumerate() {
            for i in 0..r.dim() {
                for j in i + 1..r.dim() {
                    let lhs = psi.mul_vec(&r.bracket_basis(i, j));
                    let lhs_rhs_diff = {
                        let t1 = r.bracket(&psi.column(i), &unit(r.dim(), j));
                        let t2 = r.bracket(&unit(r.dim(), i), &psi.column(j));
                        lhs.iter()
                            .zip(t1.iter().zip(&t2))
                            .map(|(l, (x, y))| l - x - y)
                            .collect::<Vec<_>>()
                    };
                    if lhs_rhs_diff.iter().any(|v| !v.is_zero()) {
                        return Err(CoreError::NotADerivation { action_index: a, i, j });
                    }
                }
            }
        }
        Ok(())
    }

    /// Block-diagonal sum acting on the concatenation of the two modules.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.algebra_dim() != other.algebra_dim() {
            return Err(CoreError::ShapeMismatch(
                "direct sum of actions of different algebras".into(),
            ));
        }
        let m = self.module_dim + other.module_dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                Matrix::from_fn(m, m, |r, c| {
                    if r < self.module_dim && c < self.module_dim {
                        a.at(r, c).clone()
                    } else if r >= self.module_dim && c >= self.module_dim {
                        b.at(r - self.module_dim, c - self.module_dim).clone()
                    } else {
                        Rational::zero()
                    }
                })
            })
            .collect();
        Ok(Representation { module_dim: m, action })
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Representation(algebra dim {}, module dim {})",
            self.algebra_dim(),
            self.module_dim
        )
    }
}

/// A Lie algebra presented as a semidirect sum: a leading subalgebra `s`
/// acting on a trailing ideal `r` through a representation `phi` whose
/// matrices are derivations of `r`.
///
/// Construction only enforces the structural conditions (closed leading
/// block, trailing ideal, `phi` by derivations); whether `s` is semisimple
/// and `r` solvable is recorded as queryable metadata rather than enforced,
/// so degenerate splittings can still be inspected.
#[derive(Clone, PartialEq)]
pub struct SplitAlgebra {
    s: LieAlgebra,
    r: LieAlgebra,
    phi: Representation,
    total: LieAlgebra,
    s_semisimple: bool,
    radical_solvable: bool,
}

impl SplitAlgebra {
    /// Assembles the semidirect sum of `s` and `r` along `phi`. The total
    /// bracket is `[a+r, a'+r'] = [a,a'] + phi(a)r' - phi(a')r + [r,r']`.
    pub fn assemble(s: LieAlgebra, phi: Representation, r: LieAlgebra) -> Result<Self> {
        phi.validate(&s)?;
        phi.acts_by_derivations(&r)?;
        let sd = s.dim();
        let n = sd + r.dim();
        let mut ad = vec![Matrix::zero(n, n); n];
        for i in 0..sd {
            for j in 0..sd {
                for k in 0..sd {
                    *ad[i].at_mut(k, j) = s.structure_constant(i, j, k).clone();
                }
            }
            for j in 0..r.dim() {
                for k in 0..r.dim() {
                    *ad[i].at_mut(sd + k, sd + j) = phi.matrix(i).at(k, j).clone();
                    *ad[sd + j].at_mut(sd + k, i) = -phi.matrix(i).at(k, j);
                }
            }
        }
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                for k in 0..r.dim() {
                    *ad[sd + i].at_mut(sd + k, sd + j) = r.structure_constant(i, j, k).clone();
                }
            }
        }
        let mut basis = s.basis.clone();
        basis.extend(r.basis.iter().cloned());
        let total = LieAlgebra {
            name: format!("{}-ltimes-{}", s.name, r.name),
            basis,
            ad,
        };
        debug_assert!(total.validate().is_empty());
        let s_semisimple = s.is_semisimple();
        let radical_solvable = r.is_solvable();
        Ok(SplitAlgebra { s, r, phi, total, s_semisimple, radical_solvable })
    }

    /// Reads a splitting off an assembled algebra: the first `s_dim` basis
    /// vectors must span a subalgebra and the rest an ideal.
    pub fn from_total(total: LieAlgebra, s_dim: usize) -> Result<Self> {
        let n = total.dim();
        if s_dim > n {
            return Err(CoreError::ShapeMismatch(format!(
                "leading block size {s_dim} exceeds dimension {n}"
            )));
        }
        for i in 0..s_dim {
            for j in i + 1..s_dim {
                if total.bracket_basis(i, j)[s_dim..].iter().any(|v| !v.is_zero()) {
                    return Err(CoreError::InvalidSplit(format!(
                        "bracket of leading basis pair ({i}, {j}) leaves the leading block"
                    )));
                }
            }
        }
        for i in 0..n {
            for j in s_dim.max(i + 1)..n {
                if total.bracket_basis(i, j)[..s_dim].iter().any(|v| !v.is_zero()) {
                    return Err(CoreError::InvalidSplit(format!(
                        "bracket of basis pair ({i}, {j}) leaves the trailing ideal"
                    )));
                }
            }
        }
        let m = n - s_dim;
        let s = LieAlgebra {
            name: format!("{}::s", total.name),
            basis: total.basis[..s_dim].to_vec(),
            ad: (0..s_dim)
                .map(|i| Matrix::from_fn(s_dim, s_dim, |k, j| total.structure_constant(i, j, k).clone()))
                .collect(),
        };
        let r = LieAlgebra {
            name: format!("{}::r", total.name),
            basis: total.basis[s_dim..].to_vec(),
            ad: (0..m)
                .map(|i| {
                    Matrix::from_fn(m, m, |k, j| {
                        total.structure_constant(s_dim + i, s_dim + j, s_dim + k).clone()
                    })
                })
                .collect(),
        };
        let phi = Representation {
            module_dim: m,
            action: (0..s_dim)
                .map(|i| {
                    Matrix::from_fn(m, m, |k, j| {
                        total.structure_constant(i, s_dim + j, s_dim + k).clone()
                    })
                })
                .collect(),
        };
        let s_semisimple = s.is_semisimple();
        let radical_solvable = r.is_solvable();
        Ok(SplitAlgebra { s, r, phi, total, s_semisimple, radical_solvable })
    }

    pub fn total(&self) -> &LieAlgebra {
        &self.total
    }

    pub fn semisimple_part(&self) -> &LieAlgebra {
        &self.s
    }

    pub fn radical_part(&self) -> &LieAlgebra {
        &self.r
    }

    /// Action of the leading block on the ideal, in ideal coordinates.
    pub fn phi(&self) -> &Representation {
        &self.phi
    }

    pub fn s_dim(&self) -> usize {
        self.s.dim()
    }

    pub fn r_dim(&self) -> usize {
        self.r.dim()
    }

    pub fn is_semisimple_part_semisimple(&self) -> bool {
        self.s_semisimple
    }

    pub fn is_radical_solvable(&self) -> bool {
        self.radical_solvable
    }

    /// True when the splitting has the shape the theory expects: semisimple
    /// leading block over a solvable ideal.
    pub fn is_levi_shaped(&self) -> bool {
        self.s_semisimple && self.radical_solvable
    }

    pub fn radical_span(&self) -> Subspace {
        let n = self.total.dim();
        Subspace::span(n, (self.s_dim()..n).map(|i| unit(n, i)))
    }

    /// Action of the whole algebra on the ideal block by the adjoint bracket,
    /// in ideal coordinates. Well-defined because the block is an ideal.
    pub fn radical_action(&self) -> Representation {
        let n = self.total.dim();
        let s = self.s_dim();
        let m = self.r_dim();
        let action = (0..n)
            .map(|i| {
                Matrix::from_fn(m, m, |k, j| {
                    self.total.structure_constant(i, s + j, s + k).clone()
                })
            })
            .collect();
        Representation { module_dim: m, action }
    }

    /// Splits a coordinate vector into its (leading, ideal) parts.
    pub fn split_vector<'a>(&self, v: &'a [Rational]) -> (&'a [Rational], &'a [Rational]) {
        v.split_at(self.s_dim())
    }

    /// Embeds ideal-block coordinates into the full algebra.
    pub fn embed_radical(&self, r: &[Rational]) -> Vec<Rational> {
        assert_eq!(r.len(), self.r_dim());
        let mut v = vec![Rational::zero(); self.s_dim()];
        v.extend_from_slice(r);
        v
    }

    /// Embeds leading-block coordinates into the full algebra.
    pub fn embed_semisimple(&self, s: &[Rational]) -> Vec<Rational> {
        assert_eq!(s.len(), self.s_dim());
        let mut v = s.to_vec();
        v.extend(std::iter::repeat_n(Rational::zero(), self.r_dim()));
        v
    }
}

impl std::fmt::Debug for SplitAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SplitAlgebra({:?}, s_dim {}, r_dim {})",
            self.total.name,
            self.s_dim(),
            self.r_dim()
        )
    }
}
