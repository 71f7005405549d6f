//! Ideals and submodules of free modules over ℚ[x, y], where (x, y) is (s₁, s₂) for
//! R(SU(3)) ⊗ ℚ or (t₁, t₂) for the torus computations.
//!
//! Elements are [`LaurentPoly`] values in two variables with nonnegative exponents.
//! Every [`Submodule`] carries its reduced Gröbner basis, so equality of submodules is
//! equality of bases.

mod engine;

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use serde::{Deserialize, Serialize};

use crate::error::GroebnerError;
use crate::laurent::{Coeff, LaurentPoly, Monomial};

use engine::{groebner, reduce, Sig, Vector};

/// Default bound on S-pair reductions per basis computation.
pub const DEFAULT_STEP_LIMIT: u64 = 1_000_000;

/// Largest quotient dimension for which colon ideals are computed by linear algebra.
const LINEAR_COLON_LIMIT: usize = 4000;

/// The step limit, overridable through `TWK_STEP_LIMIT`.
pub fn step_limit() -> u64 {
    std::env::var("TWK_STEP_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_STEP_LIMIT)
}

/// ℚ-dimension of a quotient.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

fn to_vector(v: &[LaurentPoly], offset: u32) -> Result<Vector, GroebnerError> {
    let mut terms = Vec::new();
    for (p, poly) in v.iter().enumerate() {
        if poly.nvars() != 2 || !poly.is_polynomial() {
            return Err(GroebnerError::NotPolynomial);
        }
        for (m, c) in poly.terms() {
            let e = m.exponents();
            terms.push((
                Sig {
                    pos: p as u32 + offset,
                    a: e[0] as u32,
                    b: e[1] as u32,
                },
                c.clone(),
            ));
        }
    }
    Ok(Vector::from_terms(terms))
}

fn from_vector(v: &Vector, rank: usize, offset: u32) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(2); rank];
    for (s, c) in &v.terms {
        let p = (s.pos - offset) as usize;
        out[p].add_term(Monomial::new(vec![s.a as i32, s.b as i32]), c.clone());
    }
    out
}

/// A submodule of ℚ[x,y]^rank with its reduced Gröbner basis (position over term).
#[derive(Clone)]
pub struct Submodule {
    rank: usize,
    basis: Vec<Vector>,
    limit: u64,
}

impl Submodule {
    /// The submodule generated by `gens`, each of length `rank`.
    pub fn new(rank: usize, gens: &[Vec<LaurentPoly>]) -> Result<Self, GroebnerError> {
        Submodule::with_limit(rank, gens, step_limit())
    }

    pub fn with_limit(
        rank: usize,
        gens: &[Vec<LaurentPoly>],
        limit: u64,
    ) -> Result<Self, GroebnerError> {
        let vecs = gens
            .iter()
            .map(|g| {
                if g.len() != rank {
                    return Err(GroebnerError::RankMismatch {
                        left: rank,
                        right: g.len(),
                    });
                }
                to_vector(g, 0)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Submodule {
            rank,
            basis: groebner(vecs, rank, limit)?,
            limit,
        })
    }

    pub fn zero(rank: usize) -> Self {
        Submodule {
            rank,
            basis: Vec::new(),
            limit: step_limit(),
        }
    }

    /// The whole free module.
    pub fn full(rank: usize) -> Self {
        let gens: Vec<Vec<LaurentPoly>> = (0..rank).map(|i| unit_vector(rank, i)).collect();
        Submodule::new(rank, &gens).expect("unit vectors form a basis")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn step_limit(&self) -> u64 {
        self.limit
    }

    /// The reduced Gröbner basis, most significant leading term first.
    pub fn basis(&self) -> Vec<Vec<LaurentPoly>> {
        self.basis
            .iter()
            .map(|v| from_vector(v, self.rank, 0))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        (0..self.rank).all(|p| {
            self.basis.iter().any(|g| {
                let s = g.lead_sig();
                s.pos == p as u32 && s.a == 0 && s.b == 0
            })
        })
    }

    fn refs(&self) -> Vec<&Vector> {
        self.basis.iter().collect()
    }

    pub fn normal_form(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, GroebnerError> {
        self.check_rank(v.len())?;
        let r = reduce(to_vector(v, 0)?, &self.refs());
        Ok(from_vector(&r, self.rank, 0))
    }

    pub fn contains_vector(&self, v: &[LaurentPoly]) -> Result<bool, GroebnerError> {
        self.check_rank(v.len())?;
        Ok(reduce(to_vector(v, 0)?, &self.refs()).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Submodule) -> Result<bool, GroebnerError> {
        self.check_rank(other.rank)?;
        Ok(other
            .basis
            .iter()
            .all(|g| reduce(g.clone(), &self.refs()).is_zero()))
    }

    fn check_rank(&self, r: usize) -> Result<(), GroebnerError> {
        if r != self.rank {
            return Err(GroebnerError::RankMismatch {
                left: self.rank,
                right: r,
            });
        }
        Ok(())
    }

    /// `self : f = {v : f·v ∈ self}`. With finite colength this is the kernel of
    /// multiplication by f on the quotient; otherwise elimination on (f·e_i | e_i) and
    /// (g | 0).
    pub fn colon(&self, f: &LaurentPoly) -> Result<Submodule, GroebnerError> {
        let r = self.rank as u32;
        let fv = to_vector(std::slice::from_ref(f), 0)?;
        if let Some(stairs) = self.staircase() {
            return self.colon_finite(&fv, &stairs);
        }
        let mut gens: Vec<Vector> = Vec::new();
        for i in 0..r {
            let mut terms: Vec<(Sig, _)> = fv
                .terms
                .iter()
                .map(|(s, c)| (Sig { pos: i, ..*s }, c.clone()))
                .collect();
            terms.push((
                Sig {
                    pos: r + i,
                    a: 0,
                    b: 0,
                },
                num_traits::One::one(),
            ));
            gens.push(Vector::from_terms(terms));
        }
        gens.extend(self.basis.iter().cloned());
        let gb = groebner(gens, 2 * self.rank, self.limit)?;
        let basis = project_tail(&gb, r);
        Ok(Submodule {
            rank: self.rank,
            basis: groebner(basis, self.rank, self.limit)?,
            limit: self.limit,
        })
    }

    /// Standard monomials, when there are at most [`LINEAR_COLON_LIMIT`] of them.
    fn staircase(&self) -> Option<Vec<Sig>> {
        let Dimension::Finite(n) = self.quotient_dimension() else {
            return None;
        };
        if n as usize > LINEAR_COLON_LIMIT {
            return None;
        }
        let mut out = Vec::with_capacity(n as usize);
        for pos in 0..self.rank as u32 {
            let leads: Vec<Sig> = self
                .basis
                .iter()
                .map(Vector::lead_sig)
                .filter(|s| s.pos == pos)
                .collect();
            for a in 0.. {
                let height = leads
                    .iter()
                    .filter(|s| s.a <= a)
                    .map(|s| s.b)
                    .min()
                    .unwrap();
                if height == 0 {
                    break;
                }
                out.extend((0..height).map(|b| Sig { pos, a, b }));
            }
        }
        Some(out)
    }

    fn colon_finite(&self, fv: &Vector, stairs: &[Sig]) -> Result<Submodule, GroebnerError> {
        let index: HashMap<Sig, usize> = stairs.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let refs = self.refs();
        let n = stairs.len();
        let mut m = vec![vec![Coeff::zero(); n]; n];
        for (j, s) in stairs.iter().enumerate() {
            let shifted = Vector {
                terms: fv
                    .terms
                    .iter()
                    .map(|(t, c)| {
                        (
                            Sig {
                                pos: s.pos,
                                a: t.a + s.a,
                                b: t.b + s.b,
                            },
                            c.clone(),
                        )
                    })
                    .collect(),
            };
            for (t, c) in reduce(shifted, &refs).terms {
                m[index[&t]][j] = c;
            }
        }
        let mut gens = self.basis.clone();
        for v in nullspace(m) {
            gens.push(Vector::from_terms(
                stairs
                    .iter()
                    .copied()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            ));
        }
        Ok(Submodule {
            rank: self.rank,
            basis: groebner(gens, self.rank, self.limit)?,
            limit: self.limit,
        })
    }

    /// `self : f^∞`, iterating the colon until the basis stabilises.
    pub fn saturate(&self, f: &LaurentPoly) -> Result<Submodule, GroebnerError> {
        if f.is_zero() {
            return Ok(Submodule::full(self.rank));
        }
        let mut cur = self.clone();
        loop {
            let next = cur.colon(f)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// ℚ-dimension of ℚ[x,y]^rank / self, counted from the staircase.
    pub fn quotient_dimension(&self) -> Dimension {
        let mut total: u64 = 0;
        for p in 0..self.rank as u32 {
            let leads: Vec<Sig> = self
                .basis
                .iter()
                .map(Vector::lead_sig)
                .filter(|s| s.pos == p)
                .collect();
            let xa = leads.iter().filter(|s| s.b == 0).map(|s| s.a).min();
            let yb = leads.iter().filter(|s| s.a == 0).map(|s| s.b).min();
            let (Some(xa), Some(_)) = (xa, yb) else {
                return Dimension::Infinite;
            };
            for a in 0..xa {
                let height = leads
                    .iter()
                    .filter(|s| s.a <= a)
                    .map(|s| s.b)
                    .min()
                    .expect("a pure y-power bounds every column");
                total += height as u64;
            }
        }
        Dimension::Finite(total)
    }

    /// Leading monomials (position, x-exponent, y-exponent) of the basis.
    pub fn leading_terms(&self) -> Vec<(usize, u32, u32)> {
        self.basis
            .iter()
            .map(|v| {
                let s = v.lead_sig();
                (s.pos as usize, s.a, s.b)
            })
            .collect()
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.basis == other.basis
    }
}

impl Eq for Submodule {}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y"];
        write!(f, "Submodule(rank {}; ", self.rank)?;
        let rows: Vec<String> = self
            .basis()
            .iter()
            .map(|v| {
                let parts: Vec<String> = v.iter().map(|p| p.to_text(&names)).collect();
                format!("({})", parts.join(", "))
            })
            .collect();
        write!(f, "{})", rows.join(", "))
    }
}

fn project_tail(gb: &[Vector], offset: u32) -> Vec<Vector> {
    gb.iter()
        .filter(|v| v.lead_sig().pos >= offset)
        .map(|v| {
            Vector::from_terms(
                v.terms
                    .iter()
                    .map(|(s, c)| {
                        (
                            Sig {
                                pos: s.pos - offset,
                                ..*s
                            },
                            c.clone(),
                        )
                    })
                    .collect(),
            )
        })
        .collect()
}

fn unit_vector(rank: usize, i: usize) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(2); rank];
    v[i] = LaurentPoly::one(2);
    v
}

/// An ideal of ℚ[x, y]: a rank-one [`Submodule`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal(Submodule);

impl Ideal {
    pub fn new(gens: &[LaurentPoly]) -> Result<Self, GroebnerError> {
        let gens: Vec<Vec<LaurentPoly>> = gens.iter().map(|g| vec![g.clone()]).collect();
        Ok(Ideal(Submodule::new(1, &gens)?))
    }

    pub fn with_limit(gens: &[LaurentPoly], limit: u64) -> Result<Self, GroebnerError> {
        let gens: Vec<Vec<LaurentPoly>> = gens.iter().map(|g| vec![g.clone()]).collect();
        Ok(Ideal(Submodule::with_limit(1, &gens, limit)?))
    }

    pub fn unit() -> Self {
        Ideal(Submodule::full(1))
    }

    pub fn as_submodule(&self) -> &Submodule {
        &self.0
    }

    /// Reduced Gröbner basis, monic, most significant leading term first.
    pub fn basis(&self) -> Vec<LaurentPoly> {
        self.0
            .basis()
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_full()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn normal_form(&self, p: &LaurentPoly) -> Result<LaurentPoly, GroebnerError> {
        Ok(self.0.normal_form(std::slice::from_ref(p))?.remove(0))
    }

    pub fn contains(&self, p: &LaurentPoly) -> Result<bool, GroebnerError> {
        self.0.contains_vector(std::slice::from_ref(p))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        self.0.contains(&other.0)
    }

    pub fn colon(&self, f: &LaurentPoly) -> Result<Ideal, GroebnerError> {
        Ok(Ideal(self.0.colon(f)?))
    }

    pub fn saturate(&self, f: &LaurentPoly) -> Result<Ideal, GroebnerError> {
        Ok(Ideal(self.0.saturate(f)?))
    }

    pub fn quotient_dimension(&self) -> Dimension {
        self.0.quotient_dimension()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, GroebnerError> {
    Ok(Ideal::new(gens)?.basis())
}

/// A matrix over ℚ[x, y], acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<LaurentPoly>>) -> Result<Self, GroebnerError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        for r in &entries {
            if r.len() != cols {
                return Err(GroebnerError::RankMismatch {
                    left: cols,
                    right: r.len(),
                });
            }
            if r.iter().any(|p| p.nvars() != 2) {
                return Err(GroebnerError::NotPolynomial);
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<LaurentPoly>]) -> Result<Self, GroebnerError> {
        let mut entries = vec![Vec::with_capacity(columns.len()); rows];
        for c in columns {
            if c.len() != rows {
                return Err(GroebnerError::RankMismatch {
                    left: rows,
                    right: c.len(),
                });
            }
            for (r, p) in c.iter().enumerate() {
                entries[r].push(p.clone());
            }
        }
        PolyMatrix::new(entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<LaurentPoly> {
        self.entries.iter().map(|r| r[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, GroebnerError> {
        if self.cols != other.rows {
            return Err(GroebnerError::RankMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut entries = vec![vec![LaurentPoly::zero(2); other.cols]; self.rows];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                for k in 0..self.cols {
                    *e += &(&self.entries[r][k] * &other.entries[k][c]);
                }
            }
        }
        PolyMatrix::new(entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(LaurentPoly::is_zero)
    }

    /// Evaluates every entry at a rational point.
    pub fn eval(&self, point: &[crate::laurent::Coeff]) -> Vec<Vec<crate::laurent::Coeff>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.eval_rational(point).unwrap()).collect())
            .collect()
    }
}

/// The column span of `m`.
pub fn image(m: &PolyMatrix) -> Result<Submodule, GroebnerError> {
    Submodule::new(m.rows(), &m.columns())
}

/// Syzygies of the columns of `m`: the kernel of ℚ[x,y]^cols → ℚ[x,y]^rows.
pub fn kernel(m: &PolyMatrix) -> Result<Submodule, GroebnerError> {
    kernel_with_limit(m, step_limit())
}

pub fn kernel_with_limit(m: &PolyMatrix, limit: u64) -> Result<Submodule, GroebnerError> {
    let rows = m.rows() as u32;
    let mut gens = Vec::with_capacity(m.cols());
    for c in 0..m.cols() {
        let mut v = to_vector(&m.column(c), 0)?;
        v.terms.insert(
            0,
            (
                Sig {
                    pos: rows + c as u32,
                    a: 0,
                    b: 0,
                },
                num_traits::One::one(),
            ),
        );
        gens.push(Vector::from_terms(v.terms));
    }
    let gb = groebner(gens, m.rows() + m.cols(), limit)?;
    let tail = project_tail(&gb, rows);
    Ok(Submodule {
        rank: m.cols(),
        basis: groebner(tail, m.cols(), limit)?,
        limit,
    })
}

/// Basis of the right kernel of a rational matrix.
fn nullspace(mut m: Vec<Vec<Coeff>>) -> Vec<Vec<Coeff>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for k in c..cols {
            m[rank][k] *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..cols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Coeff::zero(); cols];
            v[free] = Coeff::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<crate::laurent::Coeff>>) -> usize {
    use num_traits::Zero;
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..cols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_poly, plain_bindings};

    fn p(text: &str) -> LaurentPoly {
        parse_poly(text, &plain_bindings(&["s1", "s2"]), 2).unwrap()
    }

    fn show(ps: &[LaurentPoly]) -> Vec<String> {
        ps.iter().map(|q| q.to_text(&["s1", "s2"])).collect()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            show(&groebner_basis(&[p("s1"), p("s2")]).unwrap()),
            ["s1", "s2"]
        );
        assert_eq!(
            show(&groebner_basis(&[p("s1^2 - s2"), p("s2")]).unwrap()),
            ["s1^2", "s2"]
        );
        assert_eq!(show(&groebner_basis(&[p("1"), p("s1")]).unwrap()), ["1"]);
        assert!(groebner_basis(&[p("0")]).unwrap().is_empty());
    }

    #[test]
    fn saturation_examples() {
        let f = p("2 + s1 + s2");
        let i = Ideal::new(&[&p("s1") * &f]).unwrap();
        assert_eq!(i.saturate(&f).unwrap(), Ideal::new(&[p("s1")]).unwrap());
        assert!(Ideal::unit().saturate(&f).unwrap().is_unit());
        let s = i.saturate(&f).unwrap();
        assert_eq!(s.saturate(&f).unwrap(), s);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(
            Ideal::new(&[p("s1"), p("s2")])
                .unwrap()
                .quotient_dimension(),
            Dimension::Finite(1)
        );
        assert_eq!(Ideal::unit().quotient_dimension(), Dimension::Finite(0));
        assert_eq!(
            Ideal::new(&[p("s1^2"), p("s2")])
                .unwrap()
                .quotient_dimension(),
            Dimension::Finite(2)
        );
        assert_eq!(
            Ideal::new(&[p("s1")]).unwrap().quotient_dimension(),
            Dimension::Infinite
        );
        assert_eq!(
            Ideal::new(&[p("s1^2 + s2^2 - 1"), p("s1*s2")])
                .unwrap()
                .quotient_dimension(),
            Dimension::Finite(4)
        );
    }

    #[test]
    fn kernel_examples() {
        let m = PolyMatrix::new(vec![vec![p("s1"), p("s1")]]).unwrap();
        let k = kernel(&m).unwrap();
        assert!(k.contains_vector(&[p("1"), p("-1")]).unwrap());
        assert_eq!(k, Submodule::new(2, &[vec![p("1"), p("-1")]]).unwrap());

        let id = PolyMatrix::new(vec![vec![p("1"), p("0")], vec![p("0"), p("1")]]).unwrap();
        assert!(kernel(&id).unwrap().is_zero());

        let m = PolyMatrix::new(vec![vec![p("s1"), p("s2")]]).unwrap();
        assert_eq!(
            kernel(&m).unwrap(),
            Submodule::new(2, &[vec![p("s2"), p("-s1")]]).unwrap()
        );
    }

    #[test]
    fn koszul_exactness() {
        // d1 = (s1 s2): R^2 → R, d0 = (s2, -s1)^T: R → R^2
        let d1 = PolyMatrix::new(vec![vec![p("s1"), p("s2")]]).unwrap();
        let d0 = PolyMatrix::new(vec![vec![p("s2")], vec![p("-s1")]]).unwrap();
        assert!(d1.mul(&d0).unwrap().is_zero());
        let img = image(&d0).unwrap();
        let ker = kernel(&d1).unwrap();
        assert!(img.contains(&ker).unwrap());
        assert!(ker.contains(&img).unwrap());
    }

    #[test]
    fn module_quotient_dimension() {
        let m = Submodule::new(
            2,
            &[
                vec![p("s1"), p("0")],
                vec![p("s2"), p("0")],
                vec![p("0"), p("s1^2")],
                vec![p("0"), p("s2")],
            ],
        )
        .unwrap();
        assert_eq!(m.quotient_dimension(), Dimension::Finite(3));
        assert!(Submodule::full(3).is_full());
        assert_eq!(
            Submodule::full(3).quotient_dimension(),
            Dimension::Finite(0)
        );
    }

    #[test]
    fn step_limit_is_enforced() {
        let gens = [
            p("s1^3 - s2^2 + 1"),
            p("s1*s2^2 - s1 + 3"),
            p("s1^2*s2 + s2^3"),
        ];
        assert_eq!(
            Ideal::with_limit(&gens, 1).unwrap_err(),
            GroebnerError::StepLimit { limit: 1 }
        );
        assert!(Ideal::with_limit(&gens, 10_000).is_ok());
    }

    #[test]
    fn colon_examples() {
        let i = Ideal::new(&[p("s1*s2"), p("s2^2")]).unwrap();
        assert_eq!(
            i.colon(&p("s2")).unwrap(),
            Ideal::new(&[p("s1"), p("s2")]).unwrap()
        );
        assert_eq!(i.saturate(&p("s2")).unwrap(), Ideal::unit());
        assert_eq!(
            i.saturate(&p("s1")).unwrap(),
            Ideal::new(&[p("s2")]).unwrap()
        );
    }
}
