//! Buchberger's algorithm for submodules of free modules over ℚ[x, y].
//!
//! Module terms are `x^a y^b e_pos`, ordered position-over-term with e_0 the most
//! significant position, then by total degree, then by the power of x (graded reverse
//! lex and graded lex coincide in two variables). Pairs are pruned with the
//! Gebauer–Möller update; the product criterion is only used in rank 1.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::GroebnerError;
use crate::laurent::Coeff;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Sig {
    pub pos: u32,
    pub a: u32,
    pub b: u32,
}

impl Sig {
    pub fn degree(self) -> u32 {
        self.a + self.b
    }

    /// Same position and componentwise ≤.
    pub fn divides(self, other: Sig) -> bool {
        self.pos == other.pos && self.a <= other.a && self.b <= other.b
    }

    pub fn lcm(self, other: Sig) -> Sig {
        debug_assert_eq!(self.pos, other.pos);
        Sig {
            pos: self.pos,
            a: self.a.max(other.a),
            b: self.b.max(other.b),
        }
    }

    fn coprime(self, other: Sig) -> bool {
        (self.a == 0 || other.a == 0) && (self.b == 0 || other.b == 0)
    }
}

impl Ord for Sig {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .pos
            .cmp(&self.pos)
            .then(self.degree().cmp(&other.degree()))
            .then(self.a.cmp(&other.a))
    }
}

impl PartialOrd for Sig {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms sorted ascending; the leading term is last.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct Vector {
    pub terms: Vec<(Sig, Coeff)>,
}

impl Vector {
    pub fn from_terms(mut terms: Vec<(Sig, Coeff)>) -> Vector {
        terms.sort_by_key(|x| x.0);
        let mut out: Vec<(Sig, Coeff)> = Vec::with_capacity(terms.len());
        for (s, c) in terms {
            match out.last_mut() {
                Some((ls, lc)) if *ls == s => *lc += c,
                _ => out.push((s, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Sig, Coeff)> {
        self.terms.last()
    }

    pub fn lead_sig(&self) -> Sig {
        self.terms.last().expect("nonzero vector").0
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self − c · x^da y^db · other`.
    pub fn sub_mul(&self, c: &Coeff, da: u32, db: u32, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| -> Sig {
            let s = other.terms[k].0;
            Sig {
                pos: s.pos,
                a: s.a + da,
                b: s.b + db,
            }
        };
        while i < self.terms.len() || j < other.terms.len() {
            let ord = if i == self.terms.len() {
                Ordering::Greater
            } else if j == other.terms.len() {
                Ordering::Less
            } else {
                self.terms[i].0.cmp(&shifted(j))
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((shifted(j), -(c * &other.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &self.terms[i].1 - c * &other.terms[j].1;
                    if !v.is_zero() {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    pub fn shift(&self, da: u32, db: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| {
                    (
                        Sig {
                            pos: s.pos,
                            a: s.a + da,
                            b: s.b + db,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }
}

/// Fully reduces `v` modulo `basis` (all terms, not only the leading one). Basis
/// elements are assumed monic.
pub(crate) fn reduce(v: Vector, basis: &[&Vector]) -> Vector {
    let mut rem = v;
    let mut done: Vec<(Sig, Coeff)> = Vec::new();
    while let Some((s, c)) = rem.terms.last().cloned() {
        let divisor = basis.iter().find(|g| g.lead_sig().divides(s));
        match divisor {
            Some(g) => {
                let gs = g.lead_sig();
                rem = rem.sub_mul(&c, s.a - gs.a, s.b - gs.b, g);
            }
            None => {
                rem.terms.pop();
                done.push((s, c));
            }
        }
    }
    done.reverse();
    Vector { terms: done }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Sig,
}

struct Builder {
    elems: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    rank_one: bool,
}

impl Builder {
    fn active_refs(&self) -> Vec<&Vector> {
        self.elems
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(v, _)| v)
            .collect()
    }

    fn add(&mut self, h: Vector) {
        let hs = h.lead_sig();
        let h_idx = self.elems.len();
        // Gebauer–Möller update
        let c: Vec<(usize, Sig, bool)> = (0..self.elems.len())
            .filter(|&g| self.active[g] && self.elems[g].lead_sig().pos == hs.pos)
            .map(|g| {
                let gs = self.elems[g].lead_sig();
                (g, hs.lcm(gs), self.rank_one && hs.coprime(gs))
            })
            .collect();
        let mut d: Vec<(usize, Sig, bool)> = Vec::new();
        for (k, &(g, l, cop)) in c.iter().enumerate() {
            let dominated = c[k + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || d.iter().any(|(_, l2, _)| l2.divides(l));
            if cop || !dominated {
                d.push((g, l, cop));
            }
        }
        let elems = &self.elems;
        self.pairs.retain(|p| {
            let gi = elems[p.i].lead_sig();
            let gj = elems[p.j].lead_sig();
            !(hs.divides(p.lcm) && hs.pos == gi.pos && gi.lcm(hs) != p.lcm && gj.lcm(hs) != p.lcm)
        });
        for (g, l, cop) in d {
            if !cop {
                self.pairs.push(Pair {
                    i: g,
                    j: h_idx,
                    lcm: l,
                });
            }
        }
        for g in 0..self.elems.len() {
            if self.active[g] && hs.divides(self.elems[g].lead_sig()) {
                self.active[g] = false;
            }
        }
        self.elems.push(h);
        self.active.push(true);
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let f = &self.elems[p.i];
        let g = &self.elems[p.j];
        let fs = f.lead_sig();
        let gs = g.lead_sig();
        let left = f.shift(p.lcm.a - fs.a, p.lcm.b - fs.b);
        left.sub_mul(&Coeff::one(), p.lcm.a - gs.a, p.lcm.b - gs.b, g)
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by leading term
/// (most significant first). `limit` bounds the number of S-pair reductions.
pub(crate) fn groebner(
    gens: Vec<Vector>,
    rank: usize,
    limit: u64,
) -> Result<Vec<Vector>, GroebnerError> {
    let mut b = Builder {
        elems: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        rank_one: rank == 1,
    };
    let mut gens: Vec<Vector> = gens.into_iter().filter(|v| !v.is_zero()).collect();
    gens.sort_by_key(|x| x.lead_sig());
    for g in gens {
        let mut h = reduce(g, &b.active_refs());
        if !h.is_zero() {
            h.make_monic();
            b.add(h);
        }
    }
    let mut steps: u64 = 0;
    while !b.pairs.is_empty() {
        let k = (0..b.pairs.len())
            .min_by(|&x, &y| {
                let (lx, ly) = (b.pairs[x].lcm, b.pairs[y].lcm);
                lx.degree().cmp(&ly.degree()).then(lx.cmp(&ly))
            })
            .unwrap();
        let p = b.pairs.swap_remove(k);
        steps += 1;
        if steps > limit {
            return Err(GroebnerError::StepLimit { limit });
        }
        let s = b.spoly(&p);
        let mut h = reduce(s, &b.active_refs());
        if !h.is_zero() {
            h.make_monic();
            b.add(h);
        }
    }
    // interreduce the minimal basis
    let minimal: Vec<Vector> = b
        .elems
        .into_iter()
        .zip(b.active)
        .filter(|(_, a)| *a)
        .map(|(v, _)| v)
        .collect();
    let mut out: Vec<Vector> = Vec::with_capacity(minimal.len());
    for (k, v) in minimal.iter().enumerate() {
        let others: Vec<&Vector> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, w)| w)
            .collect();
        let lead = v.lead().unwrap().clone();
        let mut tail = v.clone();
        tail.terms.pop();
        let mut r = reduce(tail, &others);
        r.terms.push(lead);
        out.push(r);
    }
    out.sort_by_key(|v| std::cmp::Reverse(v.lead_sig()));
    Ok(out)
}
