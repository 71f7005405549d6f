use std::fmt;

use crate::error::RingError;
use crate::laurent::{ratio, LaurentPoly};

use super::{torus3_var, RingElem, RingTag};

/// A permutation of {1,…,n}, n ∈ {2, 3}; `w·t_i = t_{w(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    images: Vec<usize>,
}

impl WeylElement {
    /// From 0-based images; panics unless `images` is a permutation.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                i < images.len() && !seen[i],
                "not a permutation: {images:?}"
            );
            seen[i] = true;
        }
        WeylElement { images }
    }

    pub fn identity(n: usize) -> Self {
        WeylElement {
            images: (0..n).collect(),
        }
    }

    /// Transposition of the 0-based indices `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        WeylElement { images }
    }

    /// All n! elements, identity first.
    pub fn all(n: usize) -> Vec<WeylElement> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<WeylElement>) {
            let n = used.len();
            if cur.len() == n {
                out.push(WeylElement {
                    images: cur.clone(),
                });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`, so that `(self·other)·x = self·(other·x)`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.len(), other.len());
        WeylElement {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        WeylElement { images: inv }
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        let n = self.len();
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                write!(f, "{}", i + 1)?;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "e")?;
        }
        Ok(())
    }
}

fn act_torus3(w: &WeylElement, p: &LaurentPoly) -> LaurentPoly {
    let images = [torus3_var(w.image(0) + 1), torus3_var(w.image(1) + 1)];
    p.substitute(&images).expect("torus characters are units")
}

/// Weyl group action. SU(2)/SU(3) rings carry the trivial action; U(2) is fixed by
/// the transposition of its two eigenlines.
pub fn weyl_act(w: &WeylElement, x: &RingElem) -> Result<RingElem, RingError> {
    let ring = x.ring();
    let expected = match ring {
        RingTag::TorusSU2 | RingTag::U2 | RingTag::SU2 => 2,
        RingTag::TorusSU3 | RingTag::SU3 => 3,
    };
    if w.len() != expected {
        return Err(RingError::WeylMismatch {
            size: w.len(),
            ring,
        });
    }
    Ok(match ring {
        RingTag::TorusSU2 => {
            if w.is_identity() {
                x.clone()
            } else {
                let inv = x.poly().substitute(&[LaurentPoly::var(1, 0, -1)])?;
                RingElem::new_unchecked(ring, inv)
            }
        }
        RingTag::TorusSU3 => RingElem::new_unchecked(ring, act_torus3(w, x.poly())),
        RingTag::U2 | RingTag::SU2 | RingTag::SU3 => x.clone(),
    })
}

/// Invariance under the full Weyl group (checked on generators).
pub fn is_weyl_invariant(x: &RingElem) -> Result<bool, RingError> {
    let gens: Vec<WeylElement> = match x.ring() {
        RingTag::TorusSU2 => vec![WeylElement::transposition(2, 0, 1)],
        RingTag::TorusSU3 => vec![
            WeylElement::transposition(3, 0, 1),
            WeylElement::transposition(3, 1, 2),
        ],
        _ => return Ok(true),
    };
    for g in &gens {
        if &weyl_act(g, x)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Averaging map (1/|W|) Σ_w w·x on the SU(3) torus ring.
pub fn symmetrize(x: &RingElem) -> Result<RingElem, RingError> {
    if x.ring() != RingTag::TorusSU3 {
        return Err(RingError::Mismatch {
            expected: RingTag::TorusSU3,
            found: x.ring(),
        });
    }
    let mut acc = LaurentPoly::zero(2);
    for w in WeylElement::all(3) {
        acc += &act_torus3(&w, x.poly());
    }
    Ok(RingElem::new_unchecked(
        RingTag::TorusSU3,
        acc.scale(&ratio(1, 6)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(text: &str) -> RingElem {
        RingElem::parse(RingTag::TorusSU3, text).unwrap()
    }

    #[test]
    fn action_examples() {
        let w12 = WeylElement::transposition(3, 0, 1);
        let w23 = WeylElement::transposition(3, 1, 2);
        let w13 = WeylElement::transposition(3, 0, 2);
        assert_eq!(weyl_act(&w12, &torus("t1")).unwrap(), torus("t2"));
        assert_eq!(weyl_act(&w23, &torus("t2")).unwrap(), torus("t1^-1*t2^-1"));
        let x = torus("t1 + t3");
        assert_eq!(weyl_act(&w13, &x).unwrap(), x);
        let su3 = RingElem::gen(RingTag::SU3, 0);
        assert_eq!(weyl_act(&w12, &su3).unwrap(), su3);
        let t = RingElem::parse(RingTag::TorusSU2, "t^2 + 3*t").unwrap();
        let w = WeylElement::transposition(2, 0, 1);
        assert_eq!(
            weyl_act(&w, &t).unwrap(),
            RingElem::parse(RingTag::TorusSU2, "t^-2 + 3*t^-1").unwrap()
        );
        assert!(weyl_act(&w, &torus("t1")).is_err());
    }

    #[test]
    fn group_structure() {
        let all = WeylElement::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().filter(|w| w.sign() == -1).count(), 3);
        let x = torus("t1^2*t2^-1 + 5*t3 - 2");
        for a in &all {
            assert_eq!(a.compose(&a.inverse()), WeylElement::identity(3));
            for b in &all {
                let lhs = weyl_act(&a.compose(b), &x).unwrap();
                let rhs = weyl_act(a, &weyl_act(b, &x).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a} {b}");
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
        assert_eq!(WeylElement::transposition(3, 1, 2).to_string(), "(23)");
        assert_eq!(WeylElement::identity(3).to_string(), "e");
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(symmetrize(&torus("1")).unwrap(), torus("1"));
        assert_eq!(
            symmetrize(&torus("t1")).unwrap(),
            torus("1/3*t1 + 1/3*t2 + 1/3*t3")
        );
        let s = symmetrize(&torus("t1^3*t2 - 7*t2^-2")).unwrap();
        assert!(is_weyl_invariant(&s).unwrap());
    }
}
