use std::fmt;

use crate::error::RingError;

use super::{restrict, Restriction, RingElem};

/// `numerator / den^k` where `den` is the image of F(ρ) in the numerator's ring.
///
/// The denominator itself is not stored; every operation that needs it takes it as an
/// argument, so one value can be reinterpreted against any functor. Values built through
/// [`Localized::new`] have minimal `k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Localized {
    num: RingElem,
    k: u32,
}

impl Localized {
    /// Normalised `num / den^k`.
    pub fn new(num: RingElem, k: u32, den: &RingElem) -> Result<Self, RingError> {
        check_ring(&num, den)?;
        if den.is_zero() {
            return Err(RingError::Laurent(
                crate::error::LaurentError::DivisionByZero,
            ));
        }
        let mut x = Localized { num, k };
        x.normalize(den)?;
        Ok(x)
    }

    /// An element of the unlocalised ring.
    pub fn from_elem(num: RingElem) -> Self {
        Localized { num, k: 0 }
    }

    /// `den^{-k}`.
    pub fn den_power_inverse(den: &RingElem, k: u32) -> Result<Self, RingError> {
        Localized::new(RingElem::one(den.ring()), k, den)
    }

    pub fn numerator(&self) -> &RingElem {
        &self.num
    }

    pub fn denom_exp(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self, den: &RingElem) -> Result<(), RingError> {
        if self.num.is_zero() {
            self.k = 0;
            return Ok(());
        }
        while self.k > 0 {
            match self.num.exact_div(den)? {
                Some(q) => {
                    self.num = q;
                    self.k -= 1;
                }
                None => break,
            }
        }
        Ok(())
    }

    /// Cross-multiplication test a·den^k = b·den^j.
    pub fn equals(&self, other: &Localized, den: &RingElem) -> Result<bool, RingError> {
        check_ring(&self.num, den)?;
        check_ring(&other.num, den)?;
        let a = &self.num * &den.pow(other.k);
        let b = &other.num * &den.pow(self.k);
        Ok(a == b)
    }

    pub fn add(&self, other: &Localized, den: &RingElem) -> Result<Localized, RingError> {
        check_ring(&self.num, den)?;
        check_ring(&other.num, den)?;
        let k = self.k.max(other.k);
        let a = &self.num * &den.pow(k - self.k);
        let b = &other.num * &den.pow(k - other.k);
        Localized::new(&a + &b, k, den)
    }

    pub fn neg(&self) -> Localized {
        Localized {
            num: -&self.num,
            k: self.k,
        }
    }

    pub fn sub(&self, other: &Localized, den: &RingElem) -> Result<Localized, RingError> {
        self.add(&other.neg(), den)
    }

    pub fn mul(&self, other: &Localized, den: &RingElem) -> Result<Localized, RingError> {
        check_ring(&self.num, den)?;
        let num = self.num.checked_mul(&other.num)?;
        Localized::new(num, self.k + other.k, den)
    }

    /// `self · den^k`, which must lie in the unlocalised ring.
    pub fn clear(&self, k: u32, den: &RingElem) -> Result<RingElem, RingError> {
        if k < self.k {
            return Err(RingError::Internal(format!(
                "denominator exponent {} exceeds {k}",
                self.k
            )));
        }
        Ok(&self.num * &den.pow(k - self.k))
    }

    /// Applies a restriction map to the numerator; the denominator exponent is carried
    /// along and re-normalised against `target_den`, the image of the denominator.
    pub fn restrict(
        &self,
        map: Restriction,
        target_den: &RingElem,
    ) -> Result<Localized, RingError> {
        let num = restrict(&self.num, map)?;
        Localized::new(num, self.k, target_den)
    }
}

fn check_ring(x: &RingElem, den: &RingElem) -> Result<(), RingError> {
    if x.ring() != den.ring() {
        return Err(RingError::Mismatch {
            expected: den.ring(),
            found: x.ring(),
        });
    }
    Ok(())
}

impl fmt::Debug for Localized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / F^{}", self.num, self.k)
    }
}
