//! Bar construction of a twisted monoid, with the tuple-reversing involution.

use crate::error::Error;
use crate::monoid::{element_tuples, TwistedMonoid};
use crate::simplicial::{InvolutiveSimplicialSet, Simplex, SimplicialSet};

/// Level `n` is the set of `n`-tuples over the monoid. Inner faces multiply
/// adjacent entries, the outer faces drop an end, degeneracies insert the
/// unit, and the involution reverses the tuple while applying `tau` slotwise.
#[derive(Clone)]
pub struct BarSigma {
    monoid: TwistedMonoid,
    truncation: usize,
}

impl BarSigma {
    pub fn new(monoid: TwistedMonoid, truncation: usize) -> Self {
        BarSigma { monoid, truncation }
    }

    pub fn monoid(&self) -> &TwistedMonoid {
        &self.monoid
    }

    fn check_level(&self, n: usize) -> Result<(), Error> {
        if n > self.truncation {
            return Err(Error::Truncation { needed: n, available: self.truncation });
        }
        Ok(())
    }
}

impl SimplicialSet for BarSigma {
    fn truncation(&self) -> usize {
        self.truncation
    }

    fn label(&self) -> String {
        format!("bar_sigma({})", self.monoid.label())
    }

    fn payload_len(&self, n: usize) -> usize {
        n
    }

    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        self.check_level(n)?;
        Ok(element_tuples(self.monoid.size(), n)
            .into_iter()
            .map(|t| Simplex::new(n, t))
            .collect())
    }

    fn level_size(&self, n: usize) -> Option<u64> {
        (self.monoid.size() as u64).checked_pow(n as u32)
    }

    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if n == 0 || i > n {
            return Err(Error::domain(format!("face {i} undefined at level {n}")));
        }
        let a = x.data();
        let mut out = Vec::with_capacity(n - 1);
        if i == 0 {
            out.extend_from_slice(&a[1..]);
        } else if i == n {
            out.extend_from_slice(&a[..n - 1]);
        } else {
            out.extend_from_slice(&a[..i - 1]);
            out.push(self.monoid.mul(a[i - 1], a[i]));
            out.extend_from_slice(&a[i + 1..]);
        }
        Ok(Simplex::new(n - 1, out))
    }

    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if j > n {
            return Err(Error::domain(format!("degeneracy {j} undefined at level {n}")));
        }
        if n + 1 > self.truncation {
            return Err(Error::Truncation { needed: n + 1, available: self.truncation });
        }
        let mut out = x.data().to_vec();
        out.insert(j, self.monoid.unit());
        Ok(Simplex::new(n + 1, out))
    }
}

impl InvolutiveSimplicialSet for BarSigma {
    fn involution(&self, x: &Simplex) -> Result<Simplex, Error> {
        let out = x.data().iter().rev().map(|&a| self.monoid.tau(a)).collect();
        Ok(Simplex::new(x.level(), out))
    }
}
