//! Levelwise product of two complexes of equal truncation.

use crate::error::Error;
use crate::simplicial::{InvolutiveSimplicialSet, Simplex, SimplicialSet};

/// Level `n` is the cartesian product of the two level-`n` sets; operators
/// and the involution act on both halves at once. Payloads concatenate, with
/// the split position determined by the left factor's payload width.
pub struct Product<S, T> {
    left: S,
    right: T,
}

impl<S: SimplicialSet, T: SimplicialSet> Product<S, T> {
    pub fn new(left: S, right: T) -> Result<Self, Error> {
        if left.truncation() != right.truncation() {
            return Err(Error::dim(format!(
                "product factors carry truncations {} and {}",
                left.truncation(),
                right.truncation()
            )));
        }
        Ok(Product { left, right })
    }

    pub fn left(&self) -> &S {
        &self.left
    }

    pub fn right(&self) -> &T {
        &self.right
    }

    fn split(&self, x: &Simplex) -> (Simplex, Simplex) {
        let n = x.level();
        let k = self.left.payload_len(n);
        (
            Simplex::new(n, x.data()[..k].to_vec()),
            Simplex::new(n, x.data()[k..].to_vec()),
        )
    }

    fn join(a: Simplex, b: Simplex) -> Simplex {
        debug_assert_eq!(a.level(), b.level());
        let level = a.level();
        let mut data = a.into_data();
        data.extend(b.into_data());
        Simplex::new(level, data)
    }
}

impl<S: SimplicialSet, T: SimplicialSet> SimplicialSet for Product<S, T> {
    fn truncation(&self) -> usize {
        self.left.truncation()
    }

    fn label(&self) -> String {
        format!("product({}, {})", self.left.label(), self.right.label())
    }

    fn payload_len(&self, n: usize) -> usize {
        self.left.payload_len(n) + self.right.payload_len(n)
    }

    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        let ls = self.left.level(n)?;
        let rs = self.right.level(n)?;
        let mut out = Vec::with_capacity(ls.len() * rs.len());
        for l in &ls {
            for r in &rs {
                out.push(Self::join(l.clone(), r.clone()));
            }
        }
        Ok(out)
    }

    fn level_size(&self, n: usize) -> Option<u64> {
        self.left.level_size(n)?.checked_mul(self.right.level_size(n)?)
    }

    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
        let (l, r) = self.split(x);
        Ok(Self::join(self.left.face(i, &l)?, self.right.face(i, &r)?))
    }

    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
        let (l, r) = self.split(x);
        Ok(Self::join(
            self.left.degeneracy(j, &l)?,
            self.right.degeneracy(j, &r)?,
        ))
    }
}

impl<S: InvolutiveSimplicialSet, T: InvolutiveSimplicialSet> InvolutiveSimplicialSet
    for Product<S, T>
{
    fn involution(&self, x: &Simplex) -> Result<Simplex, Error> {
        let (l, r) = self.split(x);
        Ok(Self::join(
            self.left.involution(&l)?,
            self.right.involution(&r)?,
        ))
    }
}
